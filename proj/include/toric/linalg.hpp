#pragma once

#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

// Reduce m to reduced row echelon form in place, dropping zero rows.
// Returns the pivot column of each remaining row.
std::vector<int> rref(RatMat& m);

int rank_of(RatMat m);

// True if v lies in the row space of the RREF matrix `rows` (pivots as
// returned by rref).
bool in_rowspace(const RatMat& rows, const std::vector<int>& pivots, RatVec v);

// Solve z * A = u over the rationals (A need not be square).
std::optional<RatVec> solve_left(const RatMat& A, const RatVec& u);

// Nonzero rational vector in the kernel of A (A x = 0), if any.
std::optional<RatVec> kernel_vector(const RatMat& A);

// Canonical row Hermite normal form of the lattice spanned by the rows of m:
// row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped.
IntMat hnf_rows(IntMat m);

// Smith normal form: S * A * T = D with S, T unimodular and D diagonal with
// d_1 | d_2 | ..., all nonnegative.
struct Smith {
    IntMat D, S, T;
};
Smith smith_normal_form(IntMat A);

// Linear constraint  a·x + c  REL  0.
enum class Rel { Eq, Ge, Gt };
struct LinCon {
    RatVec a;
    Rat c;
    Rel rel;
};

// Exact feasibility of a system of linear constraints by equality
// substitution followed by Fourier-Motzkin elimination.
bool feasible(int nvars, std::vector<LinCon> cons);

}  // namespace toric
