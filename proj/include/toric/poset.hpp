#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "toric/ncpoly.hpp"
#include "toric/numeric.hpp"

namespace toric {

// A finite bounded poset with an explicit rank function.  With
// strict_grading every cover relation must raise rank by exactly one
// (construction throws otherwise); some derived posets (e.g. ideals with a
// top adjoined) carry rank labels with gaps and are built relaxed.
class GradedPoset {
public:
    GradedPoset() = default;  // empty placeholder; most operations are invalid on it
    GradedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers,
                bool strict_grading = true);

    // Build from an arbitrary list of strict order relations; covers are
    // recovered by transitive reduction.
    static GradedPoset from_relations(std::vector<int> ranks,
                                      const std::vector<std::pair<int, int>>& less,
                                      bool strict_grading = true);

    int size() const { return n_; }
    int rank(int x) const { return ranks_[x]; }
    int height() const { return ranks_[top_]; }  // rank of the top element
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool leq(int x, int y) const;
    bool less(int x, int y) const { return x != y && leq(x, y); }
    const std::vector<int>& covers_up(int x) const { return up_[x]; }
    const std::vector<int>& covers_down(int x) const { return down_[x]; }
    std::vector<int> elements_of_rank(int r) const;
    std::vector<int> atoms() const { return up_[bottom_]; }
    std::vector<int> coatoms() const { return down_[top_]; }
    std::vector<int> open_interval(int x, int y) const;  // strictly between

    Int moebius(int x, int y) const;
    Int moebius() const { return moebius(bottom_, top_); }

    bool operator==(const GradedPoset&) const;

private:
    void ensure_reach() const;
    const std::vector<Int>& moebius_row(int x) const;

    int n_ = 0;
    std::vector<int> ranks_;
    std::vector<std::vector<int>> up_, down_;
    int bottom_ = -1, top_ = -1;

    // Lazily built caches, shared between copies (poset data is immutable).
    struct Cache {
        std::once_flag reach_once;
        std::vector<std::vector<std::uint64_t>> reach;  // reach[x]: bitset of {y : x <= y}
        std::mutex mu;
        std::map<int, std::vector<Int>> moebius_rows;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Flag f- and h-vectors; subsets of ranks {1, ..., height-1} are encoded as
// bitmasks with bit (r-1) for rank r.
struct FlagVector {
    int height = 0;
    std::map<std::uint32_t, Int> f, h;
};
FlagVector flag_vectors(const GradedPoset& p);

// The ab-monomial u_S of degree height-1 (bit i of S set => letter b in
// position i).
Word u_word(std::uint32_t s, int height);

// Three routes to the ab-index.
AbPoly ab_index_chain(const GradedPoset& p);    // explicit chain enumeration
AbPoly ab_index_stanley(const GradedPoset& p);  // Stanley's recursion
AbPoly ab_index_flag_h(const GradedPoset& p);   // sum of h_S u_S

// cd-index; throws std::domain_error if the ab-index is not a cd-polynomial.
CdPoly cd_index(const GradedPoset& p);

struct Zaslavsky {
    Int z, z_bounded, z_toric, z_unbounded;
};
Zaslavsky zaslavsky_invariants(const GradedPoset& p);

bool is_eulerian(const GradedPoset& p);

GradedPoset dual(const GradedPoset& p);
GradedPoset interval(const GradedPoset& p, int x, int y);
// Subposet on elements whose rank lies in S (plus bottom and top); ranks are
// renumbered positionally.  Built relaxed: maximal chains may skip levels.
GradedPoset rank_selection(const GradedPoset& p, const std::set<int>& s);
GradedPoset adjoin_bottom(const GradedPoset& p);

GradedPoset boolean_lattice(int n);
GradedPoset butterfly_poset(int rank);
GradedPoset chain_poset(int length);

// Euler characteristic of the order complex of the proper part: mu + 1.
Int euler_char(const GradedPoset& p);

// Decompose the ab-index of the face poset of a manifold as
// c1 (a-b)^{n+1} + c2 c^{n+1} + Phi with c1 = 1 - chi/2, c2 = chi/2.
// Requires chi even.
struct ManifoldDecomposition {
    Int c1, c2;
    CdPoly phi;
};
ManifoldDecomposition manifold_decomposition(const GradedPoset& p, const Int& chi);

// psi of the quotient of a centrally symmetric n-sphere with cd-index
// c^{n+1} + phi_part:  (c^{n+1} + (a-b)^{n+1})/2 + phi_part/2.
AbPoly projective_quotient_psi(const CdPoly& psi_sphere, int n);

// Verify sum over chains of M(Psi intervals) == M applied to the k-fold
// coproduct of Psi(P), for a k-multilinear M given as a callback.
using MultilinearMap = std::function<AbPoly(const std::vector<AbPoly>&)>;
bool coalgebra_chain_identity_check(const GradedPoset& p, const MultilinearMap& m, int k);

// File format:
//   poset <n> <rank>
//   <id> <rank>          (one per element)
//   <id> < <id>          (cover or order relations)
GradedPoset parse_poset(const std::string& text);
GradedPoset load_poset(const std::string& path);

}  // namespace toric
