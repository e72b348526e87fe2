#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/affine.hpp"
#include "toric/linalg.hpp"
#include "toric/poset.hpp"

namespace toric {

// A connected toric subspace of T^n = R^n/Z^n in canonical form: the
// saturated lattice of integer functionals constant on it, as a row HNF
// basis, with offsets in [0,1).  Row i imposes eq[i] . x == off[i] (mod 1).
struct ToricSubspace {
    int n = 0;
    IntMat eq;             // HNF basis of a saturated lattice; may be empty (T^n)
    std::vector<Rat> off;  // same length as eq, entries in [0,1)

    int codim() const { return static_cast<int>(eq.size()); }
    int dim() const { return n - codim(); }
    bool contains_point(const std::vector<Rat>& p) const;
    // For dim() == 0: the unique point, coordinates in [0,1).
    std::vector<Rat> point() const;

    auto operator<=>(const ToricSubspace&) const = default;
};

// True if inner is a subset of outer (both connected toric subspaces).
bool toric_subset(const ToricSubspace& inner, const ToricSubspace& outer);

// A toric hyperplane arrangement: hyperplane i is a_i . x == b_i (mod 1)
// with primitive integer normal.
struct ToricArrangement {
    int n = 0;
    std::vector<IntVec> normals;
    std::vector<Rat> offsets;  // in [0,1)

    int m() const { return static_cast<int>(normals.size()); }
    std::optional<RatVec> non_essential_witness() const;
    void require_essential() const;
    ToricSubspace hyperplane(int i) const;

    static ToricArrangement parse(const std::string& text);
    static ToricArrangement load(const std::string& path);
};

// Connected components of the intersection of a set of toric constraint
// rows, via the Smith normal form.  Returns the component list (possibly
// empty).
std::vector<ToricSubspace> intersect_components(int n, const IntMat& rows,
                                                const std::vector<Rat>& offs);
std::vector<ToricSubspace> intersect_components(const ToricArrangement& a,
                                                const std::vector<int>& subset);

// Intersection poset: all components of intersections of subsets of
// hyperplanes (T^n for the empty subset), ordered by reverse inclusion,
// with the empty set adjoined on top.
struct ToricIntersectionPoset {
    GradedPoset poset;
    std::vector<ToricSubspace> subspaces;  // labels; empty top excluded
    int whole_torus_index = -1;
    int empty_index = -1;
};
ToricIntersectionPoset intersection_poset(const ToricArrangement& a);

// chi(t) = sum over subspaces mu(T^n, x) t^{dim x}.
IntPoly toric_characteristic_polynomial(const ToricArrangement& a);

// lcm of the absolute values of the nonzero n x n minors of the normal
// matrix (requires an essential arrangement).
Int n_of_arrangement(const ToricArrangement& a);

// Number of points of the (1/q)-grid lying on no hyperplane; equals chi(q)
// for q a positive multiple of n_of_arrangement(a) exceeding the number of
// hyperplanes.
Int off_hyperplane_grid_count(const ToricArrangement& a, const Int& q);

struct ToricRegionCounts {
    Int by_characteristic;  // (-1)^n chi(0)
    Int by_zaslavsky;       // Z_t of the intersection poset
};
ToricRegionCounts toric_region_count(const ToricArrangement& a);

// psi(T_t) = (a-b)^{n+1} + (1/2) omega(a H'(Psi(P)) b)^*, as an ab-polynomial.
AbPoly psi_toric(const ToricArrangement& a);
// Same through the coalgebra map: phi_t(a Psi(P)) starred.
AbPoly psi_toric_via_phi(const ToricArrangement& a);

// f-vector of the toric face poset from the ab-index of psi_toric.
std::vector<Int> toric_f_vector_from_flag_h(const ToricArrangement& a);
// f-vector directly by Moebius counts on the intersection poset:
// f_{i+1} = (-1)^i sum mu(x, y) over x of dimension i, y of dimension 0.
std::vector<Int> toric_f_vector_from_moebius(const ToricArrangement& a);

// Geometric subdivision of T^2 (n == 2 only): vertices, edges, and faces of
// the cell structure cut out by the arrangement, with a regularity verdict.
struct ToricSubdivision {
    GradedPoset poset;  // rank 4: bottom, vertices, edges, faces, top
    bool regular = false;
    int vertices = 0, edges = 0, faces = 0;
    // For each poset element, the index in adjoin_bottom(P) of its image
    // under the map z_t (smallest toric subspace containing the cell), where
    // P is the intersection poset; indices follow adjoin_bottom numbering.
    std::vector<int> z_of;
};
ToricSubdivision toric_face_poset_2d(const ToricArrangement& a);

}  // namespace toric
