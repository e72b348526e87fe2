#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/poset.hpp"

namespace toric {

// An affine hyperplane arrangement in R^n: hyperplane i is a_i . x = b_i.
struct AffineArrangement {
    int n = 0;
    std::vector<IntVec> normals;  // primitive integer normals
    std::vector<Rat> offsets;

    int m() const { return static_cast<int>(normals.size()); }
    bool is_central() const;
    // A nonzero direction orthogonal to all normals, if the arrangement is
    // not essential.
    std::optional<RatVec> non_essential_witness() const;
    void require_essential() const;

    static AffineArrangement parse(const std::string& text);
    static AffineArrangement load(const std::string& path);
};

// A nonempty affine flat, canonically represented by the RREF of its
// defining system [A | b]; rank(A) = codimension.
struct Flat {
    RatMat rows;  // RREF rows, each of length n+1 (last entry is b)
    int n = 0;

    int codim() const { return static_cast<int>(rows.size()); }
    int dim() const { return n - codim(); }
    bool operator==(const Flat&) const = default;
    bool operator<(const Flat& o) const;
    // F contained in G (as point sets): G's equations implied by F's.
    bool contains(const Flat& inner) const = delete;
};
bool flat_subset(const Flat& inner, const Flat& outer);

// Intersection lattice of an affine arrangement, ordered by reverse
// inclusion.  When the arrangement is not central the empty set is adjoined
// as the top element with rank one above the deepest flats.
struct IntersectionLattice {
    GradedPoset poset;
    std::vector<Flat> flats;      // flats[i] labels poset element i (skipping empty_index)
    int whole_space_index = -1;   // poset element for R^n (the bottom)
    int empty_index = -1;         // poset element for the adjoined empty set, or -1
};
IntersectionLattice intersection_lattice(const AffineArrangement& a);

// chi(t) = sum over nonempty flats mu(0,x) t^{dim x}.
IntPoly characteristic_polynomial(const AffineArrangement& a);

struct RegionCounts {
    Int regions, bounded, unbounded;
};
// Region counts via the Zaslavsky invariants of the intersection lattice.
RegionCounts region_counts(const AffineArrangement& a);
// Independent count by sign-vector enumeration.
RegionCounts region_counts_brute(const AffineArrangement& a);

// Faces of the decomposition of R^n induced by the arrangement, as feasible
// sign vectors (-1/0/+1 per hyperplane).
struct FaceEnum {
    std::vector<std::vector<int>> faces;
    std::vector<int> dim;
    std::vector<bool> unbounded;
};
FaceEnum enumerate_faces(const AffineArrangement& a);

// Face poset of the spherical complex induced by an essential central
// arrangement: bottom is the origin cone, faces are ranked by cone
// dimension, with an artificial top.  flat_of[i] gives the index in the
// intersection lattice of the affine hull of face i (-1 for bottom/top).
struct CentralFacePoset {
    GradedPoset poset;
    IntersectionLattice lattice;
    std::vector<int> flat_of;
};
CentralFacePoset face_poset_central(const AffineArrangement& a);

// cd-index of the central face poset via omega(a * Psi(L)), starred.
CdPoly psi_central(const AffineArrangement& a);

// Structures attached to the unbounded part of a non-central essential
// arrangement.
struct UnboundedStructures {
    IntersectionLattice lattice;     // L, with empty set on top
    GradedPoset l_ub;                // L([1, n-1]): coatom (point) level removed
    GradedPoset t_poset;             // face poset T of the whole decomposition
    GradedPoset t_ub;                // face poset of the sphere of unbounded faces
    GradedPoset q_poset;             // ideal of unbounded faces in T* with a top adjoined
    std::vector<int> t_flat_of;      // per element of t_poset: lattice index or -1
    std::vector<int> q_flat_of;      // per element of q_poset: index in adjoin_bottom(L)
};
UnboundedStructures unbounded_structures(const AffineArrangement& a);

// cd-index of T_ub via omega(a * Psi(L_ub)), starred.
CdPoly psi_unbounded(const AffineArrangement& a);

// Fiber cardinality formulas for a maximal chain of adjoin_bottom(L)
// (indices into that augmented poset, from its bottom to its top).
Int fiber_cardinality_central(const GradedPoset& l_aug, const std::vector<int>& chain);
Int fiber_cardinality_unbounded(const GradedPoset& l_aug, const std::vector<int>& chain);
Int fiber_cardinality_toric(const GradedPoset& p_aug, const std::vector<int>& chain);

}  // namespace toric
