#pragma once

#include <vector>

#include "toric/ncpoly.hpp"
#include "toric/poset.hpp"
#include "toric/toric_arr.hpp"

namespace toric {
namespace oracle {

// Naive ab-index: materialize every maximal-by-endpoints chain and sum its
// weight.  Independent of the recursive and flag-vector implementations.
AbPoly ab_index_by_chains(const GradedPoset& p);

// Given a poset `dom` whose elements are labeled by elements of a codomain
// poset (label[i] = element of codomain), count the chains
// bottom = y_0 < ... < y_k = top of dom whose image under the labeling is
// exactly the given codomain chain, pointwise.
Int z_fiber_count(const GradedPoset& dom, const std::vector<int>& label,
                  const std::vector<int>& codomain_chain);

// All maximal (bottom-to-top) chains of a poset, as element index sequences.
std::vector<std::vector<int>> maximal_chains(const GradedPoset& p);

// All bottom-to-top chains, saturated or not (the two-element chain
// included).
std::vector<std::vector<int>> bottom_top_chains(const GradedPoset& p);

// Grid census for a toric arrangement: sample the (1/q)-grid and cluster
// the points lying on every hyperplane of `subset` into connected cosets.
// Two on-points are adjacent when their difference step (entries bounded by
// `reach`/q) satisfies the homogeneous system exactly.  Returns the number
// of clusters and the number of grid points on no hyperplane at all.
struct GridCensus {
    Int clusters;
    Int off_points;
};
GridCensus grid_census(const ToricArrangement& a, const std::vector<int>& subset, long q,
                       int reach);

// phi via the coproduct-sum definition:
//   phi(v) = sum_k sum kappa(v_(1)) b eta(v_(2)) b ... b eta(v_(k)).
AbPoly phi_by_coproduct(const AbPoly& p);
// phi_ub via the subtracted-sum definition:
//   phi_ub(v) = phi(v) - 2 sum phi(v_(1)) b beta(v_(2)).
AbPoly phi_ub_by_coproduct(const AbPoly& p);
// phi_t on an a-leading homogeneous polynomial: kappa(v) + omega(H'(v) b)/2
// pulled through a-leading monomials.
AbPoly phi_t_a_leading(const AbPoly& p);

}  // namespace oracle
}  // namespace toric
