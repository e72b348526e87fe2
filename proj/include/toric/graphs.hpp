#pragma once

#include <string>
#include <vector>

#include "toric/affine.hpp"
#include "toric/toric_arr.hpp"

namespace toric {

// A finite simple graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

    int components() const;

    // File format: "graph <n>" then one "u v" line per edge (1-indexed).
    static Graph parse(const std::string& text);
    static Graph load(const std::string& path);
};

// Hyperplanes x_u = x_v in R^n, resp. x_u == x_v (mod 1) on T^n.
AffineArrangement graphical_arrangement_euclidean(const Graph& g);
ToricArrangement graphical_arrangement_toric(const Graph& g);

// Chromatic polynomial by deletion-contraction.
IntPoly chromatic_polynomial(const Graph& g);

// Region count of the toric graphical arrangement:
// (-1)^{n-k} [t^k] chi_G(t) with k the number of components.
Int toric_graphical_region_count(const Graph& g);

// Acyclic orientations with a unique specified sink (count is independent
// of the choice of sink within a component for connected graphs); counts
// orientations whose unique sink is vertex 0, by exhaustive enumeration.
Int unique_sink_acyclic_orientations(const Graph& g);

// Total number of acyclic orientations (Stanley: (-1)^n chi_G(-1)).
Int acyclic_orientations_brute(const Graph& g);

}  // namespace toric
