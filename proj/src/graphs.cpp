#include "toric/graphs.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace toric {

int Graph::components() const {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : edges) parent[find(u)] = find(v);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

Graph Graph::parse(const std::string& raw_text) {
    std::string text = strip_comments(raw_text);
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "graph")
        throw std::invalid_argument("expected header: graph <n>");
    if (n <= 0) throw std::invalid_argument("graph must have a positive number of vertices");
    Graph g;
    g.n = n;
    std::set<std::pair<int, int>> seen;
    int u, v;
    while (in >> u >> v) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::invalid_argument("bad edge " + std::to_string(u) + " " + std::to_string(v));
        std::pair<int, int> e = std::minmax(u - 1, v - 1);
        if (!seen.insert({e.first, e.second}).second)
            throw std::invalid_argument("duplicate edge");
    }
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

Graph Graph::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

namespace {

IntVec edge_normal(int n, int u, int v) {
    IntVec a(n, Int(0));
    a[u] = 1;
    a[v] = -1;
    return a;
}

}  // namespace

AffineArrangement graphical_arrangement_euclidean(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("graph has no edges");
    AffineArrangement arr;
    arr.n = g.n;
    for (auto& [u, v] : g.edges) {
        arr.normals.push_back(edge_normal(g.n, u, v));
        arr.offsets.push_back(Rat(0));
    }
    return arr;
}

ToricArrangement graphical_arrangement_toric(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("graph has no edges");
    ToricArrangement arr;
    arr.n = g.n;
    for (auto& [u, v] : g.edges) {
        arr.normals.push_back(edge_normal(g.n, u, v));
        arr.offsets.push_back(Rat(0));
    }
    return arr;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Memo keyed on the exact labeled graph (vertex count + sorted edge list);
// hits only on identical graphs, which is always sound.
std::map<std::pair<int, EdgeList>, IntPoly> chroma_memo;

IntPoly chroma(int n, EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    if (edges.empty()) return IntPoly::monomial(n);
    auto key = std::make_pair(n, edges);
    auto it = chroma_memo.find(key);
    if (it != chroma_memo.end()) return it->second;

    auto [u, v] = edges.back();
    EdgeList del(edges.begin(), edges.end() - 1);
    // Contract v into u, discard loops, collapse parallel edges.
    std::set<std::pair<int, int>> con;
    for (auto& [x, y] : del) {
        int a = x == v ? u : x;
        int b = y == v ? u : y;
        if (a == b) continue;
        if (a > v) --a;  // relabel to keep vertices 0..n-2
        if (b > v) --b;
        con.insert(std::minmax(a, b));
    }
    IntPoly res = chroma(n, del) - chroma(n - 1, EdgeList(con.begin(), con.end()));
    chroma_memo.emplace(key, res);
    return res;
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& g) { return chroma(g.n, g.edges); }

Int toric_graphical_region_count(const Graph& g) {
    int k = g.components();
    IntPoly chi = chromatic_polynomial(g);
    Int c = chi.coeff(k);
    return ((g.n - k) % 2) ? Int(-c) : c;
}

namespace {

bool acyclic(int n, const EdgeList& edges, unsigned mask) {
    // Orientation: bit e set means edge e directed from second to first.
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (mask & (1u << e))
            adj[v].push_back(u);
        else
            adj[u].push_back(v);
    }
    std::vector<int> state(n, 0);
    std::function<bool(int)> dfs = [&](int x) {
        state[x] = 1;
        for (int y : adj[x]) {
            if (state[y] == 1) return false;
            if (state[y] == 0 && !dfs(y)) return false;
        }
        state[x] = 2;
        return true;
    };
    for (int x = 0; x < n; ++x)
        if (state[x] == 0 && !dfs(x)) return false;
    return true;
}

std::vector<int> sinks(int n, const EdgeList& edges, unsigned mask) {
    std::vector<int> outdeg(n, 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        outdeg[(mask & (1u << e)) ? v : u]++;
    }
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
        if (outdeg[x] == 0) s.push_back(x);
    return s;
}

}  // namespace

Int unique_sink_acyclic_orientations(const Graph& g) {
    if (g.edges.size() > 24) throw std::length_error("too many edges for orientation enumeration");
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << g.edges.size()); ++mask) {
        if (!acyclic(g.n, g.edges, mask)) continue;
        auto s = sinks(g.n, g.edges, mask);
        if (s.size() == 1 && s[0] == 0) count += 1;
    }
    return count;
}

Int acyclic_orientations_brute(const Graph& g) {
    if (g.edges.size() > 24) throw std::length_error("too many edges for orientation enumeration");
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << g.edges.size()); ++mask)
        if (acyclic(g.n, g.edges, mask)) count += 1;
    return count;
}

}  // namespace toric
