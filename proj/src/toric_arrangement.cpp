#include "toric/toric_arr.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& t) {
    size_t n = t.size();
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(t[i][j]);
        aug[i][n + i] = 1;
    }
    rref(aug);
    IntMat inv(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = aug[i][n + j];
            if (denominator(v) != 1) throw std::logic_error("matrix is not unimodular");
            inv[i][j] = numerator(v);
        }
    return inv;
}

}  // namespace

bool ToricSubspace::contains_point(const std::vector<Rat>& p) const {
    for (size_t i = 0; i < eq.size(); ++i) {
        Rat s = -off[i];
        for (int j = 0; j < n; ++j) s += Rat(eq[i][j]) * p[j];
        if (denominator(s) != 1) return false;
    }
    return true;
}

std::vector<Rat> ToricSubspace::point() const {
    if (dim() != 0) throw std::domain_error("not a zero-dimensional toric subspace");
    // A saturated lattice of full rank is Z^n, whose HNF basis is the
    // identity, so the offsets are the coordinates.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (eq[i][j] != (i == j ? 1 : 0))
                throw std::logic_error("zero-dimensional subspace not in canonical form");
    return off;
}

bool toric_subset(const ToricSubspace& inner, const ToricSubspace& outer) {
    if (inner.n != outer.n) return false;
    RatMat a(inner.eq.size(), RatVec(inner.n));
    for (size_t i = 0; i < inner.eq.size(); ++i)
        for (int j = 0; j < inner.n; ++j) a[i][j] = Rat(inner.eq[i][j]);
    for (size_t r = 0; r < outer.eq.size(); ++r) {
        RatVec u(inner.n);
        for (int j = 0; j < inner.n; ++j) u[j] = Rat(outer.eq[r][j]);
        auto z = solve_left(a, u);
        if (!z) return false;
        Rat s = -outer.off[r];
        for (size_t i = 0; i < z->size(); ++i) {
            if (denominator((*z)[i]) != 1) return false;
            s += (*z)[i] * inner.off[i];
        }
        if (denominator(s) != 1) return false;
    }
    return true;
}

std::optional<RatVec> ToricArrangement::non_essential_witness() const {
    RatMat a(m(), RatVec(n));
    for (int i = 0; i < m(); ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(normals[i][j]);
    if (m() == 0) {
        if (n == 0) return std::nullopt;
        RatVec v(n, Rat(0));
        v[0] = 1;
        return v;
    }
    return kernel_vector(a);
}

void ToricArrangement::require_essential() const {
    if (auto w = non_essential_witness()) {
        std::string s = "toric arrangement is not essential; invariant direction (";
        for (size_t i = 0; i < w->size(); ++i) s += (i ? ", " : "") + rat_str((*w)[i]);
        throw std::domain_error(s + ")");
    }
}

ToricSubspace ToricArrangement::hyperplane(int i) const {
    auto comps = intersect_components(n, {normals[i]}, {offsets[i]});
    if (comps.size() != 1) throw std::logic_error("toric hyperplane must be connected");
    return comps[0];
}

ToricArrangement ToricArrangement::parse(const std::string& raw_text) {
    std::string text = strip_comments(raw_text);
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "toric")
        throw std::invalid_argument("expected header: toric <n>");
    if (n <= 0) throw std::invalid_argument("dimension must be positive");
    ToricArrangement arr;
    arr.n = n;
    std::string line;
    std::getline(in, line);
    std::set<std::pair<IntVec, Rat>> seen;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        IntVec a;
        a.push_back(Int(tok));
        for (int j = 1; j < n; ++j) {
            if (!(ls >> tok)) throw std::invalid_argument("short hyperplane line: " + line);
            a.push_back(Int(tok));
        }
        if (!(ls >> tok) || tok != "|")
            throw std::invalid_argument("expected '|' before offset: " + line);
        if (!(ls >> tok)) throw std::invalid_argument("missing offset: " + line);
        Rat b = parse_rat(tok);
        // Canonical sign: leading nonzero entry of the normal positive.
        Int g = 0;
        for (auto& v : a) g = gcd(g, v);
        if (g == 0) throw std::invalid_argument("hyperplane has zero normal");
        if (g != 1)
            throw std::invalid_argument("toric hyperplane normal must be primitive: " + line);
        int lead = 0;
        while (a[lead] == 0) ++lead;
        if (a[lead] < 0) {
            for (auto& v : a) v = -v;
            b = -b;
        }
        b = mod1(b);
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("duplicate toric hyperplane: " + line);
        arr.normals.push_back(std::move(a));
        arr.offsets.push_back(std::move(b));
    }
    if (arr.m() == 0) throw std::invalid_argument("arrangement has no hyperplanes");
    return arr;
}

ToricArrangement ToricArrangement::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::vector<ToricSubspace> intersect_components(int n, const IntMat& rows,
                                                const std::vector<Rat>& offs) {
    if (rows.empty()) {
        ToricSubspace t;
        t.n = n;
        return {t};
    }
    auto snf = smith_normal_form(rows);
    size_t r = rows.size();
    int rank = 0;
    while (rank < std::min<int>(static_cast<int>(r), n) && snf.D[rank][rank] != 0) ++rank;
    // d' = S * offs
    std::vector<Rat> dp(r, Rat(0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) dp[i] += Rat(snf.S[i][j]) * offs[j];
    for (size_t i = rank; i < r; ++i)
        if (denominator(dp[i]) != 1) return {};  // inconsistent: empty intersection

    // Canonical equation lattice: HNF of the first `rank` rows of T^{-1}.
    IntMat tinv = unimodular_inverse(snf.T);
    IntMat lat(tinv.begin(), tinv.begin() + rank);
    IntMat canon = hnf_rows(lat);

    std::vector<ToricSubspace> out;
    std::vector<Int> counts(rank);
    for (int i = 0; i < rank; ++i) counts[i] = snf.D[i][i];
    std::vector<Int> choice(rank, Int(0));
    while (true) {
        // y_i = (dp_i + choice_i)/d_i for i < rank, free coordinates zero.
        std::vector<Rat> y(n, Rat(0));
        for (int i = 0; i < rank; ++i) y[i] = (dp[i] + Rat(choice[i])) / Rat(snf.D[i][i]);
        std::vector<Rat> x0(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x0[i] += Rat(snf.T[i][j]) * y[j];
        ToricSubspace t;
        t.n = n;
        t.eq = canon;
        for (auto& row : canon) {
            Rat s = 0;
            for (int j = 0; j < n; ++j) s += Rat(row[j]) * x0[j];
            t.off.push_back(mod1(s));
        }
        out.push_back(std::move(t));
        // Advance the mixed-radix choice vector.
        int pos = rank - 1;
        while (pos >= 0) {
            choice[pos] += 1;
            if (choice[pos] < counts[pos]) break;
            choice[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ToricSubspace> intersect_components(const ToricArrangement& a,
                                                const std::vector<int>& subset) {
    IntMat rows;
    std::vector<Rat> offs;
    for (int i : subset) {
        rows.push_back(a.normals[i]);
        offs.push_back(a.offsets[i]);
    }
    return intersect_components(a.n, rows, offs);
}

ToricIntersectionPoset intersection_poset(const ToricArrangement& a) {
    int m = a.m();
    if (m > 20) throw std::length_error("too many hyperplanes for subset enumeration");
    std::set<ToricSubspace> subs;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        for (auto& c : intersect_components(a, subset)) subs.insert(c);
    }
    ToricIntersectionPoset out;
    std::vector<ToricSubspace> elems(subs.begin(), subs.end());
    std::sort(elems.begin(), elems.end(), [](const ToricSubspace& x, const ToricSubspace& y) {
        if (x.codim() != y.codim()) return x.codim() < y.codim();
        return x < y;
    });
    int maxcodim = 0;
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < elems.size(); ++i) {
        ranks.push_back(elems[i].codim());
        maxcodim = std::max(maxcodim, elems[i].codim());
        if (elems[i].codim() == 0) out.whole_torus_index = static_cast<int>(i);
    }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (i != j && elems[i].codim() < elems[j].codim() &&
                toric_subset(elems[j], elems[i]))
                less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.empty_index = static_cast<int>(elems.size());
    ranks.push_back(maxcodim + 1);
    for (size_t i = 0; i < elems.size(); ++i)
        less.emplace_back(static_cast<int>(i), out.empty_index);
    out.subspaces = std::move(elems);
    out.poset = GradedPoset::from_relations(std::move(ranks), less);
    return out;
}

IntPoly toric_characteristic_polynomial(const ToricArrangement& a) {
    auto p = intersection_poset(a);
    std::vector<Int> coeffs(a.n + 1, Int(0));
    for (size_t i = 0; i < p.subspaces.size(); ++i) {
        Int mu = p.poset.moebius(p.whole_torus_index, static_cast<int>(i));
        coeffs[p.subspaces[i].dim()] += mu;
    }
    return IntPoly(std::move(coeffs));
}

Int n_of_arrangement(const ToricArrangement& a) {
    a.require_essential();
    int n = a.n, m = a.m();
    Int l = 1;
    std::vector<int> idx(n);
    // Enumerate n-subsets of hyperplanes and take determinants.
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            RatMat mat(n, RatVec(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mat[i][j] = Rat(a.normals[idx[i]][j]);
            // Determinant via fraction-free elimination on a copy.
            Rat det = 1;
            for (int c = 0; c < n; ++c) {
                int piv = -1;
                for (int r2 = c; r2 < n; ++r2)
                    if (mat[r2][c] != 0) {
                        piv = r2;
                        break;
                    }
                if (piv < 0) {
                    det = 0;
                    break;
                }
                if (piv != c) {
                    std::swap(mat[piv], mat[c]);
                    det = -det;
                }
                det *= mat[c][c];
                for (int r2 = c + 1; r2 < n; ++r2) {
                    Rat f = mat[r2][c] / mat[c][c];
                    for (int c2 = c; c2 < n; ++c2) mat[r2][c2] -= f * mat[c][c2];
                }
            }
            if (det != 0) l = lcm(l, abs(numerator(det)));
            return;
        }
        for (int i = start; i <= m - (n - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return l;
}

Int off_hyperplane_grid_count(const ToricArrangement& a, const Int& q) {
    if (q <= 0 || q > 120) throw std::invalid_argument("grid resolution out of supported range");
    long qi = q.convert_to<long>();
    double total = 1;
    for (int i = 0; i < a.n; ++i) {
        total *= static_cast<double>(qi);
        if (total > 2e6) throw std::length_error("grid too large");
    }
    std::vector<long> k(a.n, 0);
    Int count = 0;
    while (true) {
        bool on_some = false;
        for (int i = 0; i < a.m() && !on_some; ++i) {
            Rat s = -a.offsets[i];
            for (int j = 0; j < a.n; ++j) s += Rat(a.normals[i][j] * k[j], qi);
            if (denominator(s) == 1) on_some = true;
        }
        if (!on_some) count += 1;
        int pos = a.n - 1;
        while (pos >= 0) {
            if (++k[pos] < qi) break;
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return count;
}

ToricRegionCounts toric_region_count(const ToricArrangement& a) {
    a.require_essential();
    auto chi = toric_characteristic_polynomial(a);
    ToricRegionCounts rc;
    rc.by_characteristic = ((a.n % 2) ? Int(-1) : Int(1)) * chi.eval(0);
    rc.by_zaslavsky = zaslavsky_invariants(intersection_poset(a).poset).z_toric;
    return rc;
}

AbPoly psi_toric(const ToricArrangement& a) {
    a.require_essential();
    auto p = intersection_poset(a);
    AbPoly psi_p = ab_index_stanley(p.poset);
    CdPoly w = omega(ab_a() * h_prime(psi_p) * ab_b());
    return a_minus_b_pow(a.n + 1) + cd_expand(w.half().star());
}

AbPoly psi_toric_via_phi(const ToricArrangement& a) {
    a.require_essential();
    auto p = intersection_poset(a);
    return phi_t(ab_a() * ab_index_stanley(p.poset)).star();
}

std::vector<Int> toric_f_vector_from_flag_h(const ToricArrangement& a) {
    a.require_essential();
    int n = a.n;
    auto p = intersection_poset(a);
    auto fv = flag_vectors(p.poset);  // rank n+1, proper ranks 1..n
    auto interval_mask = [&](int lo, int hi) {  // ranks lo..hi inclusive
        std::uint32_t s = 0;
        for (int r = lo; r <= hi; ++r) s |= (1u << (r - 1));
        return s;
    };
    std::vector<Int> f(n + 2, Int(0));  // f[1..n+1]
    f[1] = 1 + fv.h.at(interval_mask(n, n));
    for (int i = 1; i <= n - 1; ++i) {
        Int v = fv.h.at(interval_mask(n - i, n)) + fv.h.at(interval_mask(n - i, n - 1)) +
                fv.h.at(interval_mask(n - i + 1, n));
        // [n-i+1, n-1] is empty when i == 1.
        v += (i == 1) ? fv.h.at(0) : fv.h.at(interval_mask(n - i + 1, n - 1));
        f[i + 1] = v;
    }
    f[n + 1] = fv.h.at(interval_mask(1, n - 1)) + fv.h.at(interval_mask(1, n));
    return std::vector<Int>(f.begin() + 1, f.end());
}

std::vector<Int> toric_f_vector_from_moebius(const ToricArrangement& a) {
    a.require_essential();
    int n = a.n;
    auto p = intersection_poset(a);
    std::vector<Int> f(n + 1, Int(0));
    for (size_t x = 0; x < p.subspaces.size(); ++x)
        for (size_t y = 0; y < p.subspaces.size(); ++y) {
            if (p.subspaces[y].dim() != 0) continue;
            if (!p.poset.leq(static_cast<int>(x), static_cast<int>(y))) continue;
            int i = p.subspaces[x].dim();
            f[i] += ((i % 2) ? Int(-1) : Int(1)) *
                    p.poset.moebius(static_cast<int>(x), static_cast<int>(y));
        }
    return f;  // f[i] counts i-dimensional cells, i = 0..n
}

// ---------------------------------------------------------------------------
// Two-dimensional geometric subdivision oracle.

namespace {

struct Dart {
    int edge;
    int vertex;      // tail vertex
    Int dx, dy;      // outgoing direction
};

}  // namespace

ToricSubdivision toric_face_poset_2d(const ToricArrangement& a) {
    if (a.n != 2) throw std::domain_error("geometric subdivision oracle supports n == 2 only");
    a.require_essential();
    auto p = intersection_poset(a);

    // Vertices: zero-dimensional elements of the intersection poset.
    std::vector<std::vector<Rat>> verts;
    std::vector<int> vert_sub;  // subspace index
    for (size_t i = 0; i < p.subspaces.size(); ++i)
        if (p.subspaces[i].dim() == 0) {
            verts.push_back(p.subspaces[i].point());
            vert_sub.push_back(static_cast<int>(i));
        }
    auto vertex_at = [&](const std::vector<Rat>& pt) {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == pt) return static_cast<int>(i);
        return -1;
    };

    struct Edge {
        int line, v0, v1;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<Dart>> darts_at(verts.size());

    for (int i = 0; i < a.m(); ++i) {
        const Int& a1 = a.normals[i][0];
        const Int& a2 = a.normals[i][1];
        Int pp, qq;
        ext_gcd(a1, a2, pp, qq);
        // Base point x0 with a . x0 = b; direction d = (-a2, a1).
        std::vector<Rat> x0{a.offsets[i] * Rat(pp), a.offsets[i] * Rat(qq)};
        Int d1 = -a2, d2 = a1;
        // Parameters t in [0,1) at which the line passes through each vertex.
        std::vector<std::pair<Rat, int>> hits;
        for (size_t v = 0; v < verts.size(); ++v) {
            Rat s = Rat(a1) * verts[v][0] + Rat(a2) * verts[v][1] - a.offsets[i];
            if (denominator(s) != 1) continue;  // vertex not on this line
            // Solve x0 + t d = vert + k over integer k, t in [0,1).
            int c = (d1 != 0) ? 0 : 1;
            Rat dc = (c == 0) ? Rat(d1) : Rat(d2);
            Rat lo = x0[c], hi = x0[c] + dc;
            if (lo > hi) std::swap(lo, hi);
            Rat diff = lo - verts[v][c];
            Int kmin = numerator(diff) / denominator(diff) - 2;
            Int kmax = kmin + 4 + abs(numerator(dc)) / denominator(dc);
            bool found = false;
            for (Int k = kmin; k <= kmax; ++k) {
                Rat t = (verts[v][c] + Rat(k) - x0[c]) / dc;
                if (t < 0 || t >= 1) continue;
                int o = 1 - c;
                Rat other = x0[o] + t * (o == 0 ? Rat(d1) : Rat(d2)) - verts[v][o];
                if (denominator(other) != 1) continue;
                hits.emplace_back(t, static_cast<int>(v));
                found = true;
                break;  // t is unique per vertex
            }
            (void)found;
        }
        if (hits.empty())
            throw std::logic_error("line without vertices in an essential arrangement");
        std::sort(hits.begin(), hits.end());
        int k = static_cast<int>(hits.size());
        for (int j = 0; j < k; ++j) {
            int v0 = hits[j].second, v1 = hits[(j + 1) % k].second;
            int e = static_cast<int>(edges.size());
            edges.push_back({i, v0, v1});
            darts_at[v0].push_back({e, v0, d1, d2});
            darts_at[v1].push_back({e, v1, -d1, -d2});
        }
    }

    // Rotation system: sort darts counterclockwise around each vertex.
    auto angle_less = [](const Dart& u, const Dart& v) {
        auto half = [](const Int& x, const Int& y) {
            return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
        };
        int hu = half(u.dx, u.dy), hv = half(v.dx, v.dy);
        if (hu != hv) return hu < hv;
        Int cross = u.dx * v.dy - u.dy * v.dx;
        if (cross == 0) throw std::logic_error("coincident directions at a vertex");
        return cross > 0;
    };
    for (auto& ds : darts_at) std::sort(ds.begin(), ds.end(), angle_less);

    // Global dart ids: 2*edge + side, side 0 leaving v0, side 1 leaving v1.
    int ne = static_cast<int>(edges.size());
    auto dart_id = [&](const Dart& d) {
        const Edge& e = edges[d.edge];
        // Distinguish loop darts by direction: side 0 carries +d of its line.
        if (e.v0 == e.v1) {
            const Int& a1 = a.normals[e.line][0];
            return 2 * d.edge + ((d.dx == -a.normals[e.line][1] && d.dy == a1) ? 0 : 1);
        }
        return 2 * d.edge + (d.vertex == e.v0 ? 0 : 1);
    };
    std::vector<int> rot_next(2 * ne, -1);  // dart id -> next dart id ccw at same vertex
    std::vector<const Dart*> by_id(2 * ne, nullptr);
    for (auto& ds : darts_at)
        for (size_t j = 0; j < ds.size(); ++j) {
            int id = dart_id(ds[j]);
            rot_next[id] = dart_id(ds[(j + 1) % ds.size()]);
            by_id[id] = &ds[j];
        }
    auto reverse_id = [&](int id) { return id ^ 1; };

    // Face tracing: next dart of the face is the rotation successor of the
    // reversed dart at its head.
    std::vector<int> face_of(2 * ne, -1);
    std::vector<std::vector<int>> face_darts;
    for (int d = 0; d < 2 * ne; ++d) {
        if (face_of[d] >= 0) continue;
        int f = static_cast<int>(face_darts.size());
        face_darts.emplace_back();
        int cur = d;
        while (face_of[cur] < 0) {
            face_of[cur] = f;
            face_darts[f].push_back(cur);
            cur = rot_next[reverse_id(cur)];
        }
        if (cur != d) throw std::logic_error("face walk did not close");
    }

    ToricSubdivision out;
    out.vertices = static_cast<int>(verts.size());
    out.edges = ne;
    out.faces = static_cast<int>(face_darts.size());
    if (out.vertices - out.edges + out.faces != 0)
        throw std::logic_error("subdivision is not a cellular decomposition of the torus");

    // Regularity: every edge has two distinct endpoints and every face
    // closure is a disk attached along a simple cycle.
    out.regular = true;
    for (auto& e : edges)
        if (e.v0 == e.v1) out.regular = false;
    for (auto& fd : face_darts) {
        std::set<int> vseen, eseen;
        for (int d : fd) {
            if (!vseen.insert(by_id[d]->vertex).second) out.regular = false;
            if (!eseen.insert(d / 2).second) out.regular = false;
        }
    }

    // Poset: 0 bottom, vertices, edges, faces, top.
    int nv = out.vertices, nf = out.faces;
    int base_v = 1, base_e = 1 + nv, base_f = 1 + nv + ne, top = 1 + nv + ne + nf;
    std::vector<int> ranks(top + 1);
    ranks[0] = 0;
    ranks[top] = 4;
    std::vector<std::pair<int, int>> less;
    for (int v = 0; v < nv; ++v) {
        ranks[base_v + v] = 1;
        less.emplace_back(0, base_v + v);
        less.emplace_back(base_v + v, top);
    }
    for (int e = 0; e < ne; ++e) {
        ranks[base_e + e] = 2;
        less.emplace_back(0, base_e + e);
        less.emplace_back(base_e + e, top);
        less.emplace_back(base_v + edges[e].v0, base_e + e);
        if (edges[e].v1 != edges[e].v0) less.emplace_back(base_v + edges[e].v1, base_e + e);
    }
    for (int f = 0; f < nf; ++f) {
        ranks[base_f + f] = 3;
        less.emplace_back(0, base_f + f);
        less.emplace_back(base_f + f, top);
        std::set<int> fedges, fverts;
        for (int d : face_darts[f]) {
            fedges.insert(d / 2);
            fverts.insert(by_id[d]->vertex);
        }
        for (int e : fedges) less.emplace_back(base_e + e, base_f + f);
        for (int v : fverts) less.emplace_back(base_v + v, base_f + f);
    }
    less.emplace_back(0, top);
    out.poset = GradedPoset::from_relations(std::move(ranks), less);

    // z_t labels in adjoin_bottom(P) numbering: the artificial top of the
    // subdivision poset (the whole-torus pseudo-face, which is the bottom of
    // the dual) maps to the adjoined bottom; the empty face maps to the top.
    out.z_of.assign(top + 1, -1);
    out.z_of[0] = p.empty_index + 1;
    out.z_of[top] = 0;
    for (int v = 0; v < nv; ++v) out.z_of[base_v + v] = vert_sub[v] + 1;
    for (int e = 0; e < ne; ++e) {
        ToricSubspace h = a.hyperplane(edges[e].line);
        int idx = -1;
        for (size_t i = 0; i < p.subspaces.size(); ++i)
            if (p.subspaces[i] == h) idx = static_cast<int>(i);
        out.z_of[base_e + e] = idx + 1;
    }
    for (int f = 0; f < nf; ++f) out.z_of[base_f + f] = p.whole_torus_index + 1;
    return out;
}

}  // namespace toric
