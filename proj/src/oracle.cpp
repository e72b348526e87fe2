#include "toric/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace toric {
namespace oracle {

namespace {

void all_chains_rec(const GradedPoset& p, std::vector<int>& chain,
                    std::vector<std::vector<int>>& out) {
    int x = chain.back();
    if (x == p.top()) {
        out.push_back(chain);
        return;
    }
    for (int y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        chain.push_back(y);
        all_chains_rec(p, chain, out);
        chain.pop_back();
    }
}

}  // namespace

AbPoly ab_index_by_chains(const GradedPoset& p) {
    std::vector<std::vector<int>> chains;
    std::vector<int> chain{p.bottom()};
    all_chains_rec(p, chain, chains);
    AbPoly total;
    for (auto& c : chains) {
        AbPoly w = ab_one();
        for (size_t i = 1; i < c.size(); ++i) {
            w = w * a_minus_b_pow(p.rank(c[i]) - p.rank(c[i - 1]) - 1);
            if (i + 1 < c.size()) w = w * ab_b();
        }
        total += w;
    }
    return total;
}

Int z_fiber_count(const GradedPoset& dom, const std::vector<int>& label,
                  const std::vector<int>& codomain_chain) {
    if (codomain_chain.size() < 2) throw std::invalid_argument("chain too short");
    Int count = 0;
    // DFS over chains of dom matching the codomain chain pointwise.
    std::function<void(int, size_t)> rec = [&](int x, size_t pos) {
        if (pos == codomain_chain.size()) {
            if (x == dom.top()) count += 1;
            return;
        }
        for (int y = 0; y < dom.size(); ++y) {
            if (!dom.less(x, y)) continue;
            if (label[y] != codomain_chain[pos]) continue;
            if (pos + 1 == codomain_chain.size() && y != dom.top()) continue;
            rec(y, pos + 1);
        }
    };
    if (label[dom.bottom()] == codomain_chain[0]) rec(dom.bottom(), 1);
    return count;
}

std::vector<std::vector<int>> maximal_chains(const GradedPoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> chain{p.bottom()};
    std::function<void()> rec = [&] {
        int x = chain.back();
        if (x == p.top()) {
            out.push_back(chain);
            return;
        }
        for (int y : p.covers_up(x)) {
            chain.push_back(y);
            rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<std::vector<int>> bottom_top_chains(const GradedPoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> chain{p.bottom()};
    std::function<void()> rec = [&] {
        int x = chain.back();
        for (int y = 0; y < p.size(); ++y) {
            if (!p.less(x, y)) continue;
            chain.push_back(y);
            if (y == p.top()) out.push_back(chain);
            else rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

GridCensus grid_census(const ToricArrangement& a, const std::vector<int>& subset, long q,
                       int reach) {
    if (q <= 0 || q > 60) throw std::invalid_argument("grid resolution out of supported range");
    double total = 1;
    for (int i = 0; i < a.n; ++i) {
        total *= static_cast<double>(q);
        if (total > 1e6) throw std::length_error("grid too large");
    }
    // Collect grid points on every hyperplane of the subset, and count the
    // points avoiding the whole arrangement.
    std::map<std::vector<long>, int> on_idx;
    std::vector<std::vector<long>> on_pts;
    Int off = 0;
    std::vector<long> k(a.n, 0);
    auto on_plane = [&](int i) {
        Rat s = -a.offsets[i];
        for (int j = 0; j < a.n; ++j) s += Rat(Int(a.normals[i][j]) * k[j], Int(q));
        return denominator(s) == 1;
    };
    while (true) {
        bool on_all = true;
        for (int i : subset)
            if (!on_plane(i)) {
                on_all = false;
                break;
            }
        if (on_all) {
            on_idx[k] = static_cast<int>(on_pts.size());
            on_pts.push_back(k);
        }
        bool on_any = false;
        for (int i = 0; i < a.m() && !on_any; ++i)
            if (on_plane(i)) on_any = true;
        if (!on_any) off += 1;
        int pos = a.n - 1;
        while (pos >= 0) {
            if (++k[pos] < q) break;
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    // Union-find over on-points; steps must satisfy the homogeneous system
    // exactly, which keeps them inside one coset of the direction subtorus.
    std::vector<int> parent(on_pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<long> step(a.n, 0);
    std::function<void(int, size_t)> steps = [&](int base, size_t pos) {
        if (pos == step.size()) {
            bool zero = std::all_of(step.begin(), step.end(), [](long s) { return s == 0; });
            if (zero) return;
            for (int i : subset) {
                Int s = 0;
                for (int j = 0; j < a.n; ++j) s += Int(a.normals[i][j]) * step[j];
                if (s != 0) return;
            }
            std::vector<long> nb(a.n);
            for (int j = 0; j < a.n; ++j) nb[j] = ((on_pts[base][j] + step[j]) % q + q) % q;
            auto it = on_idx.find(nb);
            if (it != on_idx.end()) parent[find(base)] = find(it->second);
            return;
        }
        for (long s = -reach; s <= reach; ++s) {
            step[pos] = s;
            steps(base, pos + 1);
        }
        step[pos] = 0;
    };
    for (size_t i = 0; i < on_pts.size(); ++i) steps(static_cast<int>(i), 0);
    std::map<int, int> roots;
    for (size_t i = 0; i < on_pts.size(); ++i) roots[find(static_cast<int>(i))] = 1;
    return {Int(static_cast<long>(roots.size())), off};
}

AbPoly phi_by_coproduct(const AbPoly& p) {
    AbPoly total = kappa(p);  // k = 1 term
    auto deg = p.homogeneous_degree();
    int maxk = (deg ? *deg : 0) + 1;
    for (int k = 2; k <= maxk; ++k) {
        for (auto& [words, coeff] : coproduct_k(p, k)) {
            AbPoly term = kappa(AbPoly::mono(words[0]));
            for (int i = 1; i < k && !term.is_zero(); ++i)
                term = term * ab_b() * eta(AbPoly::mono(words[i]));
            total += coeff * term;
        }
    }
    return total;
}

AbPoly phi_ub_by_coproduct(const AbPoly& p) {
    AbPoly total = phi(p);
    for (auto& [ww, coeff] : coproduct(p)) {
        AbPoly term = phi(AbPoly::mono(ww.first)) * ab_b() * beta_op(AbPoly::mono(ww.second));
        total -= 2 * coeff * term;
    }
    return total;
}

AbPoly phi_t_a_leading(const AbPoly& p) {
    for (auto& [w, c] : p.t)
        if (w.len == 0 || w.letter(0) != 0)
            throw std::domain_error("phi_t shortcut requires a-leading monomials");
    return kappa(p) + cd_expand(omega(h_prime(p) * ab_b()).half());
}

}  // namespace oracle
}  // namespace toric
