#include "toric/poset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toric {

GradedPoset::GradedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers,
                         bool strict_grading)
    : n_(static_cast<int>(ranks.size())), ranks_(std::move(ranks)), up_(n_), down_(n_) {
    if (n_ == 0) throw std::invalid_argument("empty poset");
    for (auto& [x, y] : covers) {
        if (x < 0 || x >= n_ || y < 0 || y >= n_)
            throw std::invalid_argument("cover relation out of range");
        if (ranks_[y] <= ranks_[x])
            throw std::invalid_argument("cover relation must increase rank");
        if (strict_grading && ranks_[y] != ranks_[x] + 1)
            throw std::invalid_argument("cover relation skips a rank in a graded poset");
        up_[x].push_back(y);
        down_[y].push_back(x);
    }
    for (auto& v : up_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : down_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (int x = 0; x < n_; ++x) {
        if (down_[x].empty()) {
            if (bottom_ >= 0 && n_ > 1)
                throw std::invalid_argument("poset is not bounded below");
            bottom_ = x;
        }
        if (up_[x].empty()) {
            if (top_ >= 0 && n_ > 1) throw std::invalid_argument("poset is not bounded above");
            top_ = x;
        }
    }
    if (n_ == 1) bottom_ = top_ = 0;
    if (ranks_[bottom_] != 0) throw std::invalid_argument("bottom element must have rank 0");
    for (int x = 0; x < n_; ++x)
        if (ranks_[x] > ranks_[top_])
            throw std::invalid_argument("element ranked above the top element");
}

GradedPoset GradedPoset::from_relations(std::vector<int> ranks,
                                        const std::vector<std::pair<int, int>>& less,
                                        bool strict_grading) {
    int n = static_cast<int>(ranks.size());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (auto& [x, y] : less) {
        if (x == y) throw std::invalid_argument("reflexive relation in strict order");
        lt[x][y] = true;
    }
    // Transitive closure (ranks bound chain length).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (lt[x][y])
                    for (int z = 0; z < n; ++z)
                        if (lt[y][z] && !lt[x][z]) {
                            lt[x][z] = true;
                            changed = true;
                        }
    }
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!lt[x][y]) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (lt[x][z] && lt[z][y]) cover = false;
            if (cover) covers.emplace_back(x, y);
        }
    return GradedPoset(std::move(ranks), std::move(covers), strict_grading);
}

void GradedPoset::ensure_reach() const {
    std::call_once(cache_->reach_once, [&] {
        size_t words = (n_ + 63) / 64;
        auto& reach = cache_->reach;
        reach.assign(n_, std::vector<std::uint64_t>(words, 0));
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return ranks_[x] > ranks_[y]; });
        for (int x : order) {
            reach[x][x / 64] |= (1ULL << (x % 64));
            for (int y : up_[x])
                for (size_t w = 0; w < words; ++w) reach[x][w] |= reach[y][w];
        }
    });
}

bool GradedPoset::leq(int x, int y) const {
    ensure_reach();
    return (cache_->reach[x][y / 64] >> (y % 64)) & 1;
}

std::vector<int> GradedPoset::elements_of_rank(int r) const {
    std::vector<int> v;
    for (int x = 0; x < n_; ++x)
        if (ranks_[x] == r) v.push_back(x);
    return v;
}

std::vector<int> GradedPoset::open_interval(int x, int y) const {
    std::vector<int> v;
    for (int z = 0; z < n_; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) v.push_back(z);
    return v;
}

const std::vector<Int>& GradedPoset::moebius_row(int x) const {
    ensure_reach();
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& moebius_rows_ = cache_->moebius_rows;
    auto it = moebius_rows_.find(x);
    if (it != moebius_rows_.end()) return it->second;
    std::vector<Int> row(n_, Int(0));
    std::vector<int> ys;
    for (int y = 0; y < n_; ++y)
        if (leq(x, y)) ys.push_back(y);
    std::sort(ys.begin(), ys.end(), [&](int u, int v) { return ranks_[u] < ranks_[v]; });
    for (int y : ys) {
        if (y == x) {
            row[y] = 1;
            continue;
        }
        Int s = 0;
        for (int z : ys)
            if (z != y && leq(z, y)) s += row[z];
        row[y] = -s;
    }
    return moebius_rows_.emplace(x, std::move(row)).first->second;
}

Int GradedPoset::moebius(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("moebius requires x <= y");
    return moebius_row(x)[y];
}

bool GradedPoset::operator==(const GradedPoset& o) const {
    return ranks_ == o.ranks_ && up_ == o.up_;
}

Word u_word(std::uint32_t s, int height) {
    Word w;
    for (int i = 1; i < height; ++i) w = w.append((s >> (i - 1)) & 1u);
    return w;
}

FlagVector flag_vectors(const GradedPoset& p) {
    int rho = p.height();
    if (rho > 20) throw std::length_error("poset rank too large for flag vector enumeration");
    FlagVector fv;
    fv.height = rho;
    std::uint32_t full = (rho >= 1) ? ((1u << (rho - 1)) - 1) : 0;
    for (std::uint32_t s = 0; s <= full; ++s) {
        std::vector<int> levels;
        for (int r = 1; r < rho; ++r)
            if ((s >> (r - 1)) & 1u) levels.push_back(r);
        // Count chains hitting exactly the ranks in `levels`.
        std::map<int, Int> cnt;
        cnt[p.bottom()] = 1;
        for (int r : levels) {
            std::map<int, Int> next;
            for (int y : p.elements_of_rank(r)) {
                Int s2 = 0;
                for (auto& [x, c] : cnt)
                    if (p.leq(x, y)) s2 += c;
                if (s2 != 0) next[y] = s2;
            }
            cnt = std::move(next);
        }
        Int f = 0;
        for (auto& [x, c] : cnt)
            if (p.leq(x, p.top())) f += c;
        fv.f[s] = f;
        if (s == 0 && fv.f[s] != 1) throw std::logic_error("empty flag must count one chain");
    }
    for (std::uint32_t s = 0; s <= full; ++s) {
        Int h = 0;
        for (std::uint32_t t = s;; t = (t - 1) & s) {
            int bits_diff = std::popcount(s ^ t);
            h += ((bits_diff % 2) ? Int(-1) : Int(1)) * fv.f.at(t);
            if (t == 0) break;
        }
        fv.h[s] = h;
    }
    return fv;
}

AbPoly ab_index_flag_h(const GradedPoset& p) {
    auto fv = flag_vectors(p);
    AbPoly r;
    for (auto& [s, h] : fv.h) r.add_term(u_word(s, fv.height), h);
    return r;
}

namespace {

void chains_rec(const GradedPoset& p, int x, const AbPoly& prefix, AbPoly& total) {
    for (int y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        AbPoly step = prefix * a_minus_b_pow(p.rank(y) - p.rank(x) - 1);
        if (y == p.top())
            total += step;
        else
            chains_rec(p, y, step * ab_b(), total);
    }
}

}  // namespace

AbPoly ab_index_chain(const GradedPoset& p) {
    AbPoly total;
    chains_rec(p, p.bottom(), ab_one(), total);
    return total;
}

AbPoly ab_index_stanley(const GradedPoset& p) {
    std::vector<int> order;
    for (int x = 0; x < p.size(); ++x)
        if (x != p.top()) order.push_back(x);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return p.rank(x) > p.rank(y); });
    std::vector<AbPoly> psi(p.size());
    for (int x : order) {
        if (!p.leq(x, p.top())) continue;
        AbPoly r = a_minus_b_pow(p.height() - p.rank(x) - 1);
        for (int y : p.open_interval(x, p.top()))
            r += a_minus_b_pow(p.rank(y) - p.rank(x) - 1) * ab_b() * psi[y];
        psi[x] = std::move(r);
    }
    return psi[p.bottom()];
}

CdPoly cd_index(const GradedPoset& p) {
    auto res = ab_to_cd(ab_index_stanley(p));
    if (!res.ok()) throw std::domain_error("ab-index is not a cd-polynomial");
    return res.cd;
}

Zaslavsky zaslavsky_invariants(const GradedPoset& p) {
    Zaslavsky z{0, 0, 0, 0};
    for (int x = 0; x < p.size(); ++x) {
        if (!p.leq(p.bottom(), x)) continue;
        Int m = p.moebius(p.bottom(), x);
        z.z += ((p.rank(x) % 2) ? Int(-1) : Int(1)) * m;
    }
    int rho = p.height();
    z.z_bounded = ((rho % 2) ? Int(-1) : Int(1)) * p.moebius();
    Int coat = 0;
    for (int x : p.coatoms()) coat += p.moebius(p.bottom(), x);
    z.z_toric = (((rho - 1) % 2) ? Int(-1) : Int(1)) * coat;
    z.z_unbounded = z.z - 2 * z.z_bounded;
    return z;
}

bool is_eulerian(const GradedPoset& p) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            Int expect = ((p.rank(y) - p.rank(x)) % 2) ? Int(-1) : Int(1);
            if (p.moebius(x, y) != expect) return false;
        }
    return true;
}

GradedPoset dual(const GradedPoset& p) {
    int rho = p.height();
    std::vector<int> ranks(p.size());
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < p.size(); ++x) {
        ranks[x] = rho - p.rank(x);
        for (int y : p.covers_up(x)) covers.emplace_back(y, x);
    }
    return GradedPoset(std::move(ranks), std::move(covers), false);
}

GradedPoset interval(const GradedPoset& p, int x, int y) {
    if (!p.leq(x, y)) throw std::invalid_argument("interval requires x <= y");
    std::vector<int> elems;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) elems.push_back(z);
    std::vector<int> idx(p.size(), -1);
    std::vector<int> ranks;
    for (size_t i = 0; i < elems.size(); ++i) {
        idx[elems[i]] = static_cast<int>(i);
        ranks.push_back(p.rank(elems[i]) - p.rank(x));
    }
    std::vector<std::pair<int, int>> covers;
    for (int u : elems)
        for (int v : p.covers_up(u))
            if (idx[v] >= 0) covers.emplace_back(idx[u], idx[v]);
    return GradedPoset(std::move(ranks), std::move(covers), false);
}

GradedPoset rank_selection(const GradedPoset& p, const std::set<int>& s) {
    std::vector<int> levels(s.begin(), s.end());
    for (int r : levels)
        if (r < 1 || r >= p.height())
            throw std::invalid_argument("rank selection outside proper ranks");
    std::vector<int> elems{p.bottom()};
    std::vector<int> ranks{0};
    for (size_t i = 0; i < levels.size(); ++i)
        for (int x : p.elements_of_rank(levels[i])) {
            elems.push_back(x);
            ranks.push_back(static_cast<int>(i) + 1);
        }
    elems.push_back(p.top());
    ranks.push_back(static_cast<int>(levels.size()) + 1);
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (i != j && p.less(elems[i], elems[j]))
                less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return GradedPoset::from_relations(std::move(ranks), less, false);
}

GradedPoset adjoin_bottom(const GradedPoset& p) {
    std::vector<int> ranks(p.size() + 1);
    ranks[0] = 0;
    for (int x = 0; x < p.size(); ++x) ranks[x + 1] = p.rank(x) + 1;
    std::vector<std::pair<int, int>> covers{{0, p.bottom() + 1}};
    for (int x = 0; x < p.size(); ++x)
        for (int y : p.covers_up(x)) covers.emplace_back(x + 1, y + 1);
    return GradedPoset(std::move(ranks), std::move(covers), false);
}

GradedPoset boolean_lattice(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("boolean lattice size out of range");
    int size = 1 << n;
    std::vector<int> ranks(size);
    std::vector<std::pair<int, int>> covers;
    for (int s = 0; s < size; ++s) {
        ranks[s] = std::popcount(static_cast<unsigned>(s));
        for (int i = 0; i < n; ++i)
            if (!(s & (1 << i))) covers.emplace_back(s, s | (1 << i));
    }
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset butterfly_poset(int rank) {
    if (rank < 1) throw std::invalid_argument("butterfly rank must be positive");
    std::vector<int> ranks{0};
    std::vector<std::vector<int>> level(rank + 1);
    level[0] = {0};
    for (int r = 1; r < rank; ++r)
        for (int k = 0; k < 2; ++k) {
            level[r].push_back(static_cast<int>(ranks.size()));
            ranks.push_back(r);
        }
    level[rank] = {static_cast<int>(ranks.size())};
    ranks.push_back(rank);
    std::vector<std::pair<int, int>> covers;
    for (int r = 0; r < rank; ++r)
        for (int x : level[r])
            for (int y : level[r + 1]) covers.emplace_back(x, y);
    return GradedPoset(std::move(ranks), std::move(covers));
}

GradedPoset chain_poset(int length) {
    std::vector<int> ranks(length + 1);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i <= length; ++i) ranks[i] = i;
    for (int i = 0; i < length; ++i) covers.emplace_back(i, i + 1);
    return GradedPoset(std::move(ranks), std::move(covers));
}

Int euler_char(const GradedPoset& p) { return p.moebius() + 1; }

ManifoldDecomposition manifold_decomposition(const GradedPoset& p, const Int& chi) {
    if (chi % 2 != 0)
        throw std::domain_error("manifold decomposition requires an even Euler characteristic");
    int deg = p.height() - 1;  // n + 1
    ManifoldDecomposition md;
    md.c2 = chi / 2;
    md.c1 = 1 - md.c2;
    AbPoly rest = ab_index_stanley(p) - md.c1 * a_minus_b_pow(deg) -
                  md.c2 * cd_expand(c_pow(deg));
    auto res = ab_to_cd(rest);
    if (!res.ok())
        throw std::domain_error("ab-index minus sphere part is not a cd-polynomial");
    if (res.cd.coeff(pow_word(0, deg)) != 0)
        throw std::logic_error("unexpected pure-c term in manifold decomposition");
    md.phi = std::move(res.cd);
    return md;
}

AbPoly projective_quotient_psi(const CdPoly& psi_sphere, int n) {
    CdPoly phi_part = psi_sphere;
    Word cn = pow_word(0, n + 1);
    if (phi_part.coeff(cn) != 1)
        throw std::domain_error("sphere cd-index must have coefficient one on c^(n+1)");
    phi_part.add_term(cn, Int(-1));
    return (cd_expand(c_pow(n + 1)) + a_minus_b_pow(n + 1) + cd_expand(phi_part)).half();
}

namespace {

void interval_chains(const GradedPoset& p, int x, int steps_left, std::vector<int>& chain,
                     std::vector<std::vector<int>>& out) {
    if (steps_left == 0) {
        if (x == p.top()) out.push_back(chain);
        return;
    }
    for (int y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        if (steps_left == 1 && y != p.top()) continue;
        if (steps_left > 1 && y == p.top()) continue;
        chain.push_back(y);
        interval_chains(p, y, steps_left - 1, chain, out);
        chain.pop_back();
    }
}

}  // namespace

bool coalgebra_chain_identity_check(const GradedPoset& p, const MultilinearMap& m, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::map<std::pair<int, int>, AbPoly> psi_cache;
    auto psi_int = [&](int x, int y) -> const AbPoly& {
        auto key = std::make_pair(x, y);
        auto it = psi_cache.find(key);
        if (it == psi_cache.end())
            it = psi_cache.emplace(key, ab_index_stanley(interval(p, x, y))).first;
        return it->second;
    };
    AbPoly lhs;
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    interval_chains(p, p.bottom(), k, chain, chains);
    for (auto& c : chains) {
        std::vector<AbPoly> args;
        int prev = p.bottom();
        for (int y : c) {
            args.push_back(psi_int(prev, y));
            prev = y;
        }
        lhs += m(args);
    }
    AbPoly rhs;
    for (auto& [words, coeff] : coproduct_k(ab_index_stanley(p), k)) {
        std::vector<AbPoly> args;
        for (auto& w : words) args.push_back(AbPoly::mono(w));
        rhs += coeff * m(args);
    }
    return lhs == rhs;
}

GradedPoset parse_poset(const std::string& raw_text) {
    std::string text = strip_comments(raw_text);
    std::istringstream in(text);
    std::string tag;
    int n = 0, rho = 0;
    if (!(in >> tag >> n >> rho) || tag != "poset")
        throw std::invalid_argument("expected header: poset <n> <rank>");
    std::map<long long, int> idx;
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> less;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string t1, t2, t3;
        if (!(ls >> t1)) continue;
        if (t1[0] == '#') continue;
        if (!(ls >> t2)) throw std::invalid_argument("malformed poset line: " + line);
        if (ls >> t3) {  // "x < y"
            if (t2 != "<") throw std::invalid_argument("expected '<' in relation: " + line);
            long long x = std::stoll(t1), y = std::stoll(t3);
            if (!idx.count(x) || !idx.count(y))
                throw std::invalid_argument("relation references unknown element: " + line);
            less.emplace_back(idx[x], idx[y]);
        } else {  // "id rank"
            long long id = std::stoll(t1);
            if (idx.count(id)) throw std::invalid_argument("duplicate element id: " + t1);
            idx[id] = static_cast<int>(ranks.size());
            ranks.push_back(std::stoi(t2));
        }
    }
    if (static_cast<int>(ranks.size()) != n)
        throw std::invalid_argument("poset element count does not match header");
    auto p = GradedPoset::from_relations(std::move(ranks), less);
    if (p.height() != rho)
        throw std::invalid_argument("poset rank does not match header");
    return p;
}

GradedPoset load_poset(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_poset(ss.str());
}

}  // namespace toric
