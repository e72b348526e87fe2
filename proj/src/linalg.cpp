#include "toric/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

std::string int_str(const Int& v) { return v.str(); }

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '\n') in_comment = false;
        else if (ch == '#') in_comment = true;
        if (!in_comment) out.push_back(ch);
    }
    return out;
}

std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rat(num, den);
}

Rat mod1(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return r - q;
}

std::string IntPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = c[k];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat p = m[row][col];
        for (auto& v : m[row]) v /= p;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c2 = 0; c2 < ncols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

int rank_of(RatMat m) { return static_cast<int>(rref(m).size()); }

bool in_rowspace(const RatMat& rows, const std::vector<int>& pivots, RatVec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        Rat f = v[pivots[r]];
        if (f == 0) continue;
        for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::optional<RatVec> solve_left(const RatMat& A, const RatVec& u) {
    // z * A = u  <=>  A^T z^T = u^T: solve by RREF of [A^T | u].
    size_t r = A.size();
    if (r == 0) {
        for (auto& x : u)
            if (x != 0) return std::nullopt;
        return RatVec{};
    }
    size_t n = A[0].size();
    RatMat aug(n, RatVec(r + 1, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) aug[j][i] = A[i][j];
    for (size_t j = 0; j < n; ++j) aug[j][r] = u[j];
    auto piv = rref(aug);
    RatVec z(r, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == static_cast<int>(r)) return std::nullopt;  // inconsistent
        z[piv[i]] = aug[i][r];
    }
    // Verify (guards against underdetermined pivots skipping columns).
    for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < r; ++i) s += z[i] * A[i][j];
        if (s != u[j]) return std::nullopt;
    }
    return z;
}

std::optional<RatVec> kernel_vector(const RatMat& A) {
    if (A.empty()) return std::nullopt;
    size_t n = A[0].size();
    RatMat m = A;
    auto piv = rref(m);
    if (piv.size() == n) return std::nullopt;
    std::set<int> pivset(piv.begin(), piv.end());
    int freecol = -1;
    for (size_t c = 0; c < n; ++c)
        if (!pivset.count(static_cast<int>(c))) {
            freecol = static_cast<int>(c);
            break;
        }
    RatVec v(n, Rat(0));
    v[freecol] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][freecol];
    return v;
}

IntMat hnf_rows(IntMat m) {
    if (m.empty()) return m;
    size_t ncols = m[0].size();
    size_t row = 0;
    std::vector<int> pivcols;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        // Gcd-reduce entries in this column at rows >= row.
        while (true) {
            size_t best = row;
            for (size_t r = row; r < m.size(); ++r) {
                if (m[r][col] == 0) continue;
                if (m[best][col] == 0 || abs(m[r][col]) < abs(m[best][col])) best = r;
            }
            if (m[best][col] == 0) break;
            std::swap(m[row], m[best]);
            bool clean = true;
            for (size_t r = row + 1; r < m.size(); ++r) {
                if (m[r][col] == 0) continue;
                Int q = m[r][col] / m[row][col];
                for (size_t c = 0; c < ncols; ++c) m[r][c] -= q * m[row][c];
                if (m[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (auto& v : m[row]) v = -v;
        pivcols.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    // Reduce entries above pivots into [0, pivot).
    for (size_t r = 0; r < m.size(); ++r) {
        int col = pivcols[r];
        for (size_t r2 = 0; r2 < r; ++r2) {
            Int q = m[r2][col] / m[r][col];
            if (m[r2][col] % m[r][col] < 0) q -= 1;
            if (q == 0) continue;
            for (size_t c = 0; c < ncols; ++c) m[r2][c] -= q * m[r][c];
        }
    }
    return m;
}

static IntMat identity_mat(size_t n) {
    IntMat m(n, IntVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Smith smith_normal_form(IntMat A) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    Smith res{A, identity_mat(rows), identity_mat(cols)};
    auto& D = res.D;
    auto& S = res.S;
    auto& T = res.T;

    auto row_op = [&](size_t i, size_t j, const Int& q) {  // row_i -= q*row_j
        for (size_t c = 0; c < cols; ++c) D[i][c] -= q * D[j][c];
        for (size_t c = 0; c < rows; ++c) S[i][c] -= q * S[j][c];
    };
    auto col_op = [&](size_t i, size_t j, const Int& q) {  // col_i -= q*col_j
        for (size_t r = 0; r < rows; ++r) D[r][i] -= q * D[r][j];
        for (size_t r = 0; r < cols; ++r) T[r][i] -= q * T[r][j];
    };
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(D[i], D[j]);
        std::swap(S[i], S[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(D[r][i], D[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(T[r][i], T[r][j]);
    };
    auto negate_row = [&](size_t i) {
        for (auto& v : D[i]) v = -v;
        for (auto& v : S[i]) v = -v;
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // Find the smallest nonzero entry in the remaining block.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 &&
                    (!found || abs(D[i][j]) < abs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool again = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (D[i][t] == 0) continue;
            Int q = D[i][t] / D[t][t];
            row_op(i, t, q);
            if (D[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (D[t][j] == 0) continue;
            Int q = D[t][j] / D[t][t];
            col_op(j, t, q);
            if (D[t][j] != 0) again = true;
        }
        if (again) continue;
        // D[t][t] must divide every remaining entry.
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    row_op(t, i, Int(-1));  // add row i to row t
                    divides = false;
                }
        if (!divides) continue;
        if (D[t][t] < 0) negate_row(t);
        ++t;
    }
    return res;
}

namespace {

// Normalize a constraint to primitive integer coefficients for dedup.
LinCon normalize(LinCon c) {
    Int l = 1;
    auto lcm_den = [&](const Rat& x) { l = lcm(l, denominator(x)); };
    for (auto& x : c.a) lcm_den(x);
    lcm_den(c.c);
    Int g = 0;
    auto scale = [&](Rat& x) {
        x *= l;
        g = gcd(g, numerator(x));
    };
    for (auto& x : c.a) scale(x);
    scale(c.c);
    if (g > 1) {
        for (auto& x : c.a) x /= g;
        c.c /= g;
    }
    return c;
}

bool all_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

// Constant constraint check: value REL 0.
bool const_ok(const Rat& v, Rel rel) {
    switch (rel) {
        case Rel::Eq: return v == 0;
        case Rel::Ge: return v >= 0;
        case Rel::Gt: return v > 0;
    }
    return false;
}

}  // namespace

bool feasible(int nvars, std::vector<LinCon> cons) {
    for (int var = nvars - 1; var >= 0; --var) {
        // Check variable-free constraints, drop satisfied ones.
        std::vector<LinCon> cur;
        for (auto& c : cons) {
            if (all_zero(c.a)) {
                if (!const_ok(c.c, c.rel)) return false;
            } else {
                cur.push_back(std::move(c));
            }
        }
        cons.clear();

        // Prefer substituting an equality that mentions var.
        int eq_idx = -1;
        for (size_t i = 0; i < cur.size(); ++i)
            if (cur[i].rel == Rel::Eq && cur[i].a[var] != 0) {
                eq_idx = static_cast<int>(i);
                break;
            }
        if (eq_idx >= 0) {
            LinCon e = cur[eq_idx];
            cur.erase(cur.begin() + eq_idx);
            // x_var = -(rest + c)/e.a[var]
            for (auto& c : cur) {
                if (c.a[var] == 0) continue;
                Rat f = c.a[var] / e.a[var];
                for (int j = 0; j < nvars; ++j) c.a[j] -= f * e.a[j];
                c.c -= f * e.c;
            }
            cons = std::move(cur);
            continue;
        }

        std::vector<LinCon> lower, upper, rest;
        for (auto& c : cur) {
            if (c.a[var] > 0)
                lower.push_back(std::move(c));  // x >= -(rest)/a (or >)
            else if (c.a[var] < 0)
                upper.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        std::set<std::pair<std::vector<std::string>, int>> seen;
        auto push_unique = [&](LinCon c) {
            c = normalize(std::move(c));
            std::vector<std::string> key;
            key.reserve(c.a.size() + 1);
            for (auto& x : c.a) key.push_back(rat_str(x));
            key.push_back(rat_str(c.c));
            if (seen.insert({key, static_cast<int>(c.rel)}).second)
                rest.push_back(std::move(c));
        };
        for (auto& lo : lower)
            for (auto& up : upper) {
                // lo: a>0, up: a<0. Combine to eliminate var.
                LinCon c;
                c.a.assign(nvars, Rat(0));
                Rat al = lo.a[var], au = -up.a[var];
                for (int j = 0; j < nvars; ++j) c.a[j] = lo.a[j] * au + up.a[j] * al;
                c.c = lo.c * au + up.c * al;
                c.rel = (lo.rel == Rel::Gt || up.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
                push_unique(std::move(c));
            }
        cons = std::move(rest);
    }
    for (auto& c : cons)
        if (!const_ok(c.c, c.rel)) return false;
    return true;
}

}  // namespace toric
