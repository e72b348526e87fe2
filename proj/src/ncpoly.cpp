#include "toric/ncpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace toric {

int Word::count1() const { return std::popcount(bits); }

Word Word::append(int l) const {
    if (len >= kMaxLen) throw std::length_error("word too long");
    return {len + 1, (bits << 1) | static_cast<std::uint64_t>(l)};
}

Word Word::concat(Word w) const {
    if (len + w.len > kMaxLen) throw std::length_error("word too long");
    return {len + w.len, (bits << w.len) | w.bits};
}

Word Word::prefix(int k) const { return {k, bits >> (len - k)}; }

Word Word::suffix(int k) const {
    return {k, bits & ((k == 0) ? 0 : ((~0ULL) >> (64 - k)))};
}

Word Word::reversed() const {
    Word r;
    for (int i = len - 1; i >= 0; --i) r = r.append(letter(i));
    return r;
}

std::string Word::str(char l0, char l1) const {
    if (len == 0) return "1";
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(letter(i) ? l1 : l0);
    return s;
}

Word Word::parse(const std::string& s, char l0, char l1) {
    Word w;
    if (s == "1") return w;
    for (char ch : s) {
        if (ch == l0)
            w = w.append(0);
        else if (ch == l1)
            w = w.append(1);
        else
            throw std::invalid_argument(std::string("bad letter '") + ch + "' in word");
    }
    return w;
}

namespace {

// Lexicographic order on reversed words; with degree first this matches the
// canonical serialization order (e.g. ccc, dc, cd in degree three).
bool revlex_less(const Word& x, const Word& y) {
    int n = std::min(x.len, y.len);
    for (int i = 0; i < n; ++i) {
        int lx = x.letter(x.len - 1 - i), ly = y.letter(y.len - 1 - i);
        if (lx != ly) return lx < ly;
    }
    return x.len < y.len;
}

}  // namespace

template <char A0, char A1, int Deg1>
std::string NcPoly<A0, A1, Deg1>::str() const {
    if (t.empty()) return "0";
    std::vector<std::pair<Word, Int>> terms(t.begin(), t.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int dx = word_degree(x.first), dy = word_degree(y.first);
        if (dx != dy) return dx < dy;
        return revlex_less(x.first, y.first);
    });
    std::ostringstream out;
    bool first = true;
    for (auto& [w, c] : terms) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << mag.str() << "*" << w.str(A0, A1);
    }
    return out.str();
}

template <char A0, char A1, int Deg1>
NcPoly<A0, A1, Deg1> NcPoly<A0, A1, Deg1>::parse(const std::string& s) {
    NcPoly p;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty polynomial");
    if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return p;
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial");
        }
        first = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        skip_ws();
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        Word w;
        bool have_word = false;
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        std::string letters;
        while (i < s.size() && (s[i] == A0 || s[i] == A1 || (s[i] == '1' && letters.empty()))) {
            letters.push_back(s[i++]);
            if (letters == "1") break;
        }
        if (!letters.empty()) {
            w = Word::parse(letters, A0, A1);
            have_word = true;
        }
        if (digits.empty() && !have_word)
            throw std::invalid_argument("malformed term in polynomial: " + s);
        p.add_term(w, sign * coeff);
        skip_ws();
    }
    return p;
}

template struct NcPoly<'a', 'b', 1>;
template struct NcPoly<'c', 'd', 2>;

AbPoly a_minus_b_pow(int m) {
    AbPoly r = ab_one();
    AbPoly amb = ab_a() - ab_b();
    for (int i = 0; i < m; ++i) r = r * amb;
    return r;
}

CdPoly c_pow(int m) { return CdPoly::mono(pow_word(0, m)); }

TensorSum coproduct(const AbPoly& p) {
    TensorSum r;
    for (auto& [w, c] : p.t)
        for (int i = 0; i < w.len; ++i) {
            auto key = std::make_pair(w.prefix(i), w.suffix(w.len - 1 - i));
            r[key] += c;
            if (r[key] == 0) r.erase(key);
        }
    return r;
}

KTensorSum coproduct_k(const AbPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("coproduct_k requires k >= 1");
    KTensorSum r;
    for (auto& [w, c] : p.t) r[{w}] += c;
    for (int step = 1; step < k; ++step) {
        // Apply the coproduct to the last tensor factor.
        KTensorSum next;
        for (auto& [ws, c] : r) {
            Word last = ws.back();
            for (int i = 0; i < last.len; ++i) {
                std::vector<Word> nw(ws.begin(), ws.end() - 1);
                nw.push_back(last.prefix(i));
                nw.push_back(last.suffix(last.len - 1 - i));
                next[nw] += c;
                if (next[nw] == 0) next.erase(nw);
            }
        }
        r = std::move(next);
    }
    return r;
}

CdPoly omega(const AbPoly& p) {
    if (!p.homogeneous_degree())
        throw std::domain_error("omega requires a homogeneous polynomial");
    CdPoly r;
    for (auto& [w, c] : p.t) {
        Word cd;
        Int mult = 1;
        int i = 0;
        while (i < w.len) {
            if (i + 1 < w.len && w.letter(i) == 0 && w.letter(i + 1) == 1) {
                cd = cd.append(1);
                mult *= 2;
                i += 2;
            } else {
                cd = cd.append(0);
                i += 1;
            }
        }
        r.add_term(cd, mult * c);
    }
    return r;
}

AbPoly kappa(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t)
        if (w.count1() == 0) r += c * a_minus_b_pow(w.len);
    return r;
}

AbPoly beta_op(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t)
        if (w.count1() == w.len) r += c * a_minus_b_pow(w.len);
    return r;
}

namespace {

// True if w is of the form b^m a^k.
bool is_b_then_a(const Word& w) {
    bool seen_a = false;
    for (int i = 0; i < w.len; ++i) {
        if (w.letter(i) == 0)
            seen_a = true;
        else if (seen_a)
            return false;
    }
    return true;
}

}  // namespace

AbPoly eta(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t)
        if (is_b_then_a(w)) r += (2 * c) * a_minus_b_pow(w.len);
    return r;
}

AbPoly lambda_t(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t) {
        bool bs_only = w.count1() == w.len;
        bool bs_then_one_a = w.len >= 1 && w.letter(w.len - 1) == 0 && w.count1() == w.len - 1;
        if (bs_only || bs_then_one_a) r += c * a_minus_b_pow(w.len);
    }
    return r;
}

AbPoly lambda_ub(const AbPoly& p) { return eta(p) - 2 * beta_op(p); }

AbPoly h_prime(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t)
        if (w.len > 0) r.add_term(w.prefix(w.len - 1), c);
    return r;
}

AbPoly r_map(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t)
        if (w.len > 0 && w.letter(w.len - 1) == 0) r.add_term(w.prefix(w.len - 1), c);
    return r;
}

namespace {

const AbPoly& phi_word(const Word& w) {
    static std::map<Word, AbPoly> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    AbPoly res;
    if (w.len == 0) {
        res = ab_one();
    } else if (w.len == 1 && w.letter(0) == 1) {
        res = 2 * ab_b();
    } else if (w.letter(w.len - 1) == 0) {
        res = phi_word(w.prefix(w.len - 1)) * (ab_a() + ab_b());
    } else if (w.letter(w.len - 2) == 1) {  // ends bb
        res = phi_word(w.prefix(w.len - 1)) * (ab_a() + ab_b());
    } else {  // ends ab
        res = phi_word(w.prefix(w.len - 2)) * (2 * (ab_a() * ab_b() + ab_b() * ab_a()));
    }
    return cache.emplace(w, std::move(res)).first->second;
}

const AbPoly& phi_ub_word(const Word& w) {
    static std::map<Word, AbPoly> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    AbPoly res;
    if (w.len == 0) {
        res = ab_one();
    } else if (w.count1() == w.len) {  // b^m, m >= 1
        res = AbPoly{};
    } else if (w.letter(w.len - 1) == 0) {
        res = phi_word(w.prefix(w.len - 1)) * (ab_a() - ab_b());
    } else if (w.letter(w.len - 2) == 1) {  // ends bb
        res = phi_ub_word(w.prefix(w.len - 1)) * (ab_a() - ab_b());
    } else {  // ends ab
        res = AbPoly{};
    }
    return cache.emplace(w, std::move(res)).first->second;
}

}  // namespace

AbPoly phi(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t) r += c * phi_word(w);
    return r;
}

AbPoly phi_t(const AbPoly& p) {
    AbPoly r = kappa(p);
    for (auto& [ww, c] : coproduct(p)) {
        AbPoly term = phi_word(ww.first) * ab_b() * lambda_t(AbPoly::mono(ww.second));
        r += c * term;
    }
    return r;
}

AbPoly phi_ub(const AbPoly& p) {
    AbPoly r;
    for (auto& [w, c] : p.t) r += c * phi_ub_word(w);
    return r;
}

AbPoly cd_expand(const CdPoly& p) {
    AbPoly r;
    AbPoly c_ab = ab_a() + ab_b();
    AbPoly d_ab = ab_a() * ab_b() + ab_b() * ab_a();
    for (auto& [w, k] : p.t) {
        AbPoly m(k);
        for (int i = 0; i < w.len; ++i) m = m * (w.letter(i) ? d_ab : c_ab);
        r += m;
    }
    return r;
}

CdResult ab_to_cd(const AbPoly& p) {
    CdResult res;
    AbPoly work = p;
    while (!work.is_zero()) {
        auto [w, k] = *work.t.begin();
        // Try to read w as the image of a cd-word under c -> a, d -> ab.
        Word cd;
        bool ok = true;
        int i = 0;
        while (i < w.len) {
            if (w.letter(i) == 1) {
                ok = false;
                break;
            }
            if (i + 1 < w.len && w.letter(i + 1) == 1) {
                cd = cd.append(1);
                i += 2;
            } else {
                cd = cd.append(0);
                i += 1;
            }
        }
        if (ok) {
            res.cd.add_term(cd, k);
            work -= k * cd_expand(CdPoly::mono(cd));
        } else {
            res.residual.add_term(w, k);
            work.t.erase(work.t.begin());
        }
    }
    return res;
}

}  // namespace toric
