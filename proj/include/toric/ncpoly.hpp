#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// A word over a two-letter alphabet, packed into a bitstring with the
// leading letter in the most significant position.  The second letter
// (b, resp. d) is encoded as 1.  Comparing (len, bits) pairs gives
// graded lexicographic order for words whose letters all have degree 1.
struct Word {
    int len = 0;
    std::uint64_t bits = 0;

    static constexpr int kMaxLen = 62;

    static Word one() { return {}; }
    static Word parse(const std::string& s, char l0, char l1);

    int letter(int i) const { return static_cast<int>((bits >> (len - 1 - i)) & 1u); }
    int count1() const;  // number of 1-letters (b's or d's)

    Word append(int l) const;
    Word concat(Word w) const;
    Word prefix(int k) const;
    Word suffix(int k) const;  // last k letters
    Word reversed() const;

    std::string str(char l0, char l1) const;

    auto operator<=>(const Word&) const = default;
};

inline Word pow_word(int letter, int m) {
    Word w;
    for (int i = 0; i < m; ++i) w = w.append(letter);
    return w;
}

// Polynomial in the free algebra Z<a,b> (alphabet == 'ab') or Z<c,d>
// (alphabet == 'cd'; deg c = 1, deg d = 2).
template <char A0, char A1, int Deg1>
struct NcPoly {
    std::map<Word, Int> t;

    NcPoly() = default;
    explicit NcPoly(Int constant) {
        if (constant != 0) t[Word::one()] = std::move(constant);
    }
    static NcPoly mono(Word w, Int c = 1) {
        NcPoly p;
        if (c != 0) p.t[w] = std::move(c);
        return p;
    }

    static int word_degree(const Word& w) { return w.len + (Deg1 - 1) * w.count1(); }

    bool is_zero() const { return t.empty(); }
    Int coeff(const Word& w) const {
        auto it = t.find(w);
        return it == t.end() ? Int(0) : it->second;
    }
    void add_term(const Word& w, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = t.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    // Degree if homogeneous (0 for the zero polynomial).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (auto& [w, c] : t) {
            int dw = word_degree(w);
            if (d && *d != dw) return std::nullopt;
            d = dw;
        }
        return d ? d : std::optional<int>(0);
    }

    bool operator==(const NcPoly&) const = default;

    NcPoly& operator+=(const NcPoly& o) {
        for (auto& [w, c] : o.t) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (auto& [w, c] : o.t) add_term(w, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly x, const NcPoly& y) { return x += y; }
    friend NcPoly operator-(NcPoly x, const NcPoly& y) { return x -= y; }
    friend NcPoly operator*(const NcPoly& x, const NcPoly& y) {
        NcPoly r;
        for (auto& [w1, c1] : x.t)
            for (auto& [w2, c2] : y.t) r.add_term(w1.concat(w2), c1 * c2);
        return r;
    }
    friend NcPoly operator*(const Int& k, const NcPoly& x) {
        NcPoly r;
        for (auto& [w, c] : x.t) r.add_term(w, k * c);
        return r;
    }
    NcPoly operator-() const { return Int(-1) * *this; }

    // Reverse every word (the star involution).
    NcPoly star() const {
        NcPoly r;
        for (auto& [w, c] : t) r.add_term(w.reversed(), c);
        return r;
    }

    // Divide all coefficients by 2; throws if any coefficient is odd.
    NcPoly half() const {
        NcPoly r;
        for (auto& [w, c] : t) {
            if (c % 2 != 0) throw std::domain_error("halving a polynomial with an odd coefficient");
            r.t[w] = c / 2;
        }
        return r;
    }

    std::string str() const;
    static NcPoly parse(const std::string& s);
};

using AbPoly = NcPoly<'a', 'b', 1>;
using CdPoly = NcPoly<'c', 'd', 2>;

inline AbPoly ab_one() { return AbPoly(Int(1)); }
inline AbPoly ab_a() { return AbPoly::mono(Word{1, 0}); }
inline AbPoly ab_b() { return AbPoly::mono(Word{1, 1}); }

// (a-b)^m
AbPoly a_minus_b_pow(int m);
// c^m as a CdPoly word
CdPoly c_pow(int m);

// Tensor square and k-fold tensors of words (with integer coefficients).
using TensorSum = std::map<std::pair<Word, Word>, Int>;
using KTensorSum = std::map<std::vector<Word>, Int>;

// Coproduct of Z<a,b>: delta(u_1...u_n) = sum_i u_1..u_{i-1} (x) u_{i+1}..u_n.
TensorSum coproduct(const AbPoly& p);
// Iterated coproduct with k tensor factors (k >= 1; k == 1 is identity).
KTensorSum coproduct_k(const AbPoly& p, int k);

// Replace each non-overlapping ab pair (scanning left to right) by 2d and
// every remaining letter by c.  Requires homogeneous input.
CdPoly omega(const AbPoly& p);

// kappa(a^m) = (a-b)^m, all other monomials to 0.
AbPoly kappa(const AbPoly& p);
// beta(b^m) = (a-b)^m, else 0.
AbPoly beta_op(const AbPoly& p);
// eta(b^m a^k) = 2 (a-b)^{m+k}, else 0.
AbPoly eta(const AbPoly& p);
// lambda_t(b^m) = (a-b)^m, lambda_t(b^m a) = (a-b)^{m+1}, else 0.
AbPoly lambda_t(const AbPoly& p);
// lambda_ub = eta - 2 beta.
AbPoly lambda_ub(const AbPoly& p);
// Strip the last letter of each word; kills constants.
AbPoly h_prime(const AbPoly& p);
// r(v a) = v, r(v b) = 0, r(1) = 0.
AbPoly r_map(const AbPoly& p);

// phi(1) = 1, phi(b) = 2b, phi(v a) = phi(v) (a+b),
// phi(v bb) = phi(v b) (a+b), phi(v ab) = phi(v) (ab+ba), doubled.
// Result returned expanded in Z<a,b>.
AbPoly phi(const AbPoly& p);
// phi_t(v) = kappa(v) + sum phi(v_(1)) b lambda_t(v_(2)).
AbPoly phi_t(const AbPoly& p);
// phi_ub(v a) = phi(v)(a-b), phi_ub(v bb) = phi_ub(v b)(a-b),
// phi_ub(v ab) = 0, phi_ub(1) = 1, phi_ub(b^m) = 0 for m >= 1.
AbPoly phi_ub(const AbPoly& p);

// Substitute c = a+b, d = ab+ba.
AbPoly cd_expand(const CdPoly& p);

// Greedy rewriting of an ab-polynomial in terms of c and d; `residual` is
// zero exactly when the input lies in Z<c,d>.
struct CdResult {
    CdPoly cd;
    AbPoly residual;
    bool ok() const { return residual.is_zero(); }
};
CdResult ab_to_cd(const AbPoly& p);

}  // namespace toric
