#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Univariate polynomial over Int, coefficients ascending by degree.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Int(0);
    }
    Int eval(const Int& x) const {
        Int r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
    bool operator==(const IntPoly&) const = default;

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.c.empty() || b.c.empty()) return IntPoly{};
        std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(r));
    }

    static IntPoly monomial(int deg, Int coeff = 1) {
        std::vector<Int> v(deg + 1, Int(0));
        v[deg] = std::move(coeff);
        return IntPoly(std::move(v));
    }

    // e.g. "t^2 - 2*t + 3"
    std::string str(const std::string& var = "t") const;
};

std::string int_str(const Int& v);

// Drop everything from '#' to end of line (used by the file parsers).
std::string strip_comments(const std::string& text);
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Value in [0,1): r mod 1.
Rat mod1(const Rat& r);

}  // namespace toric
