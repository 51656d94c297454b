#pragma once

#include "qrspin/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace qrspin {

// Dense univariate polynomial over an exact coefficient ring T.
// Trailing zeros are always stripped; the zero polynomial has empty storage.
template <class T>
struct UniPoly {
    std::vector<T> c; // c[k] multiplies x^k

    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(T v) {
        UniPoly p;
        if (!(v == T(0))) p.c.push_back(std::move(v));
        return p;
    }
    static UniPoly monomial(T v, int k) {
        UniPoly p;
        if (!(v == T(0))) {
            p.c.assign(k + 1, T(0));
            p.c[k] = std::move(v);
        }
        return p;
    }
    static UniPoly x() { return monomial(T(1), 1); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    T coeff(int k) const { return (k >= 0 && k < (int)c.size()) ? c[k] : T(0); }

    bool operator==(const UniPoly& o) const { return c == o.c; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == T(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    UniPoly& operator*=(const T& s) {
        for (auto& v : c) v = v * s;
        trim();
        return *this;
    }
    friend UniPoly operator*(UniPoly a, const T& s) { a *= s; return a; }
    friend UniPoly operator*(const T& s, UniPoly a) { a *= s; return a; }

    template <class S>
    auto eval(const S& x) const -> decltype(c[0] * x) {
        using R = decltype(c[0] * x);
        R acc = R(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + R(c[i]);
        return acc;
    }

    // f(x + shift)
    UniPoly shifted_arg(const T& shift) const {
        UniPoly r;
        UniPoly base = UniPoly::x() + UniPoly::constant(shift);
        UniPoly pw = UniPoly::constant(T(1));
        for (size_t i = 0; i < c.size(); ++i) {
            if (!(c[i] == T(0))) r += pw * c[i];
            if (i + 1 < c.size()) pw *= base;
        }
        return r;
    }

    // f(scale * x + shift)
    UniPoly composed_affine(const T& scale, const T& shift) const {
        UniPoly r;
        UniPoly base = UniPoly::monomial(scale, 1) + UniPoly::constant(shift);
        UniPoly pw = UniPoly::constant(T(1));
        for (size_t i = 0; i < c.size(); ++i) {
            if (!(c[i] == T(0))) r += pw * c[i];
            if (i + 1 < c.size()) pw *= base;
        }
        return r;
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = UniPoly::constant(T(1));
        UniPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = e > 1 ? b * b : b;
            e >>= 1;
        }
        return r;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * T((long)i);
        r.trim();
        return r;
    }
};

using QPoly = UniPoly<Rational>;

// Division with remainder over the rationals.
inline void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    quo = {};
    rem = a;
    const Rational lead = b.c.back();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        Rational f = rem.c.back() / lead;
        QPoly t = QPoly::monomial(f, k);
        quo += t;
        rem -= t * b;
    }
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
    auto make_monic = [](QPoly& p) {
        if (!p.is_zero()) {
            Rational inv = 1 / p.c.back();
            p *= inv;
        }
    };
    make_monic(a);
    make_monic(b);
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    if (a.is_zero()) return QPoly::constant(1);
    return a; // monic
}

inline std::string to_string(const QPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rational v = p.coeff(k);
        if (v == 0) continue;
        if (!s.empty()) s += (v > 0 ? " + " : " - ");
        else if (v < 0) s += "-";
        Rational av = abs(v);
        if (k == 0 || av != 1) s += av.get_str();
        if (k > 0) {
            if (av != 1) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace qrspin
