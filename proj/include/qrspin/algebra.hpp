#pragma once

#include "qrspin/rational.hpp"
#include "qrspin/unipoly.hpp"

#include <stdexcept>

namespace qrspin {

// mu = base*floor + frac, 0 <= frac < base.
struct FloorFracPair {
    long floor = 0;
    long frac = 0;
    long base = 1;
};

inline FloorFracPair decompose(long mu, long base) {
    if (mu < 1 || base < 1) throw std::invalid_argument("decompose: need mu >= 1, base >= 1");
    FloorFracPair d;
    d.base = base;
    d.floor = mu / base;
    d.frac = mu % base;
    return d;
}

// Backward q-difference (Delta_q f)(l) = f(l) - f(l - q), iterated t times.
template <class T>
UniPoly<T> delta_q_power(const UniPoly<T>& f, long q, int t) {
    if (t < 0) throw std::invalid_argument("delta_q_power: t >= 0 required");
    UniPoly<T> g = f;
    for (int i = 0; i < t; ++i) {
        if (g.is_zero()) return g;
        g = g - g.shifted_arg(T(-(long)q));
    }
    return g;
}

// Q_mu^r(l) = ((l+mu)^{r+1} - l^{r+1}) / (mu (r+1)), monic of degree r.
inline QPoly q_poly(long mu, long r) {
    if (mu < 1 || r < 1) throw std::invalid_argument("q_poly: need mu >= 1, r >= 1");
    QPoly res;
    for (long i = 0; i <= r; ++i) {
        Rational coeff = Rational(binomial(BigInt(r + 1), i + 1)) * pow_rational(mu, i) / Rational(r + 1);
        res += QPoly::monomial(coeff, (int)(r - i));
    }
    return res;
}

// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline BigInt stirling_second(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0 && k == 0) return 1;
    if (k == 0 || k > n) return 0;
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

// C(x + shift, k) as a polynomial in x.
inline QPoly binom_poly(long shift, int k) {
    if (k < 0) return {};
    QPoly p = QPoly::constant(1);
    for (int u = 0; u < k; ++u)
        p *= QPoly::x() + QPoly::constant(Rational(shift - u));
    p *= Rational(1) / Rational(factorial(k));
    return p;
}

// Discrete antidifference: F with F(x) - F(x-1) = g(x) and F(0) = 0,
// via the Newton (binomial) basis of g.
inline QPoly antidifference(const QPoly& g) {
    int d = g.degree();
    if (d < 0) return {};
    // Newton coefficients a_k = sum_j (-1)^{k-j} C(k,j) g(j)
    std::vector<Rational> vals(d + 1);
    for (int j = 0; j <= d; ++j) vals[j] = g.eval(Rational(j));
    QPoly F;
    for (int k = 0; k <= d; ++k) {
        Rational ak = 0;
        for (int j = 0; j <= k; ++j) {
            Rational term = Rational(binomial(BigInt(k), j)) * vals[j];
            ak += ((k - j) % 2 == 0) ? term : -term;
        }
        if (ak == 0) continue;
        QPoly part = binom_poly(1, k + 1); // C(x+1, k+1)
        if (k == 0) part -= QPoly::constant(1);
        F += part * ak;
    }
    return F;
}

// f_t(x): the degree-2t polynomial with f_t(x) = S(x+t, x) on non-negative
// integers, built from (Delta_1 f_t)(x) = x f_{t-1}(x), f_0 = 1, f_t(0) = 0.
inline QPoly stirling_poly(int t) {
    if (t < 0) throw std::invalid_argument("stirling_poly: t >= 0 required");
    QPoly f = QPoly::constant(1);
    for (int i = 1; i <= t; ++i) f = antidifference(QPoly::x() * f);
    return f;
}

// c_{m,a}^p(x) = (-q)^{p-m-a} C(p+x, a) S(x+p-a, x+m), the coefficient of l^a
// in Delta_q^{x+m} l^{p+x} / (q^{x+m} (x+m)!), as a polynomial in x.
// Zero polynomial when a > p - m.
inline QPoly diff_coeff(int p, int m, int a, long q) {
    if (a < 0 || a > p - m) return {};
    QPoly res = binom_poly(p, a) * stirling_poly(p - a - m).shifted_arg(Rational(m));
    Rational sign = pow_rational(Rational(-q), p - m - a);
    res *= sign;
    return res;
}

// 1/( (floor+1)_s ) extended to all integer s: the Gamma-ratio value
// Gamma(floor+1)/Gamma(floor+1+s) for s >= -floor, and exactly 0 below.
inline Rational pochhammer_inv(long floor_mu, long s) {
    if (floor_mu < 0) throw std::invalid_argument("pochhammer_inv: floor >= 0 required");
    if (s >= 0) {
        Rational prod = 1;
        for (long j = 1; j <= s; ++j) prod *= Rational(floor_mu + j);
        return 1 / prod;
    }
    if (s < -floor_mu) return 0;
    Rational prod = 1;
    for (long j = s + 1; j <= 0; ++j) prod *= Rational(floor_mu + j);
    return prod;
}

} // namespace qrspin
