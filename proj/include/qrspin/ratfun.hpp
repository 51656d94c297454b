#pragma once

#include "qrspin/algebra.hpp"
#include "qrspin/unipoly.hpp"

#include <stdexcept>
#include <string>

namespace qrspin {

// Rational function num/den over Q, normalized: gcd(num, den) = 1 and den monic.
struct RationalFunction {
    QPoly num;
    QPoly den = QPoly::constant(1);

    RationalFunction() = default;
    RationalFunction(long v) : num(QPoly::constant(Rational(v))) {}
    RationalFunction(const Rational& v) : num(QPoly::constant(v)) {}
    RationalFunction(QPoly n, QPoly d = QPoly::constant(1)) : num(std::move(n)), den(std::move(d)) {
        normalize();
    }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num.is_zero()) {
            den = QPoly::constant(1);
            return;
        }
        QPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            QPoly q, r;
            divmod(num, g, q, r);
            num = q;
            divmod(den, g, q, r);
            den = q;
        }
        Rational lead = den.c.back();
        if (lead != 1) {
            Rational inv = 1 / lead;
            num *= inv;
            den *= inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num * b.den, a.den * b.num);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num = -r.num;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
    RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
    RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }

    friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
        RationalFunction r = a;
        r.num *= s;
        r.normalize();
        return r;
    }
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a) { return a * s; }

    bool defined_at(const Rational& x) const { return den.eval(x) != 0; }
    Rational eval(const Rational& x) const {
        Rational d = den.eval(x);
        if (d == 0) throw std::domain_error("RationalFunction::eval at a pole");
        return num.eval(x) / d;
    }
};

// Residue at a simple pole; 0 where regular; throws if the pole order exceeds 1.
inline Rational residue_at(const RationalFunction& f, const Rational& pole) {
    if (f.den.eval(pole) != 0) return 0;
    // synthetic division den / (x - pole)
    QPoly lin = QPoly::x() - QPoly::constant(pole);
    QPoly quo, rem;
    divmod(f.den, lin, quo, rem);
    // rem must be 0 since den(pole) = 0
    Rational d1 = quo.eval(pole);
    if (d1 == 0) throw std::domain_error("residue_at: pole of order > 1");
    return f.num.eval(pole) / d1;
}

// 1/((nu+1)_s) as a rational function of nu, all integer s.
inline RationalFunction pochhammer_inv_rf(long s) {
    QPoly prod = QPoly::constant(1);
    if (s >= 0) {
        for (long j = 1; j <= s; ++j) prod *= QPoly::x() + QPoly::constant(Rational(j));
        return RationalFunction(QPoly::constant(1), prod);
    }
    for (long j = s + 1; j <= 0; ++j) prod *= QPoly::x() + QPoly::constant(Rational(j));
    return RationalFunction(prod);
}

inline std::string to_string(const RationalFunction& f, const std::string& var = "nu") {
    if (f.den == QPoly::constant(1)) return to_string(f.num, var);
    return "(" + to_string(f.num, var) + ")/(" + to_string(f.den, var) + ")";
}

} // namespace qrspin
