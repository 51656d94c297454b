#pragma once

#include "qrspin/partitions.hpp"
#include "qrspin/rational.hpp"
#include "qrspin/unipoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qrspin {

struct EnergyCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Half-integers are encoded by ints: code d stands for d + 1/2.
inline Rational half_value(int d) { return Rational(2 * d + 1, 2); }

// Displaced-index window: codes of lambda_i - i + 1/2 for i = 1..depth.
inline std::vector<int> maya_window(const Partition& lam, int depth) {
    std::vector<int> w(depth);
    for (int i = 1; i <= depth; ++i) w[i - 1] = lam.part(i - 1) - i;
    return w;
}

// Rebuild a partition from displaced-index codes (lambda_i = d_i + i after sort).
inline Partition partition_from_beta_codes(std::vector<int> codes) {
    std::sort(codes.begin(), codes.end(), std::greater<int>());
    std::vector<int> parts;
    for (size_t i = 0; i < codes.size(); ++i) {
        int v = codes[i] + (int)i + 1;
        if (v > 0) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

// E_{i,j} with codes (a, b): replace factor b by a. Returns the image basis
// vector and sign, or nothing when the action is zero. Diagonal cases are the
// normal-ordered ones: a == b > 0 needs b present (+v), a == b < 0 needs b
// absent (-v).
inline std::optional<std::pair<Partition, int>> wedge_replace(const Partition& lam, int a, int b) {
    int depth = lam.length() + std::max({0, -a, -b}) + 2;
    std::vector<int> w = maya_window(lam, depth);
    auto contains = [&](int v) {
        if (v < -depth) return true; // deep filled tail
        return std::find(w.begin(), w.end(), v) != w.end();
    };
    if (a == b) {
        bool has = contains(b);
        if (b >= 0) return has ? std::make_optional(std::make_pair(lam, 1)) : std::nullopt;
        return has ? std::nullopt : std::make_optional(std::make_pair(lam, -1));
    }
    if (!contains(b) || contains(a)) return std::nullopt;
    int between = 0;
    for (int v : w)
        if (v > std::min(a, b) && v < std::max(a, b)) between++;
    // w contains b but not a; elements strictly between, excluding b itself
    std::vector<int> nw = w;
    *std::find(nw.begin(), nw.end(), b) = a;
    return std::make_pair(partition_from_beta_codes(nw), between % 2 == 0 ? 1 : -1);
}

// Rebuild a partition from displaced-index codes (lambda_i = d_i + i after sort).
inline Partition partition_from_beta_codes(std::vector<int> codes);

inline Partition partition_from_beta_codes(std::vector<int> codes) {
    std::sort(codes.begin(), codes.end(), std::greater<int>());
    std::vector<int> parts;
    for (size_t i = 0; i < codes.size(); ++i) {
        int v = codes[i] + (int)i + 1;
        if (v > 0) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

// Enumerate the non-diagonal terms of sum_l g(l) E_{l+shift, l} on v_lambda:
// calls f(l_code, image, sign) for every l with a nonzero image.
template <class F>
void for_each_band_image(const Partition& lam, int shift, F&& f) {
    if (shift == 0) return;
    int depth = lam.length() + std::abs(shift) + 2;
    std::vector<int> w = maya_window(lam, depth);
    auto contains = [&](int v) {
        if (v < -depth) return true;
        return std::find(w.begin(), w.end(), v) != w.end();
    };
    for (int b : w) {
        int a = b + shift;
        if (contains(a)) continue;
        int between = 0;
        for (int v : w)
            if (v > std::min(a, b) && v < std::max(a, b)) between++;
        std::vector<int> nw = w;
        *std::find(nw.begin(), nw.end(), b) = a;
        f(b, partition_from_beta_codes(nw), between % 2 == 0 ? 1 : -1);
    }
}

// Regularized diagonal action of sum_l g(l) E_{l,l} on v_lambda:
// sum over rows of g(lambda_i - i + 1/2) - g(-i + 1/2).
template <class TPoly>
auto band_diagonal_eigenvalue(const Partition& lam, const TPoly& g) -> decltype(g.eval(Rational(0))) {
    using R = decltype(g.eval(Rational(0)));
    R acc = R(0);
    for (int i = 1; i <= lam.length(); ++i) {
        acc += g.eval(half_value(lam.parts[i - 1] - i));
        acc -= g.eval(half_value(-i));
    }
    return acc;
}

// F_n eigenvalue on v_lambda.
inline Rational f_eigenvalue(const Partition& lam, int n) {
    Rational acc = 0;
    for (int i = 1; i <= lam.length(); ++i) {
        acc += pow_rational(half_value(lam.parts[i - 1] - i), n);
        acc -= pow_rational(half_value(-i), n);
    }
    return acc;
}

// Finite linear combination of basis partitions, graded by energy <= cap.
template <class S>
struct FockVector {
    std::map<Partition, S> terms;
    int cap = 0;

    static FockVector vacuum(int cap) {
        FockVector v;
        v.cap = cap;
        v.terms.emplace(Partition{}, S(1));
        return v;
    }
    void add(const Partition& lam, const S& val) {
        if (val == S(0)) return;
        if (lam.size() > cap)
            throw EnergyCapError("fock: intermediate energy " + std::to_string(lam.size()) +
                                 " exceeds cap " + std::to_string(cap));
        auto [it, fresh] = terms.emplace(lam, val);
        if (!fresh) {
            it->second += val;
            if (it->second == S(0)) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    S coeff(const Partition& lam) const {
        auto it = terms.find(lam);
        return it == terms.end() ? S(0) : it->second;
    }
    S vacuum_coeff() const { return coeff(Partition{}); }
};

using QFock = FockVector<Rational>;

// E_{i,j} with half-integer codes (i = a + 1/2, j = b + 1/2).
inline QFock apply_E(int a, int b, const QFock& v) {
    QFock out;
    out.cap = v.cap;
    for (auto& [lam, c] : v.terms)
        if (auto img = wedge_replace(lam, a, b)) out.add(img->first, c * img->second);
    return out;
}

// alpha_n = sum_k E_{k-n,k}; shifts energy by -n.
inline QFock apply_alpha(int n, const QFock& v) {
    if (n == 0) throw std::invalid_argument("apply_alpha: n != 0 required");
    QFock out;
    out.cap = v.cap;
    for (auto& [lam, c] : v.terms)
        for_each_band_image(lam, -n, [&](int, const Partition& img, int sign) {
            out.add(img, c * sign);
        });
    return out;
}

// Diagonal F_n.
inline QFock apply_F(int n, const QFock& v) {
    if (n < 1) throw std::invalid_argument("apply_F: n >= 1 required");
    QFock out;
    out.cap = v.cap;
    for (auto& [lam, c] : v.terms) out.add(lam, c * f_eigenvalue(lam, n));
    return out;
}

struct BandOperator {
    int shift = 0;               // operator is sum_l g(l) E_{l+shift, l} + scalar*Id
    QPoly g;                     // coefficient in the band index l
    Rational scalar = 0;

    // spec orientation: energy a of sum_l g(l) E_{l-a,l} equals -shift
    int energy() const { return -shift; }
};

inline QFock apply_band(const BandOperator& op, const QFock& v) {
    QFock out;
    out.cap = v.cap;
    for (auto& [lam, c] : v.terms) {
        if (op.shift == 0) {
            Rational eig = band_diagonal_eigenvalue(lam, op.g);
            out.add(lam, c * eig);
        } else {
            for_each_band_image(lam, op.shift, [&](int l_code, const Partition& img, int sign) {
                Rational coeff = op.g.eval(half_value(l_code));
                if (coeff == 0) return;
                out.add(img, c * coeff * sign);
            });
        }
        if (op.scalar != 0) out.add(lam, c * op.scalar);
    }
    return out;
}

// Vacuum expectation of a composition, applied right to left.
inline Rational vev(const std::vector<std::function<QFock(const QFock&)>>& ops, int cap) {
    QFock v = QFock::vacuum(cap);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        v = (*it)(v);
        if (v.is_zero()) return 0;
    }
    return v.vacuum_coeff();
}

} // namespace qrspin
