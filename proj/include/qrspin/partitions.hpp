#pragma once

#include "qrspin/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qrspin {

// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    int size() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }
    int length() const { return (int)parts.size(); }
    bool empty() const { return parts.empty(); }
    int part(int i) const { return i < (int)parts.size() ? parts[i] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    Partition conjugate() const {
        Partition c;
        if (parts.empty()) return c;
        c.parts.assign(parts[0], 0);
        for (int v : parts)
            for (int j = 0; j < v; ++j) c.parts[j]++;
        return c;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back();
            out.back().parts = cur;
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// Beta set {lambda_i + n_rows - i : i = 1..n_rows}, strictly decreasing.
inline std::vector<int> beta_set(const Partition& lam, int n_rows) {
    std::vector<int> b(n_rows);
    for (int i = 0; i < n_rows; ++i) b[i] = lam.part(i) + n_rows - 1 - i;
    return b;
}

inline Partition partition_from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int n = (int)b.size();
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        int v = b[i] - (n - 1 - i);
        if (v > 0) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

// All ways to remove a border strip of size t; sign = (-1)^height.
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int t) {
    std::vector<std::pair<Partition, int>> out;
    if (t <= 0 || t > lam.size()) return out;
    std::vector<int> b = beta_set(lam, lam.length());
    for (size_t i = 0; i < b.size(); ++i) {
        int target = b[i] - t;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int height = 0;
        for (int v : b)
            if (v > target && v < b[i]) height++;
        std::vector<int> nb = b;
        nb[i] = target;
        out.emplace_back(partition_from_beta(std::move(nb)), height % 2 == 0 ? 1 : -1);
    }
    return out;
}

// All ways to add a border strip of size t; sign = (-1)^height.
inline std::vector<std::pair<Partition, int>> strip_additions(const Partition& lam, int t) {
    std::vector<std::pair<Partition, int>> out;
    if (t <= 0) return out;
    int rows = lam.length() + t; // enough empty rows to host any new strip
    std::vector<int> b = beta_set(lam, rows);
    for (size_t i = 0; i < b.size(); ++i) {
        int target = b[i] + t;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int height = 0;
        for (int v : b)
            if (v > b[i] && v < target) height++;
        std::vector<int> nb = b;
        nb[i] = target;
        out.emplace_back(partition_from_beta(std::move(nb)), height % 2 == 0 ? 1 : -1);
    }
    return out;
}

// Murnaghan-Nakayama: character of the irreducible S_n representation lambda
// on the class of cycle type rho.
inline BigInt mn_character(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size()) throw std::invalid_argument("mn_character: |lambda| != |rho|");
    auto rec = [&](auto&& self, const Partition& l, size_t k) -> BigInt {
        if (k == rho.parts.size()) return l.empty() ? 1 : 0;
        BigInt acc = 0;
        for (auto& [sub, sign] : strip_removals(l, rho.parts[k]))
            acc += BigInt(sign) * self(self, sub, k + 1);
        return acc;
    };
    Partition rs = rho; // largest parts first: fewer branches early
    return rec(rec, lam, 0);
}

// Number of standard Young tableaux, by the hook length formula.
inline BigInt hook_dim(const Partition& lam) {
    int n = lam.size();
    if (n == 0) return 1;
    Partition conj = lam.conjugate();
    BigInt denom = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts[i]; ++j)
            denom *= BigInt(lam.parts[i] - (j + 1) + conj.parts[j] - (i + 1) + 1);
    return factorial(n) / denom;
}

// Character on the rectangular class (q^M), qM = |lambda|, via the q-quotient:
// zero unless the q-core is empty, otherwise
//   sign * M! / prod_c m_c! * prod_c f^{lambda^{(c)}},
// with the sign accumulated along an explicit strip-removal path.
inline BigInt char_equal_parts(const Partition& lam, int q) {
    int n = lam.size();
    if (q < 1 || (q > 0 && n % q != 0)) return 0;
    if (n == 0) return 1;
    if (q == 1) return hook_dim(lam);
    int M = n / q;

    int rows = ((lam.length() + q - 1) / q) * q; // multiple of q
    std::vector<int> b = beta_set(lam, rows);

    // quotient partitions per residue class
    std::vector<std::vector<int>> gam(q);
    for (int v : b) gam[v % q].push_back(v / q);
    int total = 0;
    std::vector<Partition> quot(q);
    for (int c = 0; c < q; ++c) {
        quot[c] = partition_from_beta(gam[c]);
        total += quot[c].size();
    }
    if (total != M) return 0; // non-empty q-core

    // sign along one explicit removal path
    long height_sum = 0;
    std::vector<int> cur = b;
    for (int step = 0; step < M; ++step) {
        bool moved = false;
        std::sort(cur.begin(), cur.end(), std::greater<int>());
        for (size_t i = 0; i < cur.size() && !moved; ++i) {
            int target = cur[i] - q;
            if (target < 0) continue;
            if (std::find(cur.begin(), cur.end(), target) != cur.end()) continue;
            for (int v : cur)
                if (v > target && v < cur[i]) height_sum++;
            cur[i] = target;
            moved = true;
        }
        if (!moved) return 0; // unreachable when the core is empty
    }

    BigInt res = factorial(M);
    for (int c = 0; c < q; ++c) {
        res /= factorial(quot[c].size());
        res *= hook_dim(quot[c]);
    }
    return height_sum % 2 == 0 ? res : -res;
}

} // namespace qrspin
