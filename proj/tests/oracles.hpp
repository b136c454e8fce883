#pragma once

// Test-only brute-force references. None of these call into the library's
// counting code; they only share the plain data types.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "kostka/core.hpp"

namespace oracle {

using kostka::Count;

// Every nonnegative vector of length k and weight m, no pruning.
inline std::vector<std::vector<int>> all_vectors(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(k, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == k) {
            if (left == 0)
                out.push_back(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, m);
    return out;
}

// gamma with alpha_i - gamma_i >= alpha_{i+1} for every i (alpha_{k+1} = 0).
inline std::vector<kostka::IntSeq> strips_by_filter(const std::vector<int>& alpha, int m) {
    const int k = static_cast<int>(alpha.size());
    std::vector<kostka::IntSeq> out;
    for (const auto& g : all_vectors(m, k)) {
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            const int next = i + 1 < k ? alpha[i + 1] : 0;
            ok = ok && alpha[i] - g[i] >= next;
        }
        if (ok)
            out.emplace_back(g);
    }
    return out;
}

// Sign from the cycle decomposition: (-1)^(k - #cycles).
inline int sign_by_cycles(const std::vector<int>& sigma) {
    const int k = static_cast<int>(sigma.size());
    std::vector<bool> seen(k, false);
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (int j = i; !seen[j]; j = sigma[j] - 1)
            seen[j] = true;
    }
    return (k - cycles) % 2 ? -1 : 1;
}

// Tries every assignment of values 1..len(beta) to the cells of alpha.
inline Count ssyt_by_assignment(const std::vector<int>& alpha, const std::vector<int>& beta) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
        for (int j = 0; j < alpha[i]; ++j)
            cells.emplace_back(i, j);
    const int values = static_cast<int>(beta.size());
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != std::accumulate(beta.begin(), beta.end(), 0))
        return 0;
    std::vector<std::vector<int>> t(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        t[i].assign(alpha[i], 0);
    Count found = 0;
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            std::vector<int> seen(values, 0);
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t[i].size(); ++j) {
                    ++seen[t[i][j] - 1];
                    if (j > 0 && t[i][j - 1] > t[i][j])
                        return;
                    if (i > 0 && t[i - 1][j] >= t[i][j])
                        return;
                }
            if (seen == beta)
                ++found;
            return;
        }
        for (int v = 1; v <= values; ++v) {
            t[cells[c].first][cells[c].second] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return found;
}

// |A_{p,q}|: for every shape with at most p rows and at most q columns,
// count fillings by entries from {1..p} with rows weakly and columns strictly
// increasing, cell by cell.
inline Count tableaux_in_box(int p, int q) {
    Count found = 0;
    std::vector<int> shape;
    auto count_fillings = [&]() {
        std::vector<std::vector<int>> t;
        for (int len : shape)
            t.emplace_back(len, 0);
        auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
            if (i == t.size()) {
                ++found;
                return;
            }
            if (j == t[i].size()) {
                self(self, i + 1, 0);
                return;
            }
            for (int v = 1; v <= p; ++v) {
                if (j > 0 && t[i][j - 1] > v)
                    continue;
                if (i > 0 && t[i - 1][j] >= v)
                    continue;
                t[i][j] = v;
                self(self, i, j + 1);
            }
        };
        rec(rec, 0, 0);
    };
    auto shapes = [&](auto&& self, int cap) -> void {
        count_fillings();
        if (static_cast<int>(shape.size()) == p)
            return;
        for (int len = 1; len <= cap; ++len) {
            shape.push_back(len);
            self(self, len);
            shape.pop_back();
        }
    };
    shapes(shapes, q);
    return found;
}

// Coefficients of prod_i h_{rho_i}(X_1..X_vars), keyed by exponent vector.
inline std::map<std::vector<int>, Count> complete_homogeneous_product(const std::vector<int>& rho, int vars) {
    std::map<std::vector<int>, Count> poly{{std::vector<int>(vars, 0), 1}};
    for (int degree : rho) {
        std::map<std::vector<int>, Count> next;
        for (const auto& [exps, coeff] : poly)
            for (const auto& mono : all_vectors(degree, vars)) {
                auto e = exps;
                for (int v = 0; v < vars; ++v)
                    e[v] += mono[v];
                next[e] += coeff;
            }
        poly = std::move(next);
    }
    return poly;
}

inline Count factorial(int n) {
    Count f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace oracle
