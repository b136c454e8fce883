#pragma once

// Generalized multinomial mu_rho(delta) and the contingency-matrix count
// N_{rho,delta} that serves as its independent oracle.
//
// mu_rho is defined recursively: mu(0) = 1, mu(delta) = 0 if some entry is
// negative, and when s(delta) = rho_1 + ... + rho_l,
//
//     mu(delta) = sum over gamma >= 0 with s(gamma) = rho_l of mu(delta - gamma).
//
// Any delta whose weight is not a partial sum of rho maps to 0. The value is
// symmetric in the entries of delta and equals the number of nonnegative
// integer matrices with row sums rho and column sums delta.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "kostka/core.hpp"

namespace kostka {

enum class MuMemo {
    none,      // plain recursion
    raw,       // memo keyed on delta exactly as given (does not use symmetry)
    symmetric, // memo keyed on sorted delta
};

/// Evaluates mu for one fixed rho, owning its cache. Not thread-safe; give
/// each thread its own evaluator.
class MuEvaluator {
  public:
    explicit MuEvaluator(Content rho, MuMemo memo = MuMemo::symmetric);

    Count operator()(const IntSeq& delta);

    const Content& rho() const { return rho_; }
    std::size_t cache_size() const { return cache_.size(); }
    /// Number of recursion nodes evaluated (memo hits excluded).
    std::size_t nodes() const { return nodes_; }

  private:
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& key) const noexcept;
    };

    Count eval(std::vector<int> delta, int prefix_len);

    Content rho_;
    std::vector<int> partial_sums_;
    MuMemo memo_;
    std::unordered_map<std::vector<int>, Count, KeyHash> cache_;
    std::size_t nodes_ = 0;
};

/// mu_rho(delta) with a private cache.
Count mu(const Content& rho, const IntSeq& delta);

/// Number of len(rho) x len(delta) nonnegative integer matrices with row sums
/// rho and column sums delta, by exhaustive backtracking. 0 if delta has a
/// negative entry or the sums differ. Throws SizeLimit past
/// limits.oracle_max_weight.
Count mu_matrix_oracle(const Content& rho, const IntSeq& delta, const Limits& limits = {});

/// n! / (delta_1! ... delta_k!). Throws NegativeEntry.
Count multinomial(const IntSeq& delta);

/// M[i][j] = mu(rho, (i, j)) for 0 <= i < rows, 0 <= j < cols.
std::vector<std::vector<Count>> mu_table(const Content& rho, int rows, int cols);

} // namespace kostka
