#include "kostka/tableaux.hpp"

#include <functional>

#include "kostka/mu.hpp"

namespace kostka {

bool is_valid_ssyt(const Tableau& t, const Partition& alpha, const Content& beta) {
    if (static_cast<int>(t.rows.size()) != alpha.k())
        return false;
    std::vector<int> seen(beta.len() + 1, 0);
    for (int i = 0; i < alpha.k(); ++i) {
        const auto& row = t.rows[i];
        if (static_cast<int>(row.size()) != alpha[i])
            return false;
        for (int j = 0; j < alpha[i]; ++j) {
            const int v = row[j];
            if (v < 1 || v > beta.len())
                return false;
            ++seen[v];
            if (j > 0 && row[j - 1] > v)
                return false;
            if (i > 0 && t.rows[i - 1][j] >= v)
                return false;
        }
    }
    for (int v = 1; v <= beta.len(); ++v)
        if (seen[v] != beta[v - 1])
            return false;
    return true;
}

namespace {

void check_enumerable(const Partition& alpha, const Content& beta, const Limits& limits) {
    if (alpha.n() != beta.n())
        throw WeightMismatch("shape " + to_string(alpha.parts()) + " and content " +
                             to_string(beta.parts()) + " have different weights");
    if (alpha.n() > limits.ssyt_max_n)
        throw SizeLimit("tableau enumeration limited to n <= " + std::to_string(limits.ssyt_max_n));
}

// Row-major depth-first filling. `on_leaf` sees the partially built rows once
// every cell is filled.
class Filler {
  public:
    Filler(const Partition& alpha, const Content& beta) : alpha_(alpha), values_(beta.len()) {
        remaining_.assign(beta.parts().begin(), beta.parts().end());
        rows_.resize(alpha.k());
        for (int i = 0; i < alpha.k(); ++i)
            rows_[i].assign(alpha[i], 0);
        // below_[i][j]: number of cells strictly below (i, j) in column j
        below_.resize(alpha.k());
        for (int i = 0; i < alpha.k(); ++i) {
            below_[i].assign(alpha[i], 0);
            for (int j = 0; j < alpha[i]; ++j)
                for (int r = i + 1; r < alpha.k() && alpha[r] > j; ++r)
                    ++below_[i][j];
        }
    }

    std::size_t run(const std::function<void(const std::vector<std::vector<int>>&)>& on_leaf) {
        on_leaf_ = &on_leaf;
        nodes_ = 0;
        if (alpha_.k() == 0)
            on_leaf(rows_);
        else
            step(0, 0);
        return nodes_;
    }

  private:
    // distinct values above v still available
    int distinct_above(int v) const {
        int count = 0;
        for (int w = v + 1; w <= values_; ++w)
            count += remaining_[w - 1] > 0;
        return count;
    }

    void step(int i, int j) {
        ++nodes_;
        int lo = 1;
        if (j > 0)
            lo = rows_[i][j - 1];
        if (i > 0)
            lo = std::max(lo, rows_[i - 1][j] + 1);
        int next_i = i, next_j = j + 1;
        if (next_j == alpha_[i]) {
            ++next_i;
            next_j = 0;
        }
        for (int v = lo; v <= values_; ++v) {
            if (remaining_[v - 1] == 0)
                continue;
            --remaining_[v - 1];
            // the cells below this one need distinct, larger values
            if (distinct_above(v) >= below_[i][j]) {
                rows_[i][j] = v;
                if (next_i == alpha_.k())
                    (*on_leaf_)(rows_);
                else
                    step(next_i, next_j);
            }
            ++remaining_[v - 1];
        }
        rows_[i][j] = 0;
    }

    const Partition& alpha_;
    int values_;
    std::vector<int> remaining_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> below_;
    const std::function<void(const std::vector<std::vector<int>>&)>* on_leaf_ = nullptr;
    std::size_t nodes_ = 0;
};

} // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& alpha, const Content& beta, const Limits& limits) {
    check_enumerable(alpha, beta, limits);
    std::vector<Tableau> out;
    Filler(alpha, beta).run([&](const std::vector<std::vector<int>>& rows) { out.push_back(Tableau{rows}); });
    return out;
}

Count count_ssyt(const Partition& alpha, const Content& beta, const Limits& limits, std::size_t* nodes) {
    check_enumerable(alpha, beta, limits);
    Count found = 0;
    std::size_t visited = Filler(alpha, beta).run([&](const std::vector<std::vector<int>>&) { ++found; });
    if (nodes)
        *nodes = visited;
    return found;
}

std::vector<std::vector<int>> hook_lengths(const Partition& alpha) {
    std::vector<std::vector<int>> h(alpha.k());
    for (int i = 0; i < alpha.k(); ++i) {
        h[i].resize(alpha[i]);
        for (int j = 0; j < alpha[i]; ++j) {
            int leg = 0;
            for (int r = i + 1; r < alpha.k() && alpha[r] > j; ++r)
                ++leg;
            h[i][j] = (alpha[i] - j - 1) + leg + 1;
        }
    }
    return h;
}

Count f_hook(const Partition& alpha) {
    Count numerator = 1;
    for (int m = 2; m <= alpha.n(); ++m)
        numerator *= m;
    Count denominator = 1;
    for (const auto& row : hook_lengths(alpha))
        for (int h : row)
            denominator *= h;
    if (numerator % denominator != 0)
        throw Error("hook product does not divide n! for " + to_string(alpha.parts()));
    return numerator / denominator;
}

Count f_det(const Partition& alpha, const Limits& limits) {
    Count total = 0;
    for_each_nonnegative_shift(alpha, limits.perm_cap, [&](std::span<const int> shifted, int sign) {
        Count term = multinomial(IntSeq(std::vector<int>(shifted.begin(), shifted.end())));
        if (sign > 0)
            total += term;
        else
            total -= term;
    });
    if (total < 0)
        throw Error("negative determinant sum for " + to_string(alpha.parts()));
    return total;
}

} // namespace kostka
