#include "kostka/mu.hpp"

#include <algorithm>
#include <functional>

namespace kostka {

MuEvaluator::MuEvaluator(Content rho, MuMemo memo) : rho_(std::move(rho)), memo_(memo) {
    partial_sums_.reserve(rho_.len() + 1);
    partial_sums_.push_back(0);
    for (int part : rho_.parts())
        partial_sums_.push_back(partial_sums_.back() + part);
}

std::size_t MuEvaluator::KeyHash::operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = key.size();
    for (int x : key)
        h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Count MuEvaluator::operator()(const IntSeq& delta) {
    std::vector<int> d(delta.entries().begin(), delta.entries().end());
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
        return 0;
    const auto total = weight(delta);
    auto it = std::lower_bound(partial_sums_.begin(), partial_sums_.end(), total);
    if (it == partial_sums_.end() || *it != total)
        return 0;
    return eval(std::move(d), static_cast<int>(it - partial_sums_.begin()));
}

// delta is nonnegative with s(delta) == rho_1 + ... + rho_{prefix_len}
Count MuEvaluator::eval(std::vector<int> delta, int prefix_len) {
    if (prefix_len == 0)
        return 1;

    if (memo_ == MuMemo::symmetric) {
        std::erase(delta, 0);
        std::sort(delta.begin(), delta.end(), std::greater<>());
    } else if (memo_ == MuMemo::raw) {
        while (!delta.empty() && delta.back() == 0)
            delta.pop_back();
    }

    std::vector<int> key;
    if (memo_ != MuMemo::none) {
        key.reserve(delta.size() + 1);
        key.push_back(prefix_len);
        key.insert(key.end(), delta.begin(), delta.end());
        if (auto hit = cache_.find(key); hit != cache_.end())
            return hit->second;
    }
    ++nodes_;

    // gamma ranges over compositions of rho_l bounded entrywise by delta;
    // any other gamma leaves a negative entry and contributes 0
    const int strip = rho_[prefix_len - 1];
    const std::size_t w = delta.size();
    std::vector<int> suffix(w + 1, 0);
    for (std::size_t i = w; i-- > 0;)
        suffix[i] = suffix[i + 1] + delta[i];

    Count total = 0;
    std::vector<int> rest = delta;
    auto place = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == w) {
            if (left == 0)
                total += eval(rest, prefix_len - 1);
            return;
        }
        if (left > suffix[i])
            return;
        const int hi = std::min(left, delta[i]);
        for (int g = 0; g <= hi; ++g) {
            rest[i] = delta[i] - g;
            self(self, i + 1, left - g);
        }
        rest[i] = delta[i];
    };
    place(place, 0, strip);

    if (memo_ != MuMemo::none)
        cache_.emplace(std::move(key), total);
    return total;
}

Count mu(const Content& rho, const IntSeq& delta) {
    MuEvaluator eval(rho);
    return eval(delta);
}

Count mu_matrix_oracle(const Content& rho, const IntSeq& delta, const Limits& limits) {
    if (rho.n() > limits.oracle_max_weight)
        throw SizeLimit("matrix oracle limited to row sum " + std::to_string(limits.oracle_max_weight));
    auto cols = delta.entries();
    if (std::any_of(cols.begin(), cols.end(), [](int x) { return x < 0; }))
        return 0;
    if (weight(delta) != rho.n())
        return 0;

    const int rows = rho.len();
    const std::size_t w = cols.size();
    std::vector<int> remaining(cols.begin(), cols.end());
    Count found = 0;

    // fill row r cell by cell; the last cell of each row is forced by the row
    // sum and the last row is forced by the column sums
    auto fill = [&](auto&& self, int r, std::size_t c, int row_left) -> void {
        if (r == rows) {
            if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }))
                ++found;
            return;
        }
        if (r == rows - 1 && c == 0) {
            // total sums agree, so the remaining column sums are the last row
            ++found;
            return;
        }
        if (c + 1 >= w) {
            if (w == 0) {
                if (row_left == 0)
                    self(self, r + 1, 0, r + 1 < rows ? rho[r + 1] : 0);
                return;
            }
            if (row_left > remaining[c])
                return;
            remaining[c] -= row_left;
            self(self, r + 1, 0, r + 1 < rows ? rho[r + 1] : 0);
            remaining[c] += row_left;
            return;
        }
        const int hi = std::min(row_left, remaining[c]);
        for (int a = 0; a <= hi; ++a) {
            remaining[c] -= a;
            self(self, r, c + 1, row_left - a);
            remaining[c] += a;
        }
    };
    fill(fill, 0, 0, rows > 0 ? rho[0] : 0);
    return found;
}

Count multinomial(const IntSeq& delta) {
    Count result = 1;
    int n = 0;
    for (int d : delta.entries()) {
        if (d < 0)
            throw NegativeEntry("multinomial of a negative entry: " + to_string(delta.entries()));
        // multiply by binomial(n + d, d) incrementally; each step stays integral
        for (int j = 1; j <= d; ++j) {
            result *= n + j;
            result /= j;
        }
        n += d;
    }
    return result;
}

std::vector<std::vector<Count>> mu_table(const Content& rho, int rows, int cols) {
    MuEvaluator eval(rho);
    std::vector<std::vector<Count>> table(rows, std::vector<Count>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            table[i][j] = eval(IntSeq{i, j});
    return table;
}

} // namespace kostka
