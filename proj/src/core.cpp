#include "kostka/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace kostka {

IntSeq::IntSeq(std::initializer_list<int> entries) : entries_(entries) { trim(); }

IntSeq::IntSeq(std::vector<int> entries) : entries_(std::move(entries)) { trim(); }

void IntSeq::trim() {
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
}

IntSeq operator+(const IntSeq& a, const IntSeq& b) {
    std::vector<int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] + b[i];
    return IntSeq(std::move(out));
}

IntSeq operator-(const IntSeq& a, const IntSeq& b) {
    std::vector<int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] - b[i];
    return IntSeq(std::move(out));
}

Partition::Partition(std::initializer_list<int> parts) : Partition(IntSeq(parts)) {}

Partition::Partition(const IntSeq& s) : seq_(s) {
    if (!is_partition(s)) {
        std::ostringstream msg;
        msg << "not a proper partition: " << s;
        throw InvalidShape(msg.str());
    }
    n_ = static_cast<int>(weight(s));
}

Content::Content(std::initializer_list<int> parts) : Content(std::vector<int>(parts)) {}

Content::Content(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw InvalidShape("content parts must be positive: " + to_string(parts_));
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Content Content::without_last() const {
    if (parts_.empty())
        return *this;
    return Content(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

std::string to_string(std::span<const int> parts) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntSeq& s) { return os << to_string(s.entries()); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p.parts()); }
std::ostream& operator<<(std::ostream& os, const Content& c) { return os << to_string(c.parts()); }

std::int64_t weight(const IntSeq& s) {
    std::int64_t total = 0;
    for (int x : s.entries())
        total += x;
    return total;
}

bool is_partition(const IntSeq& s) {
    // trailing zeros are already trimmed, so every stored entry must be positive
    auto e = s.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] <= 0)
            return false;
        if (i > 0 && e[i] > e[i - 1])
            return false;
    }
    return true;
}

Content normalize_content(const IntSeq& s) {
    std::vector<int> parts;
    for (int x : s.entries()) {
        if (x < 0)
            throw NegativeEntry("content has a negative entry: " + to_string(s.entries()));
        if (x > 0)
            parts.push_back(x);
    }
    return Content(std::move(parts));
}

std::vector<IntSeq> horizontal_strips(const Partition& alpha, int m) {
    std::vector<IntSeq> out;
    if (m < 0)
        return out;
    const int k = alpha.k();
    std::vector<int> room(k);
    std::vector<int> suffix_room(k + 1, 0);
    for (int i = 0; i < k; ++i)
        room[i] = alpha[i] - alpha[i + 1];
    for (int i = k - 1; i >= 0; --i)
        suffix_room[i] = suffix_room[i + 1] + room[i];

    std::vector<int> gamma(k, 0);
    auto fill = [&](auto&& self, int row, int left) -> void {
        if (row == k) {
            if (left == 0)
                out.emplace_back(gamma);
            return;
        }
        if (left > suffix_room[row])
            return;
        for (int g = std::min(left, room[row]); g >= 0; --g) {
            gamma[row] = g;
            self(self, row + 1, left - g);
        }
        gamma[row] = 0;
    };
    fill(fill, 0, m);
    return out;
}

IntSeq shifted_vector(const Partition& alpha, std::span<const int> sigma) {
    std::vector<int> out(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        out[i] = alpha[i] - static_cast<int>(i + 1) + sigma[i];
    return IntSeq(std::move(out));
}

int permutation_sign(std::span<const int> sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            inversions += sigma[i] > sigma[j];
    return inversions % 2 ? -1 : 1;
}

SignedPermutations::SignedPermutations(int k, int perm_cap) : k_(k) {
    if (k < 0)
        throw Error("permutation size must be nonnegative");
    if (k > perm_cap)
        throw SizeLimit("S_" + std::to_string(k) + " exceeds the permutation cap of " +
                        std::to_string(perm_cap));
}

SignedPermutations::iterator::iterator(int k) : done_(false) {
    current_.sigma.resize(k);
    std::iota(current_.sigma.begin(), current_.sigma.end(), 1);
    current_.sign = 1;
}

SignedPermutations::iterator& SignedPermutations::iterator::operator++() {
    if (!std::next_permutation(current_.sigma.begin(), current_.sigma.end()))
        done_ = true;
    else
        current_.sign = permutation_sign(current_.sigma);
    return *this;
}

std::size_t for_each_nonnegative_shift(const Partition& alpha, int perm_cap,
                                       const std::function<void(std::span<const int>, int)>& visit) {
    const int k = alpha.k();
    if (k > perm_cap)
        throw SizeLimit("S_" + std::to_string(k) + " exceeds the permutation cap of " +
                        std::to_string(perm_cap));
    std::vector<int> shifted(k);
    std::vector<bool> used(k + 1, false);
    std::size_t visited = 0;

    // assign sigma(1), sigma(2), ... in turn; parity of inversions is
    // accumulated as each image is placed
    auto assign = [&](auto&& self, int row, int inversions) -> void {
        if (row == k) {
            ++visited;
            visit(shifted, inversions % 2 ? -1 : 1);
            return;
        }
        int larger_used = 0;
        for (int v = k; v >= 1; --v) {
            if (used[v]) {
                ++larger_used;
                continue;
            }
            const int entry = alpha[row] - (row + 1) + v;
            if (entry < 0)
                break; // smaller v only lowers the entry
            used[v] = true;
            shifted[row] = entry;
            self(self, row + 1, inversions + larger_used);
            used[v] = false;
        }
    };
    assign(assign, 0, 0);
    return visited;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.emplace_back(IntSeq(parts));
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Content> compositions_of(int n) {
    std::vector<Content> out;
    if (n < 0)
        return out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            parts.push_back(p);
            self(self, left - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<std::vector<int>> weak_compositions(int n, int len) {
    std::vector<std::vector<int>> out;
    if (n < 0 || len < 0)
        return out;
    if (len == 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == len - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace kostka
