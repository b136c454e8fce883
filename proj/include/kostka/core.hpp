#pragma once

// Partition and sequence data model shared by every counting algorithm.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kostka {

/// Exact nonnegative count. Kostka numbers leave 64-bit range quickly.
using Count = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NegativeEntry : public Error {
  public:
    using Error::Error;
};

class SizeLimit : public Error {
  public:
    using Error::Error;
};

class WeightMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidShape : public Error {
  public:
    using Error::Error;
};

/// Caps that turn combinatorial blowup into an explicit SizeLimit error.
struct Limits {
    int perm_cap = 10;          // largest k for which S_k is iterated
    int oracle_max_weight = 30; // largest sum for contingency-matrix enumeration
    int ssyt_max_n = 20;        // largest n for brute-force tableau enumeration
    int gordon_max_pq = 16;     // largest p*q for the Gordon aggregate sum
};

/// Finitely supported integer sequence. Trailing zeros are never stored, so
/// (2,1) and (2,1,0) compare equal. Entries may be negative.
class IntSeq {
  public:
    IntSeq() = default;
    IntSeq(std::initializer_list<int> entries);
    explicit IntSeq(std::vector<int> entries);

    /// Entry at 0-based position i; zero past the stored length.
    int operator[](std::size_t i) const { return i < entries_.size() ? entries_[i] : 0; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::span<const int> entries() const { return entries_; }

    friend bool operator==(const IntSeq&, const IntSeq&) = default;
    friend auto operator<=>(const IntSeq&, const IntSeq&) = default;

    friend IntSeq operator+(const IntSeq& a, const IntSeq& b);
    friend IntSeq operator-(const IntSeq& a, const IntSeq& b);

  private:
    void trim();
    std::vector<int> entries_;
};

/// Proper partition: weakly decreasing positive parts. The empty partition is valid.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws InvalidShape unless `s` is a proper partition.
    explicit Partition(const IntSeq& s);

    std::span<const int> parts() const { return seq_.entries(); }
    int operator[](std::size_t i) const { return seq_[i]; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(seq_.size()); }
    const IntSeq& seq() const { return seq_; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.seq_ == b.seq_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.seq_ <=> b.seq_; }

  private:
    IntSeq seq_;
    int n_ = 0;
};

/// Gap-free content: positive parts in a fixed (not necessarily sorted) order.
class Content {
  public:
    Content() = default;
    Content(std::initializer_list<int> parts);
    /// Throws InvalidShape if any part is not positive (use normalize_content for zeros).
    explicit Content(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int n() const { return n_; }
    int len() const { return static_cast<int>(parts_.size()); }
    IntSeq seq() const { return IntSeq(parts_); }

    /// The content with its last part removed.
    Content without_last() const;

    friend bool operator==(const Content&, const Content&) = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IntSeq& s);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Content& c);

// ---------------------------------------------------------------------------

std::int64_t weight(const IntSeq& s);

bool is_partition(const IntSeq& s);

/// Drops zero parts, keeping the order of the rest. Throws NegativeEntry.
Content normalize_content(const IntSeq& s);

/// All removal vectors gamma of weight m such that alpha - gamma is again a
/// partition (a horizontal strip): gamma_i <= alpha_i - alpha_{i+1}, with
/// alpha_{k+1} = 0. Returned in lexicographically decreasing order.
std::vector<IntSeq> horizontal_strips(const Partition& alpha, int m);

/// alpha_i - i + sigma(i) for i = 1..k. `sigma` holds 1-based images.
IntSeq shifted_vector(const Partition& alpha, std::span<const int> sigma);

/// Signature of a permutation given by 1-based images.
int permutation_sign(std::span<const int> sigma);

struct SignedPermutation {
    std::vector<int> sigma; // 1-based images sigma(1..k)
    int sign = 1;
};

/// Lexicographic range over S_k with signatures. k = 0 yields the empty
/// permutation once.
class SignedPermutations {
  public:
    /// Throws SizeLimit if k > perm_cap, Error if k < 0.
    explicit SignedPermutations(int k, int perm_cap = Limits{}.perm_cap);

    class iterator {
      public:
        using value_type = SignedPermutation;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const SignedPermutation& operator*() const { return current_; }
        const SignedPermutation* operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

      private:
        friend class SignedPermutations;
        explicit iterator(int k);
        SignedPermutation current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(k_); }
    iterator end() const { return iterator(); }

  private:
    int k_;
};

inline SignedPermutations permutations_signed(int k, int perm_cap = Limits{}.perm_cap) {
    return SignedPermutations(k, perm_cap);
}

/// Visits every sigma in S_k whose shifted vector alpha - (k) + (sigma(k)) is
/// nonnegative, passing that vector and sgn(sigma). The remaining
/// permutations are pruned during the search. Returns the number visited.
/// Throws SizeLimit if k > perm_cap.
std::size_t for_each_nonnegative_shift(const Partition& alpha, int perm_cap,
                                       const std::function<void(std::span<const int>, int)>& visit);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// All compositions (ordered, positive parts) of n, i.e. all gap-free contents.
std::vector<Content> compositions_of(int n);

/// All sequences of exactly `len` nonnegative integers summing to n.
std::vector<std::vector<int>> weak_compositions(int n, int len);

std::string to_string(std::span<const int> parts);

} // namespace kostka
