#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostka/core.hpp"
#include "oracles.hpp"

using namespace kostka;

TEST_CASE("IntSeq ignores trailing zeros") {
    CHECK(IntSeq{2, 1} == IntSeq{2, 1, 0});
    CHECK(IntSeq{0, 0} == IntSeq{});
    CHECK(IntSeq{0, 2}.size() == 2);
    CHECK(IntSeq{2, 1}[5] == 0);
    CHECK(IntSeq{3, 1} - IntSeq{1, 1} == IntSeq{2});
    CHECK(IntSeq{1} - IntSeq{0, 2} == IntSeq{1, -2});
}

TEST_CASE("weight") {
    CHECK(weight(IntSeq{0, 0, 0}) == 0);
    CHECK(weight(IntSeq{4, 4, 3, 3}) == 14);
    CHECK(weight(IntSeq{3, -1, 2}) == 4);
}

TEST_CASE("is_partition") {
    CHECK(is_partition(IntSeq{4, 4, 3, 3}));
    CHECK(is_partition(IntSeq{}));
    CHECK(is_partition(IntSeq{2, 1, 0, 0}));
    CHECK_FALSE(is_partition(IntSeq{1, 2}));
    CHECK_FALSE(is_partition(IntSeq{2, 0, 1}));
    CHECK_FALSE(is_partition(IntSeq{2, -1}));
    CHECK_THROWS_AS(Partition({1, 2}), InvalidShape);
    CHECK(Partition{}.n() == 0);
    CHECK(Partition{}.k() == 0);
}

TEST_CASE("normalize_content") {
    CHECK(normalize_content(IntSeq{2, 0, 3}) == Content{2, 3});
    CHECK(normalize_content(IntSeq{3, 3, 2, 2, 3, 1}) == Content{3, 3, 2, 2, 3, 1});
    CHECK(normalize_content(IntSeq{0, 0}) == Content{});
    CHECK(normalize_content(IntSeq{0, 0}).n() == 0);
    CHECK_THROWS_AS(normalize_content(IntSeq{1, -1, 2}), NegativeEntry);

    SUBCASE("idempotent") {
        for (const auto& d : weak_compositions(5, 4)) {
            const Content once = normalize_content(IntSeq(d));
            CHECK(normalize_content(once.seq()) == once);
            CHECK(once.n() == 5);
        }
    }
}

TEST_CASE("horizontal_strips examples") {
    auto as_set = [](const std::vector<IntSeq>& v) { return std::set<IntSeq>(v.begin(), v.end()); };
    CHECK(as_set(horizontal_strips(Partition{2, 1}, 1)) == std::set<IntSeq>{IntSeq{1, 0}, IntSeq{0, 1}});
    CHECK(as_set(horizontal_strips(Partition{2, 2}, 1)) == std::set<IntSeq>{IntSeq{0, 1}});
    CHECK(as_set(horizontal_strips(Partition{2, 1}, 0)) == std::set<IntSeq>{IntSeq{}});
    CHECK(horizontal_strips(Partition{1, 1}, 2).empty());
    CHECK(horizontal_strips(Partition{}, 0).size() == 1);
    CHECK(horizontal_strips(Partition{}, 1).empty());
}

TEST_CASE("horizontal_strips matches the filter and leaves a partition, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& alpha : partitions_of(n)) {
            const std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
            for (int m = 0; m <= n; ++m) {
                auto fast = horizontal_strips(alpha, m);
                auto slow = oracle::strips_by_filter(parts, m);
                std::sort(fast.begin(), fast.end());
                std::sort(slow.begin(), slow.end());
                REQUIRE(fast == slow);
                for (const auto& gamma : fast) {
                    const IntSeq rest = alpha.seq() - gamma;
                    CHECK(is_partition(rest));
                    CHECK(weight(rest) == n - m);
                }
            }
        }
    }
}

TEST_CASE("shifted_vector") {
    const std::vector<int> id2{1, 2}, swap{2, 1}, id3{1, 2, 3};
    CHECK(shifted_vector(Partition{2, 1}, id2) == IntSeq{2, 1});
    CHECK(shifted_vector(Partition{2, 1}, swap) == IntSeq{3, 0});
    CHECK(shifted_vector(Partition{1, 1, 1}, id3) == IntSeq{1, 1, 1});
    const std::vector<int> rev{3, 2, 1};
    CHECK(shifted_vector(Partition{1, 1, 1}, rev) == IntSeq{3, 1, -1});
}

TEST_CASE("permutations_signed") {
    auto collect = [](int k) {
        std::vector<SignedPermutation> out;
        for (const auto& p : permutations_signed(k))
            out.push_back(p);
        return out;
    };
    SUBCASE("k = 0 is the empty permutation") {
        auto perms = collect(0);
        REQUIRE(perms.size() == 1);
        CHECK(perms[0].sigma.empty());
        CHECK(perms[0].sign == 1);
    }
    SUBCASE("small cases") {
        auto s1 = collect(1);
        REQUIRE(s1.size() == 1);
        CHECK(s1[0].sign == 1);
        auto s2 = collect(2);
        REQUIRE(s2.size() == 2);
        CHECK(s2[0].sigma == std::vector<int>{1, 2});
        CHECK(s2[0].sign == 1);
        CHECK(s2[1].sigma == std::vector<int>{2, 1});
        CHECK(s2[1].sign == -1);
        auto s3 = collect(3);
        CHECK(s3.size() == 6);
        CHECK(std::count_if(s3.begin(), s3.end(), [](auto& p) { return p.sign == 1; }) == 3);
    }
    SUBCASE("k! distinct items, signs sum to 0, sign agrees with cycle count") {
        std::size_t factorial = 1;
        for (int k = 1; k <= 7; ++k) {
            factorial *= k;
            std::set<std::vector<int>> seen;
            int sign_sum = 0;
            for (const auto& p : permutations_signed(k)) {
                seen.insert(p.sigma);
                sign_sum += p.sign;
                CHECK(p.sign == oracle::sign_by_cycles(p.sigma));
            }
            CHECK(seen.size() == factorial);
            if (k >= 2)
                CHECK(sign_sum == 0);
        }
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(permutations_signed(11), SizeLimit);
        CHECK_NOTHROW(permutations_signed(11, 11));
        CHECK_THROWS_AS(permutations_signed(4, 3), SizeLimit);
    }
}

TEST_CASE("for_each_nonnegative_shift visits exactly the nonnegative terms") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& alpha : partitions_of(n)) {
            std::set<std::pair<std::vector<int>, int>> expected;
            for (const auto& p : permutations_signed(alpha.k())) {
                const IntSeq shifted = shifted_vector(alpha, p.sigma);
                // keep the untrimmed length k for comparison
                std::vector<int> full(alpha.k());
                bool nonneg = true;
                for (int i = 0; i < alpha.k(); ++i) {
                    full[i] = shifted[i];
                    nonneg = nonneg && full[i] >= 0;
                }
                if (nonneg)
                    expected.emplace(full, p.sign);
            }
            std::set<std::pair<std::vector<int>, int>> got;
            std::size_t visited = for_each_nonnegative_shift(alpha, 10, [&](std::span<const int> v, int sign) {
                got.emplace(std::vector<int>(v.begin(), v.end()), sign);
            });
            CHECK(visited == expected.size());
            CHECK(got == expected);
        }
    }
    CHECK_THROWS_AS(for_each_nonnegative_shift(Partition{1, 1, 1}, 2, [](auto, int) {}), SizeLimit);
}

TEST_CASE("enumeration helpers") {
    const std::size_t partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(partitions_of(n).size() == partition_counts[n]);
        CHECK(compositions_of(n).size() == (n == 0 ? 1u : 1u << (n - 1)));
    }
    CHECK(weak_compositions(3, 3).size() == 10);
    CHECK(weak_compositions(0, 0).size() == 1);
    CHECK(weak_compositions(2, 0).empty());
}
