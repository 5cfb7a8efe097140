#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ohara/partitions.hpp"

using namespace ohara;

namespace {

// Partitions of r inside a rows x cols box, by direct enumeration of
// weakly decreasing row vectors.
long long brute_box_count(int cols, int rows, int r) {
    long long count = 0;
    auto rec = [&](auto&& self, int row, int cap, int left) -> void {
        if (left == 0) {
            ++count;
            return;
        }
        if (row == rows) return;
        for (int part = std::min(cap, left); part >= 1; --part) self(self, row + 1, part, left - part);
    };
    rec(rec, 0, cols, r);
    return count;
}

} // namespace

TEST(Partition, RejectsInvalidInput) {
    EXPECT_THROW(Partition({2, 3}), Error);
    EXPECT_THROW(Partition({2, 0}), Error);
    EXPECT_THROW(Partition({-1}), Error);
    try {
        Partition({1, 2});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_partition);
    }
}

TEST(Partition, EmptyPartition) {
    const Partition e;
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e.size(), 0);
    EXPECT_EQ(e.length(), 0);
    EXPECT_EQ(e.first(), 0);
    EXPECT_EQ(conjugate(e), e);
    EXPECT_EQ(to_string(e), "()");
}

TEST(Partition, BasicStatistics) {
    const Partition mu{4, 3, 1, 1};
    EXPECT_EQ(mu.size(), 9);
    EXPECT_EQ(mu.length(), 4);
    EXPECT_EQ(mu.row(2), 3);
    EXPECT_EQ(mu.row(5), 0);
    EXPECT_EQ(conjugate(mu), Partition({4, 2, 2, 1}));
    EXPECT_EQ(mult(mu, 1), 2);
    EXPECT_EQ(mult(mu, 2), 0);
    EXPECT_EQ(distinct_rows(mu), (std::vector<int>{1, 3, 4}));
    EXPECT_EQ(to_string(mu), "(4,3,1,1)");
    EXPECT_EQ(Partition::column(3), Partition({1, 1, 1}));
}

TEST(Partition, BStatisticMatchesConjugateForm) {
    // b(mu) = sum (i-1) mu_i = sum over columns of binom(mu'_j, 2)
    for (int n = 0; n <= 10; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            long long via_cols = 0;
            const auto cols = conjugate(mu);
            for (int c : cols.parts()) via_cols += static_cast<long long>(c) * (c - 1) / 2;
            EXPECT_EQ(b_stat(mu), via_cols) << to_string(mu);
        }
    EXPECT_EQ(b_stat(Partition({3, 3, 2, 1})), 10);
}

TEST(Partition, QStatDifferencesAreColumnLengths) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            const auto cols = conjugate(mu);
            EXPECT_EQ(q_stat(mu, 0), 0);
            for (int j = 1; j <= n + 1; ++j) EXPECT_EQ(q_stat(mu, j) - q_stat(mu, j - 1), cols.row(j));
        }
}

TEST(Partition, ConjugationIsInvolution) {
    for (int n = 0; n <= 10; ++n)
        for (const auto& mu : enumerate_partitions(n)) EXPECT_EQ(conjugate(conjugate(mu)), mu);
}

TEST(Partition, CountSequence) {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n)
        EXPECT_EQ(enumerate_partitions(n).size(), expected[static_cast<std::size_t>(n)]);
}

TEST(Partition, EnumerationIsLexDecreasingAndDistinct) {
    const auto ps = enumerate_partitions(8);
    std::set<Partition> seen(ps.begin(), ps.end());
    EXPECT_EQ(seen.size(), ps.size());
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
    EXPECT_EQ(ps.front(), Partition({8}));
    EXPECT_EQ(ps.back(), Partition::column(8));
}

TEST(Partition, BoundedEnumerationRespectsBox) {
    const auto ps = enumerate_partitions_bounded(6, 3, 2);
    EXPECT_EQ(ps, (std::vector<Partition>{Partition({3, 3})}));
    for (const auto& mu : enumerate_partitions_bounded(9, 4, 3)) {
        EXPECT_LE(mu.first(), 4);
        EXPECT_LE(mu.length(), 3);
    }
}

TEST(RectangleCounts, MatchesBruteForce) {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k)
            for (int r = -1; r <= n * k + 1; ++r) EXPECT_EQ(count_in_rectangle(n, k, r), brute_box_count(n, k, r)) << n << k << r;
}

TEST(RectangleCounts, Symmetries) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 14);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = d(rng), k = d(rng);
        std::uniform_int_distribution<int> rr(0, n * k);
        const int r = rr(rng);
        EXPECT_EQ(count_in_rectangle(n, k, r), count_in_rectangle(k, n, r));
        EXPECT_EQ(count_in_rectangle(n, k, r), count_in_rectangle(n, k, n * k - r));
    }
}

TEST(RectangleCounts, SmallValues) {
    EXPECT_EQ(count_in_rectangle(2, 2, 2), 2);
    EXPECT_EQ(count_in_rectangle(2, 2, 1), 1);
    EXPECT_EQ(count_in_rectangle(3, 3, 0), 1);
    EXPECT_EQ(count_in_rectangle(3, 3, 10), 0);
}
