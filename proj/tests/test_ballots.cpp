#include <doctest.h>

#include "hookcontent/ballots.hpp"
#include "oracles.hpp"

using namespace hcf;

namespace {

std::vector<int> counts_of(const ColumnCounts& n)
{
    return {n.values().begin(), n.values().end()};
}

// All weakly decreasing vectors with positive entries summing to at most max_sum.
std::vector<ColumnCounts> partition_counts(int max_sum)
{
    std::vector<ColumnCounts> out;
    for (const auto& p : partitions_up_to(max_sum)) {
        auto parts = p.parts();
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    }
    return out;
}

} // namespace

TEST_SUITE("ballots")
{
    TEST_CASE("multi-vote examples")
    {
        CHECK(count_multivote(0, ColumnCounts{}) == 1);
        CHECK(oracle::ballot_sequences(1, {1, 1}, false) == 1);
        CHECK(count_multivote(1, ColumnCounts{1, 1}) == 1);
        CHECK(oracle::ballot_sequences(2, {2, 1}, false) == 2);
        CHECK(count_multivote(2, ColumnCounts{2, 1}) == 2);
        CHECK(count_multivote(4, ColumnCounts{0, 0}) == 1);
        CHECK(count_multivote(3, ColumnCounts{}) == 1);
        CHECK(count_multivote(-1, ColumnCounts{}) == 0);
    }

    TEST_CASE("single-vote examples")
    {
        CHECK(oracle::ballot_sequences(3, {2, 1}, true) == 2);
        CHECK(count_singlevote(3, ColumnCounts{2, 1}) == 2);
        CHECK(count_singlevote(2, ColumnCounts{2, 1}) == 0);
        CHECK(oracle::ballot_sequences(2, {1, 1}, true) == 1);
        CHECK(count_singlevote(2, ColumnCounts{1, 1}) == 1);
        CHECK(count_singlevote(0, ColumnCounts{}) == 1);
        CHECK(count_singlevote(1, ColumnCounts{}) == 0);
    }

    TEST_CASE("ballot walkers agree with unpruned sequence enumeration")
    {
        for (int width = 0; width <= 3; ++width) {
            std::vector<int> n(static_cast<std::size_t>(width), 0);
            // Every vector in [0,2]^width.
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == n.size()) {
                    for (int steps = 0; steps <= 3; ++steps) {
                        REQUIRE(count_multivote(steps, ColumnCounts(n)) == oracle::ballot_sequences(steps, n, false));
                        REQUIRE(count_singlevote(steps, ColumnCounts(n)) == oracle::ballot_sequences(steps, n, true));
                    }
                    return;
                }
                for (int v = 0; v <= 2; ++v) {
                    n[i] = v;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }
    }

    TEST_CASE("tableau enumerator examples")
    {
        CHECK(enumerate_ssyt(2, Partition{2, 1}) == 2);
        CHECK(enumerate_ssyt(1, Partition{1, 1}) == 0);
        CHECK(enumerate_ssyt(3, Partition{1}) == 3);
        CHECK(enumerate_ssyt(0, Partition{}) == 1);

        CHECK(enumerate_syt(Partition{2, 1}) == 2);
        CHECK(enumerate_syt(Partition{1, 1, 1}) == 1);
        CHECK(enumerate_syt(Partition{2, 2}) == 2);

        CHECK(enumerate_colstrict(2, Partition{2, 1}) == 3);
        CHECK(enumerate_colstrict(1, Partition{1}) == 1);
        CHECK(enumerate_colstrict(2, Partition{1, 1}) == 1);

        CHECK(enumerate_rowweak(2, Partition{2, 1}) == 3);
        CHECK(enumerate_rowweak(1, Partition{1, 1}) == 0);

        CHECK(enumerate_colincreasing_labelings(Partition{2, 1}) == 3);
        CHECK(enumerate_colincreasing_labelings(Partition{1}) == 1);
        CHECK(enumerate_colincreasing_labelings(Partition{1, 1}) == 1);
    }

    TEST_CASE("tableau enumerators agree with filtering every filling")
    {
        for (const auto& p : partitions_up_to(5)) {
            for (int N = 0; N <= 4; ++N) {
                auto ssyt = oracle::all_fillings(p, N, [&](const std::vector<int>& f) {
                    return oracle::rows_weak(p, f) && oracle::columns_strict(p, f);
                });
                REQUIRE(enumerate_ssyt(N, p) == BigInt(static_cast<unsigned long>(ssyt.size())));

                auto colstrict = oracle::all_fillings(p, N + p.columns(), [&](const std::vector<int>& f) {
                    for (Cell c : cells(p))
                        if (f[oracle::index_of(p, c)] > N + c.col)
                            return false;
                    return oracle::columns_strict(p, f);
                });
                REQUIRE(enumerate_colstrict(N, p) == BigInt(static_cast<unsigned long>(colstrict.size())));

                auto rowweak = oracle::all_fillings(p, N, [&](const std::vector<int>& f) {
                    for (Cell c : cells(p))
                        if (f[oracle::index_of(p, c)] <= c.row)
                            return false;
                    return oracle::rows_weak(p, f);
                });
                REQUIRE(enumerate_rowweak(N, p) == BigInt(static_cast<unsigned long>(rowweak.size())));
            }
            auto syt = oracle::all_fillings(p, p.size(), [&](const std::vector<int>& f) {
                return oracle::all_distinct(f) && oracle::rows_strict(p, f) && oracle::columns_strict(p, f);
            });
            REQUIRE(enumerate_syt(p) == BigInt(static_cast<unsigned long>(syt.size())));
            auto labelings = oracle::all_fillings(p, p.size(), [&](const std::vector<int>& f) {
                return oracle::all_distinct(f) && oracle::columns_strict(p, f);
            });
            REQUIRE(enumerate_colincreasing_labelings(p) == BigInt(static_cast<unsigned long>(labelings.size())));
        }
    }

    TEST_CASE("multi-vote ballots are semistandard tableaux of the conjugate shape")
    {
        for (const auto& n : partition_counts(8)) {
            if (n.length() == 0)
                continue;
            const Partition shape = conjugate(as_partition(n));
            for (int N = 0; N <= 6; ++N)
                REQUIRE(count_multivote(N, n) == enumerate_ssyt(N, shape));
        }
    }

    TEST_CASE("single-vote ballots are standard tableaux of the conjugate shape")
    {
        for (const auto& n : partition_counts(9))
            REQUIRE(count_singlevote(n.total(), n) == enumerate_syt(conjugate(as_partition(n))));
    }

    TEST_CASE("multi-vote count satisfies the last-ballot recursion")
    {
        for (const auto& n : partition_counts(6)) {
            if (n.length() == 0)
                continue;
            for (int N = 1; N <= 5; ++N) {
                BigInt sum = 0;
                for (unsigned long mask = 0; mask < (1UL << n.length()); ++mask) {
                    auto reduced = counts_of(n);
                    for (std::size_t i = 0; i < reduced.size(); ++i)
                        reduced[i] -= static_cast<int>((mask >> i) & 1UL);
                    sum += count_multivote(N - 1, ColumnCounts(reduced));
                }
                REQUIRE(count_multivote(N, n) == sum);
            }
        }
    }

    TEST_CASE("enumeration is deterministic")
    {
        const Partition p{3, 2, 1};
        const BigInt first = enumerate_ssyt(4, p);
        for (int i = 0; i < 3; ++i)
            CHECK(enumerate_ssyt(4, p) == first);
        CHECK(collect_ssyt(3, p) == collect_ssyt(3, p));
    }

    TEST_CASE("budget exceeded is an error, not a hang")
    {
        CHECK_THROWS_AS(enumerate_ssyt(6, Partition{4, 4}, {100}), BudgetExceeded);
        CHECK_THROWS_AS(count_multivote(5, ColumnCounts{3, 3, 3}, {10}), BudgetExceeded);
        CHECK_NOTHROW(enumerate_ssyt(2, Partition{2, 1}, {100}));
    }

    TEST_CASE("collected fillings")
    {
        const auto ssyt = collect_ssyt(2, Partition{2, 1});
        REQUIRE(ssyt.size() == 2);
        CHECK(ssyt[0].entries == std::vector<int>{1, 1, 2});
        CHECK(ssyt[1].entries == std::vector<int>{1, 2, 2});
        CHECK(ssyt[1].at({0, 1}) == 2);
        CHECK_THROWS_AS(ssyt[0].at({1, 1}), ContractViolation);
        CHECK(collect_colstrict(2, Partition{2, 1}).size() == 3);
        CHECK(collect_rowweak(2, Partition{2, 1}).size() == 3);
    }

    TEST_CASE("semistandard set is the intersection of column-strict and row-weak sets")
    {
        auto r = intersection_check(2, Partition{2, 1});
        CHECK(r.ssyt == 2);
        CHECK(r.colstrict == 3);
        CHECK(r.rowweak == 3);
        CHECK(r.intersection == 2);
        CHECK(r.pass);

        r = intersection_check(1, Partition{1});
        CHECK(r.ssyt == 1);
        CHECK(r.colstrict == 1);
        CHECK(r.rowweak == 1);
        CHECK(r.pass);

        CHECK(intersection_check(3, Partition{2, 2}).pass);
        for (const auto& p : partitions_up_to(5))
            for (int N = 0; N <= 4; ++N)
                REQUIRE(intersection_check(N, p).pass);
    }
}
