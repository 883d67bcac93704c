#include <doctest.h>

#include "hookcontent/counting.hpp"
#include "oracles.hpp"

using namespace hcf;

namespace {

// Every vector in [0,max_entry]^width, in lexicographic order.
std::vector<std::vector<int>> boxes(int width, int max_entry)
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(width), 0);
    while (true) {
        out.push_back(v);
        int i = width - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == max_entry)
            v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++v[static_cast<std::size_t>(i)];
    }
    return out;
}

CountInstance instance(int steps, std::vector<int> counts)
{
    return {steps, ColumnCounts(std::move(counts))};
}

} // namespace

TEST_SUITE("counting")
{
    TEST_CASE("dagger")
    {
        CHECK(dagger(instance(0, {})) == 1);
        CHECK(dagger(instance(3, {2, 1})) == 1);
        CHECK(dagger(instance(3, {1, 2})) == 1);
        CHECK(dagger(instance(3, {1, 3})) == 0);
        CHECK(dagger(instance(3, {0, 0, 2})) == 0);
    }

    TEST_CASE("closed form examples")
    {
        CHECK(formula_F(instance(2, {2, 1})) == 2);
        CHECK(formula_F(instance(1, {1, 1})) == 1);
        CHECK(formula_F(instance(0, {1})) == 0);
        CHECK(formula_F(instance(3, {})) == 1);
        CHECK(formula_F(instance(2, {1})) == 2);
        // A non-monotone tally with dagger = 1 still has no ballots.
        CHECK(formula_F(instance(3, {1, 2})) == 0);
        CHECK(count_multivote(3, ColumnCounts{1, 2}) == 0);
    }

    TEST_CASE("trailing zero counts do not change the closed form")
    {
        for (int width = 0; width <= 3; ++width) {
            for (const auto& v : boxes(width, 3)) {
                for (int N = 0; N <= 4; ++N) {
                    const Exact base = formula_F(instance(N, v));
                    auto padded = v;
                    for (int zeros = 1; zeros <= 3; ++zeros) {
                        padded.push_back(0);
                        REQUIRE(formula_F(instance(N, padded)) == base);
                    }
                }
            }
        }
    }

    TEST_CASE("closed form matches the ballot oracle exactly when dagger holds")
    {
        for (int width = 1; width <= 3; ++width) {
            for (const auto& v : boxes(width, 3)) {
                for (int N = 0; N <= 4; ++N) {
                    const auto inst = instance(N, v);
                    const BigInt brute = oracle::ballot_sequences(N, v, false);
                    if (dagger(inst) == 1)
                        REQUIRE(formula_F(inst) == Exact(brute));
                    else
                        REQUIRE(brute == 0);
                }
            }
        }
    }

    TEST_CASE("closed form satisfies the one-step recursion")
    {
        for (int width = 1; width <= 3; ++width)
            for (const auto& v : boxes(width, 3))
                for (int N = 1; N <= 5; ++N)
                    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; }))
                        REQUIRE(f_recursion_holds(instance(N, v)));
    }

    TEST_CASE("recursive count matches the ballot walker")
    {
        BallotMemo memo;
        for (int width = 0; width <= 3; ++width)
            for (const auto& v : boxes(width, 3))
                for (int N = 0; N <= 5; ++N)
                    REQUIRE(recursive_C(instance(N, v), memo) == count_multivote(N, ColumnCounts(v)));
        CHECK(memo.size() > 0);
        memo.clear();
        CHECK(memo.size() == 0);
        CHECK(recursive_C(instance(2, {2, 1})) == 2);
    }

    TEST_CASE("theorem 1 reports")
    {
        auto r = theorem1_check(instance(2, {2, 1}));
        CHECK(r.dagger == 1);
        CHECK(r.oracle == 2);
        CHECK(r.formula == 2);
        CHECK(r.recursion_checked);
        CHECK(r.pass);

        r = theorem1_check(instance(0, {1, 1}));
        CHECK(r.oracle == 0);
        CHECK(r.formula == 0);
        CHECK_FALSE(r.recursion_checked);
        CHECK(r.pass);

        r = theorem1_check(instance(3, {1, 3}));
        CHECK(r.dagger == 0);
        CHECK(r.oracle == 0);
        CHECK(r.pass);
    }

    TEST_CASE("hook-content count examples")
    {
        CHECK(hcf_count(2, Partition{2, 1}) == 2);
        CHECK(hcf_count(3, Partition{2, 1}) == 8);
        CHECK(hcf_count(1, Partition{1, 1}) == 0);
        CHECK(hcf_count(0, Partition{}) == 1);
        CHECK(hcf_count(4, Partition{1}) == 4);
    }

    TEST_CASE("hook-content count equals the closed form on the conjugate tally")
    {
        for (const auto& p : partitions_up_to(8)) {
            if (p.empty())
                continue;
            const Partition columns = conjugate(p);
            auto parts = p.parts();
            for (int N = 0; N <= 6; ++N)
                REQUIRE(Exact(hcf_count(N, columns)) ==
                        formula_F({N, ColumnCounts(std::vector<int>(parts.begin(), parts.end()))}));
        }
    }

    TEST_CASE("hook-content count against filtering every filling")
    {
        for (const auto& p : partitions_up_to(5))
            for (int N = 0; N <= 4; ++N) {
                auto fillings = oracle::all_fillings(p, N, [&](const std::vector<int>& f) {
                    return oracle::rows_weak(p, f) && oracle::columns_strict(p, f);
                });
                REQUIRE(hcf_count(N, p) == BigInt(static_cast<unsigned long>(fillings.size())));
            }
    }

    TEST_CASE("hook-length count examples")
    {
        CHECK(hlf_count(Partition{2, 1}) == 2);
        CHECK(hlf_count(Partition{2, 2}) == 2);
        CHECK(hlf_count(Partition{3, 2}) == 5);
        CHECK(hlf_count(Partition{3, 2, 1}) == 16);
        CHECK(hlf_count(Partition{}) == 1);
    }

    TEST_CASE("hook-length count equals the standard tableau enumerator")
    {
        for (const auto& p : partitions_up_to(9))
            REQUIRE(hlf_count(p) == enumerate_syt(p));
    }

    TEST_CASE("single-vote closed form")
    {
        CHECK(formula_Fstar(3, ColumnCounts{2, 1}) == 2);
        CHECK(formula_Fstar(0, ColumnCounts{}) == 1);
        for (const auto& p : partitions_up_to(6)) {
            if (p.empty() || p.rows() > 3)
                continue;
            auto parts = p.parts();
            const ColumnCounts n(std::vector<int>(parts.begin(), parts.end()));
            REQUIRE(formula_Fstar(n.total(), n) == Exact(oracle::ballot_sequences(n.total(), {parts.begin(), parts.end()}, true)));
            REQUIRE(fstar_recursion_holds(n.total(), n));
        }
    }
}
