#include <doctest.h>

#include "hookcontent/counting.hpp"
#include "hookcontent/json_io.hpp"
#include "hookcontent/probability.hpp"
#include "oracles.hpp"

using namespace hcf;

namespace {

std::vector<int> heights_of(const Partition& mu)
{
    const Partition columns = conjugate(mu);
    return {columns.parts().begin(), columns.parts().end()};
}

} // namespace

TEST_SUITE("probability")
{
    TEST_CASE("probability examples")
    {
        CHECK(P_mu(Partition{2, 1}) == make_exact(2, 3));
        CHECK(P_mu(Partition{1}) == 1);
        CHECK(P_mu(Partition{2, 2}) == make_exact(1, 3));
        CHECK(P_mu(Partition{1, 1, 1}) == 1);
        CHECK(P_mu(Partition{}) == 1);
    }

    TEST_CASE("W and R examples")
    {
        CHECK(W_mu(Partition{2, 1}) == 2);
        CHECK(W_mu(Partition{3, 1}) == 3);
        CHECK(R_mu(Partition{2, 1}) == 3);
        CHECK(R_mu(Partition{2, 2}) == 3);
    }

    TEST_CASE("T family examples")
    {
        auto t = T_family(2, Partition{2, 1});
        CHECK(t.ssyt == 2);
        CHECK(t.colstrict == 3);
        CHECK(t.rowweak_min == 3);
        CHECK(t.labelings == 3);
        CHECK(t.syt == 2);
        CHECK(t.ssyt_min_conjugate == 2);

        t = T_family(3, Partition{2, 1});
        CHECK(t.ssyt == 8);
        CHECK(t.colstrict == 12);

        CHECK_THROWS_AS(T_family(1, Partition{2, 1}), std::domain_error);
    }

    TEST_CASE("theorem 2 examples")
    {
        auto r = theorem2_check(2, Partition{2, 1});
        CHECK(r.consistent);
        CHECK(r.p_value == make_exact(2, 3));
        for (const auto& ratio : r.ratios)
            CHECK(ratio == make_exact(2, 3));

        r = theorem2_check(4, Partition{2, 2});
        CHECK(r.consistent);
        CHECK(r.ratios[0] == make_exact(1, 3));

        const auto j = to_json(theorem2_check(3, Partition{2, 1}));
        CHECK(j.at("shape") == "2,1");
        CHECK(j.at("N") == "3");
        CHECK(j.at("p_value").at("num") == "2");
        CHECK(j.at("p_value").at("den") == "3");
        CHECK(j.at("ratios").size() == 3);
        CHECK(j.at("consistent") == true);
    }

    TEST_CASE("all three ratios agree with P for every small shape")
    {
        for (const auto& mu : partitions_up_to(9)) {
            const int n0 = mu.rows();
            for (int N = n0; N <= n0 + 3; ++N)
                REQUIRE(theorem2_check(N, mu).consistent);
        }
    }

    TEST_CASE("P lies in (0, 1] and the product forms stay consistent")
    {
        for (const auto& mu : partitions_up_to(12)) {
            const Exact p = P_mu(mu);
            REQUIRE(p > 0);
            REQUIRE(p <= 1);
        }
        for (const auto& mu : partitions_up_to(10)) {
            REQUIRE(is_integral(W_mu(mu)));
            REQUIRE(is_integral(R_mu(mu)));
        }
    }

    TEST_CASE("T family members match their enumerators")
    {
        for (const auto& mu : partitions_up_to(7)) {
            const Partition conj = conjugate(mu);
            const int min_letters = conj.rows();
            for (int N = mu.rows(); N <= 5; ++N) {
                const auto t = T_family(N, mu);
                REQUIRE(t.ssyt == enumerate_ssyt(N, mu));
                REQUIRE(t.colstrict == enumerate_colstrict(N, mu));
                REQUIRE(t.rowweak_min == enumerate_rowweak(min_letters, conj));
                REQUIRE(t.ssyt_min_conjugate == enumerate_ssyt(min_letters, conj));
                REQUIRE(t.labelings == enumerate_colincreasing_labelings(mu));
                REQUIRE(t.syt == enumerate_syt(mu));
                REQUIRE(t.labelings == oracle::multinomial(heights_of(mu)));
            }
        }
    }
}
