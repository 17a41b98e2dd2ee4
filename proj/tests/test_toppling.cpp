#include <doctest.h>

#include "cliquepile/sandpile.hpp"
#include "cliquepile/toppling.hpp"
#include "oracles.hpp"
#include "worked_example.hpp"

using namespace cliquepile;

TEST_CASE("sweep algorithm on the worked configuration") {
    const auto res = run_toppling(worked::graph(), worked::kappa());
    REQUIRE(res.has_value());
    CHECK(res->sigma == worked::sigma);
    CHECK(res->rounds == worked::rounds);
    CHECK(delay(*res) == 6);
    CHECK(res->position_of(10) == 1);
    CHECK(res->position_of(12) == 12);
    CHECK_THROWS_AS(res->position_of(13), std::out_of_range);
}

TEST_CASE("sweep algorithm edge cases") {
    for (int n = 1; n <= 6; ++n) {
        const CliqueIndependentGraph star(Composition{}, Composition{n});
        const auto res = run_toppling(star, Configuration(n, 0));
        REQUIRE(res.has_value());
        std::vector<int> down;
        for (int v = n; v >= 1; --v) down.push_back(v);
        CHECK(res->sigma == down);
        CHECK(res->rounds == std::vector<int>(n, 0));
        CHECK(delay(*res) == 0);
    }
    const CliqueIndependentGraph k3(Composition{2}, Composition{});
    CHECK_FALSE(run_toppling(k3, Configuration(2, 0)).has_value());
    CHECK_THROWS_AS(run_toppling(k3, Configuration(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(run_toppling(k3, Configuration(3, 0)), std::invalid_argument);
}

TEST_CASE("maj statistics") {
    const auto reversed = std::vector<int>{12, 1, 4, 8, 11, 2, 3, 5, 6, 7, 9, 10};
    const auto s = maj_stats(reversed);
    CHECK(s.descents == std::vector<int>{1, 5});
    CHECK(s.maj == 6);
    CHECK(maj_stats({1, 2, 3, 4}).maj == 0);
    CHECK(maj_stats({1, 2, 3, 4}).descents.empty());
    CHECK(maj_stats({3, 2, 1}).descents == std::vector<int>{1, 2});
    CHECK(maj_stats({3, 2, 1}).maj == 3);
    CHECK(maj_stats({}).maj == 0);
}

TEST_CASE("property: sweep algorithm decides recurrence and delay is maj of reversed sigma") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& [mu, nu] : composition_pairs(n)) {
            const CliqueIndependentGraph g(mu, nu);
            const oracle::ExplicitGraph e(mu.parts(), nu.parts());
            oracle::for_each_stable(e, [&](const std::vector<int>& a) {
                const auto k = Configuration::from_ascending(a);
                const auto res = run_toppling(g, k);
                CHECK(res.has_value() == oracle::recurrent_by_definition(e, a));
                if (!res) return;
                std::vector<int> seen(n + 1, 0);
                for (int v : res->sigma) ++seen[v];
                for (int v = 1; v <= n; ++v) CHECK(seen[v] == 1);
                std::vector<int> rev(res->sigma.rbegin(), res->sigma.rend());
                CHECK(delay(*res) == oracle::maj_of(rev));
                // rounds are non-decreasing along sigma and each sweep is descending
                for (std::size_t j = 0; j + 1 < res->sigma.size(); ++j) {
                    const int a0 = res->sigma[j], a1 = res->sigma[j + 1];
                    CHECK(res->rounds[a0 - 1] <= res->rounds[a1 - 1]);
                    if (res->rounds[a0 - 1] == res->rounds[a1 - 1]) CHECK(a0 > a1);
                }
            });
        }
}
