#include <doctest.h>

#include <set>

#include "cliquepile/bijection.hpp"
#include "cliquepile/sandpile.hpp"
#include "cliquepile/sorted.hpp"
#include "cliquepile/toppling.hpp"
#include "worked_example.hpp"

using namespace cliquepile;

TEST_CASE("phi on the worked configuration") {
    const auto d = phi(worked::graph(), worked::kappa());
    CHECK(d.columns() == worked::columns);
    CHECK(phi_inverse(Composition{4, 3}, Composition{3, 2}, d) == worked::kappa());
}

TEST_CASE("phi on small graphs") {
    const CliqueIndependentGraph k2(Composition{1}, Composition{});
    CHECK(phi(k2, Configuration(1, 0)).columns() == std::vector<int>{1});
    CHECK(phi_inverse(Composition{1}, Composition{}, LabelledDyckPath({1})) == Configuration(1, 0));

    const CliqueIndependentGraph k3(Composition{2}, Composition{});
    const auto k = Configuration::from_display({0, 1});
    const auto d = phi(k3, k);
    CHECK(d.columns() == std::vector<int>{1, 2});
    CHECK(area_data(d).area == 0);
    CHECK(pmaj(d) == 1);
    CHECK(level(k3, k) == 0);
    CHECK(delay(*run_toppling(k3, k)) == 1);
}

TEST_CASE("phi errors") {
    const CliqueIndependentGraph k3(Composition{2}, Composition{});
    CHECK_THROWS_AS(phi(k3, Configuration::from_display({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(phi(k3, Configuration(2, 0)), std::invalid_argument);
    // reading word 1,2 is not decreasing on an independent block of size 2
    CHECK_THROWS_AS(phi_inverse(Composition{}, Composition{2}, LabelledDyckPath({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse(Composition{3}, Composition{}, LabelledDyckPath({1, 2})), std::invalid_argument);
}

TEST_CASE("verify_theorem reports") {
    const auto r = verify_theorem(Composition{1}, Composition{});
    CHECK(r.ok);
    CHECK(r.sortrec_count == 1);
    CHECK(r.pf_count == 1);
    const auto j = r.to_json();
    CHECK(j["ok"] == true);
    CHECK(j["n"] == 1);
}

TEST_CASE("property: phi is a statistic-preserving bijection for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [mu, nu] : composition_pairs(n)) {
            CAPTURE(mu.to_string());
            CAPTURE(nu.to_string());
            const auto r = verify_theorem(mu, nu);
            CHECK_MESSAGE(r.ok, r.counterexample.value_or(""));
            CHECK(r.sortrec_count == r.pf_count);
            CHECK(r.sandpile_side == r.parking_side);
            // independent re-check of the round trip through both directions
            const CliqueIndependentGraph g(mu, nu);
            std::set<std::vector<int>> images;
            for (const auto& k : enumerate_sortrec(mu, nu)) {
                const auto d = phi(g, k);
                images.insert(d.columns());
                CHECK(phi_inverse(mu, nu, d) == k);
            }
            std::set<std::vector<int>> pf;
            for (const auto& d : enumerate_pf(mu, nu)) pf.insert(d.columns());
            CHECK(images == pf);
        }
}
