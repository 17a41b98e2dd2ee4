#include "cliquepile/bijection.hpp"

#include <set>
#include <stdexcept>

#include "cliquepile/sandpile.hpp"
#include "cliquepile/sorted.hpp"
#include "cliquepile/toppling.hpp"

namespace cliquepile {

LabelledDyckPath phi(const CliqueIndependentGraph& g, const Configuration& k) {
    if (!is_sorted(g, k)) throw std::invalid_argument("phi: configuration " + k.to_string() + " is not sorted");
    if (!run_toppling(g, k)) throw std::invalid_argument("phi: configuration " + k.to_string() + " is not recurrent");
    const Lift l = lift(g, k);
    const int n = g.n();
    std::vector<int> columns(n);
    for (int i = 1; i <= n; ++i) columns[i - 1] = n - l.config[i];
    if (!is_parking_function(columns))
        throw std::logic_error("phi: image of " + k.to_string() + " is not a parking function");
    LabelledDyckPath d(std::move(columns));
    if (!in_shuffle(reading_word(d), g.mu(), g.nu()))
        throw std::logic_error("phi: reading word of the image of " + k.to_string() + " is not in the shuffle set");
    return d;
}

Configuration phi_inverse(const Composition& mu, const Composition& nu, const LabelledDyckPath& d) {
    CliqueIndependentGraph g(mu, nu);
    if (d.n() != g.n()) throw std::invalid_argument("phi_inverse: size mismatch");
    if (!in_shuffle(reading_word(d), mu, nu))
        throw std::invalid_argument("phi_inverse: " + d.to_string() + " is not in PF(mu; nu)");
    std::vector<int> lifted(g.n());
    for (int i = 1; i <= g.n(); ++i) lifted[i - 1] = g.n() - d.column_of(i);
    Configuration k = unlift(g, Configuration::from_ascending(std::move(lifted)));
    if (!is_sorted(g, k) || !is_non_negative(k) || !is_stable(g, k) || !run_toppling(g, k))
        throw std::logic_error("phi_inverse: preimage " + k.to_string() + " of " + d.to_string() +
                               " is not sorted recurrent");
    if (!(phi(g, k) == d)) throw std::logic_error("phi_inverse: round trip failed for " + d.to_string());
    return k;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["mu"] = mu.parts();
    j["nu"] = nu.parts();
    j["ok"] = ok;
    j["sortrec_count"] = sortrec_count;
    j["pf_count"] = pf_count;
    j["sandpile"] = sandpile_side.terms_json();
    j["parking"] = parking_side.terms_json();
    j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
    return j;
}

VerificationReport verify_theorem(const Composition& mu, const Composition& nu, int max_n) {
    CliqueIndependentGraph g(mu, nu);
    check_bound(g.n(), max_n);
    VerificationReport report{mu, nu, g.n()};

    auto fail = [&](const std::string& what) {
        if (report.ok) report.counterexample = what;
        report.ok = false;
    };

    const auto configs = enumerate_sortrec(mu, nu, max_n);
    const auto paths = enumerate_pf(mu, nu, max_n);
    report.sortrec_count = configs.size();
    report.pf_count = paths.size();
    const std::set<LabelledDyckPath> pf_set(paths.begin(), paths.end());
    std::set<LabelledDyckPath> images;

    for (const Configuration& k : configs) {
        const auto res = run_toppling(g, k);
        const long long lev = level(g, k);
        const long long del = delay(*res);
        report.sandpile_side.add_term(static_cast<int>(lev), static_cast<int>(del), 1);

        const std::string tag = k.to_string();
        std::optional<LabelledDyckPath> image;
        try {
            image = phi(g, k);
        } catch (const std::exception& e) {
            fail(tag + ": " + e.what());
            continue;
        }
        const LabelledDyckPath& d = *image;
        if (!pf_set.count(d)) fail(tag + ": image " + d.to_string() + " not in PF(mu; nu)");
        if (area_data(d).area != lev) fail(tag + ": area differs from level");
        if (pmaj(d) != del) fail(tag + ": pmaj differs from delay");
        if (parking_word(d) != res->sigma) fail(tag + ": parking word differs from toppling word");
        if (!images.insert(d).second) fail(tag + ": image " + d.to_string() + " already hit");
    }
    for (const auto& d : paths) report.parking_side.add_term(static_cast<int>(area_data(d).area), static_cast<int>(pmaj(d)), 1);
    if (images.size() != pf_set.size()) fail("phi is not onto PF(mu; nu): " + std::to_string(images.size()) + " of " +
                                             std::to_string(pf_set.size()) + " parking functions hit");
    if (!(report.sandpile_side == report.parking_side)) fail("generating polynomials differ");
    return report;
}

}  // namespace cliquepile
