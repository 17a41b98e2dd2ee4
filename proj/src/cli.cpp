#include "cliquepile/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cliquepile/bijection.hpp"
#include "cliquepile/graph.hpp"
#include "cliquepile/parking.hpp"
#include "cliquepile/sandpile.hpp"
#include "cliquepile/sorted.hpp"
#include "cliquepile/symfunc/macdonald.hpp"
#include "cliquepile/toppling.hpp"

namespace cliquepile::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOracleDefaultMaxN = symfunc::kDefaultMaxDegree;

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

// ------------------------------------------------------------ example

struct Assertion {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass() const { return expected == actual; }
};

std::vector<Assertion> worked_example_assertions(const std::string& config_text) {
    const CliqueIndependentGraph g(Composition{4, 3}, Composition{3, 2});
    const Configuration k = Configuration::parse(config_text);
    std::vector<Assertion> rows;
    auto add = [&](std::string name, std::string expected, auto compute) {
        std::string actual;
        try {
            actual = compute();
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        rows.push_back({std::move(name), std::move(expected), std::move(actual)});
    };
    auto toppling = [&]() -> TopplingResult {
        auto res = run_toppling(g, k);
        if (!res) throw std::runtime_error("not recurrent");
        return *res;
    };

    add("sigma", "10,9,7,6,5,3,2,11,8,4,1,12", [&] { return join(toppling().sigma); });
    add("rounds", "1,0,0,1,0,0,0,1,0,0,1,2", [&] { return join(toppling().rounds); });
    add("delay", "6", [&] { return std::to_string(delay(toppling())); });
    add("level", "35", [&] { return std::to_string(level(g, k)); });
    add("lift", "3,8,11,4,11,11,10,8,11,11,10,3", [&] { return join(lift(g, k).config.ascending()); });
    add("u_word", "0,1,1,3,4,5,3,6,5,2,2,3",
        [&] { return join(u_word(toppling().sigma, lift(g, k).config)); });
    add("w_word", "1,2,3,4,5,6,7,7,6,4,3,4", [&] { return join(w_word(toppling().sigma)); });
    add("phi_columns", "9,4,1,8,1,1,2,4,1,1,2,9", [&] { return phi(g, k).to_string(); });
    add("area", "0,1,2,3,4,4,5,4,5,2,2,3|35", [&] {
        AreaData a = area_data(phi(g, k));
        return join(a.area_word) + "|" + std::to_string(a.area);
    });
    add("pmaj", "6", [&] { return std::to_string(pmaj(phi(g, k))); });
    add("parking_word_is_sigma", "true",
        [&] { return std::string(parking_word(phi(g, k)) == toppling().sigma ? "true" : "false"); });
    return rows;
}

int cmd_example(const std::string& config, bool as_json, std::ostream& out) {
    const auto rows = worked_example_assertions(config);
    bool ok = true;
    std::optional<std::string> first_failure;
    for (const auto& r : rows)
        if (!r.pass()) {
            ok = false;
            if (!first_failure) first_failure = r.name;
        }
    if (as_json) {
        json j;
        j["mu"] = {4, 3};
        j["nu"] = {3, 2};
        j["config"] = config;
        j["ok"] = ok;
        j["first_mismatch"] = first_failure ? json(*first_failure) : json(nullptr);
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass()}});
        j["assertions"] = arr;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : rows) {
            out << (r.pass() ? "PASS " : "FAIL ") << r.name << "  expected=" << r.expected;
            if (!r.pass()) out << "  actual=" << r.actual;
            out << '\n';
        }
        out << (ok ? "all assertions passed" : "first mismatch: " + *first_failure) << '\n';
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------ poly

QtPolynomial side_polynomial(const std::string& side, const Composition& mu, const Composition& nu,
                             std::optional<int> max_n) {
    if (side == "sandpile") return sortrec_polynomial(mu, nu, max_n.value_or(kDefaultMaxN));
    if (side == "parking") return pf_polynomial(mu, nu, max_n.value_or(kDefaultMaxN));
    if (side == "oracle") return symfunc::oracle_polynomial(mu, nu, max_n.value_or(kOracleDefaultMaxN));
    throw std::invalid_argument("unknown side '" + side + "'");
}

int cmd_poly(const Composition& mu, const Composition& nu, const std::string& side, const std::string& format,
             std::optional<int> max_n, std::ostream& out) {
    if (format != "json" && format != "csv" && format != "latex")
        throw std::invalid_argument("unknown format '" + format + "'");
    const QtPolynomial p = side_polynomial(side, mu, nu, max_n);
    if (format == "json") {
        json j;
        j["n"] = mu.size() + nu.size();
        j["mu"] = mu.parts();
        j["nu"] = nu.parts();
        j["side"] = side;
        j["terms"] = p.terms_json();
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << p.to_csv();
    } else {
        out << p.to_latex() << '\n';
    }
    return 0;
}

// ------------------------------------------------------------ verify

bool verify_pair(const Composition& mu, const Composition& nu, bool against_oracle, std::optional<int> max_n,
                 bool as_json, std::ostream& out) {
    VerificationReport report = verify_theorem(mu, nu, max_n.value_or(kDefaultMaxN));
    std::optional<QtPolynomial> oracle;
    if (against_oracle) {
        oracle = symfunc::oracle_polynomial(mu, nu, max_n.value_or(kOracleDefaultMaxN));
        if (!(*oracle == report.sandpile_side)) {
            if (report.ok) report.counterexample = "oracle polynomial differs: " + oracle->to_string();
            report.ok = false;
        }
    }
    if (as_json) {
        json j = report.to_json();
        if (oracle) j["oracle"] = oracle->terms_json();
        out << j.dump() << '\n';
    } else {
        out << (report.ok ? "PASS" : "FAIL") << " mu=" << mu.to_string() << " nu=" << nu.to_string()
            << " n=" << report.n << " |SortRec|=" << report.sortrec_count << " |PF|=" << report.pf_count
            << " poly=" << report.sandpile_side.to_string();
        if (!report.ok) out << "\n  counterexample: " << *report.counterexample;
        out << '\n';
    }
    return report.ok;
}

// ------------------------------------------------------------ graph-info

int cmd_graph_info(const Composition& mu, const Composition& nu, std::ostream& out) {
    const CliqueIndependentGraph g(mu, nu);
    json j;
    j["n"] = g.n();
    j["mu"] = mu.parts();
    j["nu"] = nu.parts();
    json comps = json::array();
    for (const Component& c : g.components())
        comps.push_back({{"kind", c.kind == ComponentKind::Clique ? "clique" : "independent"},
                         {"first", c.first},
                         {"last", c.last}});
    j["components"] = comps;
    std::vector<int> degrees;
    for (int v = 1; v <= g.n(); ++v) degrees.push_back(g.degree(v));
    j["degrees"] = degrees;
    j["non_sink_edges"] = g.non_sink_edge_count();
    out << j.dump() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sandpile model on clique-independent graphs and the (level, delay) bistatistic"};
    app.require_subcommand(1);

    std::string mu_text = "-";
    std::string nu_text = "-";
    std::optional<int> max_n;
    bool as_json = false;

    auto* example = app.add_subcommand("example", "Recompute the (4,3),(3,2) worked example");
    std::string config = "3,10,11,11,8,10,11,10,4,9,7,3";
    example->add_option("--config", config, "Display word overriding the worked configuration");
    example->add_flag("--json", as_json, "Machine-readable assertion list");

    auto* poly = app.add_subcommand("poly", "Print a generating polynomial");
    std::string side = "sandpile";
    std::string format = "json";
    bool use_oracle = false;
    poly->add_option("--mu", mu_text, "Clique composition, e.g. 4,3 ('-' for empty)");
    poly->add_option("--nu", nu_text, "Independent composition ('-' for empty)");
    poly->add_option("--side", side, "sandpile | parking | oracle");
    poly->add_option("--format", format, "json | csv | latex");
    poly->add_flag("--oracle", use_oracle, "Same as --side oracle");
    poly->add_option("--max-n", max_n, "Size guard (default 8, oracle 5)");

    auto* verify = app.add_subcommand("verify", "Check the bijection and the polynomial identity");
    std::string against;
    std::optional<int> all_n;
    verify->add_option("--mu", mu_text, "Clique composition");
    verify->add_option("--nu", nu_text, "Independent composition");
    verify->add_option("--all", all_n, "Check every composition pair with 1 <= n <= N");
    verify->add_option("--against", against, "Also compare with 'oracle'");
    verify->add_option("--max-n", max_n, "Size guard (default 8, oracle 5)");
    verify->add_flag("--json", as_json, "One JSON report per line");

    auto* enumerate = app.add_subcommand("enumerate", "List sorted recurrent configurations or PF(mu;nu)");
    std::string what = "sortrec";
    enumerate->add_option("--mu", mu_text, "Clique composition");
    enumerate->add_option("--nu", nu_text, "Independent composition");
    enumerate->add_option("--what", what, "sortrec | pf");
    enumerate->add_option("--max-n", max_n, "Size guard (default 8)");

    auto* graph_info = app.add_subcommand("graph-info", "Describe the graph");
    graph_info->add_option("--mu", mu_text, "Clique composition");
    graph_info->add_option("--nu", nu_text, "Independent composition");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const Composition mu = Composition::parse(mu_text);
        const Composition nu = Composition::parse(nu_text);
        if (*example) return cmd_example(config, as_json, out);
        if (*poly) return cmd_poly(mu, nu, use_oracle ? "oracle" : side, format, max_n, out);
        if (*verify) {
            if (!against.empty() && against != "oracle") throw std::invalid_argument("--against accepts only 'oracle'");
            const bool with_oracle = against == "oracle";
            bool ok = true;
            if (all_n) {
                for (int n = 1; n <= *all_n; ++n)
                    for (const auto& [m, v] : composition_pairs(n)) ok = verify_pair(m, v, with_oracle, max_n, as_json, out) && ok;
            } else {
                ok = verify_pair(mu, nu, with_oracle, max_n, as_json, out);
            }
            return ok ? 0 : 1;
        }
        if (*enumerate) {
            if (what == "sortrec") {
                for (const auto& k : enumerate_sortrec(mu, nu, max_n.value_or(kDefaultMaxN))) out << k.to_string() << '\n';
            } else if (what == "pf") {
                for (const auto& d : enumerate_pf(mu, nu, max_n.value_or(kDefaultMaxN))) out << d.to_string() << '\n';
            } else {
                throw std::invalid_argument("unknown --what '" + what + "'");
            }
            return 0;
        }
        if (*graph_info) return cmd_graph_info(mu, nu, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace cliquepile::cli
