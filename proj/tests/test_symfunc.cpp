#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "cliquepile/parking.hpp"
#include "cliquepile/sorted.hpp"
#include "cliquepile/symfunc/macdonald.hpp"
#include "oracles.hpp"

using namespace cliquepile;
using namespace cliquepile::symfunc;

namespace {

// Symmetric functions as explicit polynomials in k variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, mpq_class>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly one(int k) { return Poly{{std::vector<int>(k, 0), 1}}; }

// Every exponent vector of total degree d in k variables.
void for_each_exponent(int k, int d, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> e(k, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            e[i] = left;
            visit(e);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, d);
}

Poly power_sum(int k, int r) {
    Poly p;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(k, 0);
        e[i] = r;
        p[e] += 1;
    }
    return p;
}

Poly elementary(int k, int r) {
    Poly p;
    for_each_exponent(k, r, [&](const std::vector<int>& e) {
        if (std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; })) p[e] += 1;
    });
    return p;
}

Poly homogeneous(int k, int r) {
    Poly p;
    for_each_exponent(k, r, [&](const std::vector<int>& e) { p[e] += 1; });
    return p;
}

Poly monomial_sym(int k, const Partition& lambda) {
    Poly p;
    for_each_exponent(k, lambda.size(), [&](const std::vector<int>& e) {
        std::vector<int> s = e;
        std::sort(s.rbegin(), s.rend());
        while (!s.empty() && s.back() == 0) s.pop_back();
        if (s == lambda.parts()) p[e] += 1;
    });
    return p;
}

// Schur function by summing x^T over semistandard tableaux with entries in [k].
Poly schur_by_tableaux(int k, const Partition& lambda) {
    Poly p;
    const int rows = lambda.length();
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lambda.part(r), 0);
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            std::vector<int> e(k, 0);
            for (const auto& row : t)
                for (int x : row) ++e[x - 1];
            p[e] += 1;
            return;
        }
        if (c == lambda.part(r)) {
            fill(r + 1, 0);
            return;
        }
        const int lo = std::max(c > 0 ? t[r][c - 1] : 1, r > 0 ? t[r - 1][c] + 1 : 1);
        for (int x = lo; x <= k; ++x) {
            t[r][c] = x;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return p;
}

Poly basis_poly(Basis b, int k, const Partition& lambda) {
    if (b == Basis::Monomial) return monomial_sym(k, lambda);
    if (b == Basis::Schur) return schur_by_tableaux(k, lambda);
    Poly out = one(k);
    for (int part : lambda.parts()) {
        if (b == Basis::PowerSum) out = multiply(out, power_sum(k, part));
        if (b == Basis::Elementary) out = multiply(out, elementary(k, part));
        if (b == Basis::Homogeneous) out = multiply(out, homogeneous(k, part));
    }
    return out;
}

mpq_class constant_of(const QtRational& r) {
    REQUIRE(r.num().is_constant());
    REQUIRE(r.den().is_constant());
    mpq_class v(r.num().coeff(0, 0), r.den().coeff(0, 0));
    v.canonicalize();
    return v;
}

Poly expr_poly(const SymFuncExpr& f, int k) {
    Poly out;
    for (const auto& [lambda, c] : f.coeffs)
        for (const auto& [e, x] : basis_poly(f.basis, k, lambda)) out[e] += constant_of(c) * x;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

QtRational q() { return QtRational::q(); }
QtRational t() { return QtRational::t(); }

const std::vector<Basis> kClassical{Basis::Monomial, Basis::Elementary, Basis::Homogeneous, Basis::PowerSum,
                                     Basis::Schur};

}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    const Partition l{3, 1};
    CHECK(l.conjugate() == Partition{2, 1, 1});
    CHECK(l.n_statistic() == 1);
    CHECK(l.conjugate().n_statistic() == 3);
    CHECK(Partition{2, 2, 1}.z() == 8);
    CHECK(l.arm(0, 0) == 2);
    CHECK(l.leg(0, 0) == 1);
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition::sorted({1, 3, 2}) == Partition{3, 2, 1});
}

TEST_CASE("degree-two transitions") {
    const Partition two{2}, oneone{1, 1};
    const auto e2 = convert(SymFuncExpr::basis_element(Basis::Elementary, two), Basis::Schur);
    CHECK(e2.coeffs.size() == 1);
    CHECK(e2.coefficient(oneone) == QtRational(1));
    const auto h2 = convert(SymFuncExpr::basis_element(Basis::Homogeneous, two), Basis::Schur);
    CHECK(h2.coeffs.size() == 1);
    CHECK(h2.coefficient(two) == QtRational(1));
    const auto p2 = convert(SymFuncExpr::basis_element(Basis::PowerSum, two), Basis::Schur);
    CHECK(p2.coefficient(two) == QtRational(1));
    CHECK(p2.coefficient(oneone) == QtRational(-1));
    CHECK(p2.coeffs.size() == 2);
}

TEST_CASE("property: every classical transition agrees with explicit polynomials") {
    for (int d = 1; d <= 4; ++d)
        for (Basis from : kClassical)
            for (const Partition& lambda : partitions_of(d)) {
                const auto f = SymFuncExpr::basis_element(from, lambda);
                const Poly want = expr_poly(f, d);
                for (Basis to : kClassical) {
                    CAPTURE(basis_name(from));
                    CAPTURE(basis_name(to));
                    CAPTURE(lambda.to_string());
                    CHECK(expr_poly(convert(f, to), d) == want);
                }
            }
}

TEST_CASE("property: characters and Kostka numbers") {
    for (int d = 1; d <= 6; ++d) {
        const auto parts = partitions_of(d);
        for (const auto& a : parts) {
            // column orthogonality of the character table
            for (const auto& b : parts) {
                mpq_class sum = 0;
                for (const auto& rho : parts) {
                    mpq_class term(character(a, rho) * character(b, rho), rho.z());
                    term.canonicalize();
                    sum += term;
                }
                CHECK(sum == (a == b ? 1 : 0));
            }
            // chi(1^n) counts standard tableaux = K_{a,(1^n)}
            CHECK(character(a, Partition(std::vector<int>(d, 1))) == kostka(a, std::vector<int>(d, 1)));
        }
    }
    // Kostka against direct tableau counting
    for (int d = 1; d <= 4; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const Poly s = schur_by_tableaux(d, lambda);
            for (const auto& mu : partitions_of(d)) {
                std::vector<int> e(d, 0);
                for (int i = 0; i < mu.length(); ++i) e[i] = mu.part(i);
                const auto it = s.find(e);
                CHECK(kostka(lambda, mu.parts()) == (it == s.end() ? 0 : it->second));
            }
        }
    // content order does not matter
    CHECK(kostka(Partition{3, 2}, {1, 2, 2}) == kostka(Partition{3, 2}, {2, 2, 1}));
    CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
}

TEST_CASE("Pieri expansion of e_mu h_nu") {
    // e_1 h_1 = s_2 + s_11
    const auto a = schur_expand_eh({1}, {1});
    CHECK(a.at(Partition{2}) == 1);
    CHECK(a.at(Partition{1, 1}) == 1);
    for (int d = 1; d <= 4; ++d)
        for (const auto& [mu, nu] : composition_pairs(d)) {
            Poly want = one(d);
            for (int m : mu.parts()) want = multiply(want, elementary(d, m));
            for (int v : nu.parts()) want = multiply(want, homogeneous(d, v));
            SymFuncExpr f{d, Basis::Schur, {}};
            for (const auto& [lambda, c] : schur_expand_eh(mu.parts(), nu.parts()))
                f.add(lambda, QtRational::from_rational(mpq_class(c)));
            CHECK(expr_poly(f, d) == want);
        }
}

TEST_CASE("q,t scalar product") {
    const auto p1 = SymFuncExpr::basis_element(Basis::PowerSum, Partition{1});
    CHECK(qt_inner(p1, p1) == (QtRational(1) - q()) / (QtRational(1) - t()));
    const auto p11 = SymFuncExpr::basis_element(Basis::PowerSum, Partition{1, 1});
    const auto p2 = SymFuncExpr::basis_element(Basis::PowerSum, Partition{2});
    CHECK(qt_inner(p11, p2).is_zero());
    CHECK(qt_inner(p2, p2) == QtRational(2) * (QtRational(1) - q() * q()) / (QtRational(1) - t() * t()));
    const auto s2 = SymFuncExpr::basis_element(Basis::Schur, Partition{2});
    const auto s11 = SymFuncExpr::basis_element(Basis::Schur, Partition{1, 1});
    CHECK(hall_inner(s2, s2) == QtRational(1));
    CHECK(hall_inner(s2, s11).is_zero());
    CHECK_THROWS_AS(qt_inner(p1, p2), std::invalid_argument);
}

TEST_CASE("Macdonald P") {
    const auto p1 = macdonald_P(Partition{1});
    CHECK(p1.coeffs.size() == 1);
    CHECK(p1.coefficient(Partition{1}) == QtRational(1));
    const auto p11 = macdonald_P(Partition{1, 1});
    CHECK(p11.coeffs.size() == 1);
    CHECK(p11.coefficient(Partition{1, 1}) == QtRational(1));
    const auto p2 = macdonald_P(Partition{2});
    CHECK(p2.coefficient(Partition{2}) == QtRational(1));
    CHECK(p2.coefficient(Partition{1, 1}) ==
          (QtRational(1) + q()) * (QtRational(1) - t()) / (QtRational(1) - q() * t()));
}

TEST_CASE("property: Macdonald P is orthogonal and unitriangular") {
    for (int d = 1; d <= 4; ++d) {
        const auto parts = partitions_of(d);
        for (const auto& a : parts) {
            const auto pa = macdonald_P(a);
            CHECK(pa.coefficient(a) == QtRational(1));
            for (const auto& [mu, c] : pa.coeffs) CHECK(dominates(a, mu));
            for (const auto& b : parts)
                if (!(a == b)) CHECK(qt_inner(pa, macdonald_P(b)).is_zero());
        }
    }
    // Tabulated value; at q = t it reduces to the Kostka number 2.
    const auto p21 = macdonald_P(Partition{2, 1});
    const QtRational c = p21.coefficient(Partition{1, 1, 1});
    CHECK(c == (QtRational(1) - t()) * (QtRational(2) + q() + t() + QtRational(2) * q() * t()) /
                   (QtRational(1) - q() * t() * t()));
}

TEST_CASE("modified Macdonald H") {
    const auto h1 = modified_H(Partition{1});
    CHECK(h1.coeffs.size() == 1);
    CHECK(h1.coefficient(Partition{1}) == QtRational(1));
    const auto h2 = modified_H(Partition{2});
    CHECK(h2.coefficient(Partition{2}) == QtRational(1));
    CHECK(h2.coefficient(Partition{1, 1}) == q());
    const auto h11 = modified_H(Partition{1, 1});
    CHECK(h11.coefficient(Partition{2}) == QtRational(1));
    CHECK(h11.coefficient(Partition{1, 1}) == t());
}

TEST_CASE("property: H specialisations and conjugation symmetry up to degree 5") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const auto h = modified_H(lambda);
            CAPTURE(lambda.to_string());
            CHECK(h.coefficient(Partition{d}) == QtRational(1));
            CHECK(h.coefficient(Partition(std::vector<int>(d, 1))) == nabla_eigenvalue(lambda));
            const auto hc = modified_H(lambda.conjugate());
            for (const auto& mu : partitions_of(d)) {
                CHECK(h.coefficient(mu) == hc.coefficient(mu).swap_qt());
                // Schur positivity at q = t = 1: H_lambda(1,1) = h_1^n, so coefficients are f^mu
                const BiPoly c = h.coefficient(mu).as_polynomial();
                CHECK(c.evaluate(1, 1) == kostka(mu, std::vector<int>(d, 1)));
            }
        }
}

TEST_CASE("property: basis round trips") {
    const std::vector<Basis> all{Basis::Monomial, Basis::Elementary, Basis::Homogeneous,
                                 Basis::PowerSum, Basis::Schur,      Basis::ModifiedMacdonald};
    for (int d = 1; d <= 5; ++d)
        for (Basis from : all)
            for (const auto& lambda : partitions_of(d)) {
                const auto f = SymFuncExpr::basis_element(from, lambda);
                for (Basis via : all) {
                    const auto back = convert(convert(f, via), from);
                    CAPTURE(basis_name(from));
                    CAPTURE(basis_name(via));
                    CAPTURE(lambda.to_string());
                    CHECK(back.same_as(f));
                }
            }
}

TEST_CASE("nabla e_n") {
    const auto n1 = nabla_e(1);
    CHECK(n1.coeffs.size() == 1);
    CHECK(n1.coefficient(Partition{1}) == QtRational(1));
    const auto n2 = nabla_e(2);
    CHECK(n2.coefficient(Partition{2}) == QtRational(1));
    CHECK(n2.coefficient(Partition{1, 1}) == q() + t());

    const auto qt = QtPolynomial::monomial(1, 0) + QtPolynomial::monomial(0, 1);
    CHECK(pair_with(n2, Composition{2}, Composition{}) == qt);
    CHECK(pair_with(n2, Composition{2}, Composition{}) == sortrec_polynomial(Composition{2}, Composition{}));
    CHECK(pair_with(n2, Composition{}, Composition{1, 1}) == qt + QtPolynomial::constant(1));
    CHECK(pair_with(n2, Composition{}, Composition{1, 1}) == pf_polynomial(Composition{}, Composition{1, 1}));
    CHECK(pair_with(nabla_e(1), Composition{1}, Composition{}) == QtPolynomial::constant(1));
    for (int n = 1; n <= 5; ++n) {
        CHECK(oracle_polynomial(Composition{}, Composition{n}) == QtPolynomial::constant(1));
        CHECK(oracle_polynomial(Composition{}, Composition{n}) == pf_polynomial(Composition{}, Composition{n}));
        const auto cat = oracle_polynomial(Composition{n}, Composition{});
        CHECK(cat.evaluate(1, 1) == oracle::count_dyck_paths(n));
        CHECK(cat == cat.swap_qt());
        CHECK(oracle_polynomial(Composition{}, Composition(std::vector<int>(n, 1))).evaluate(1, 1) ==
              oracle::power(n + 1, n - 1));
    }
}

TEST_CASE("oracle bounds") {
    CHECK_THROWS_AS(oracle_polynomial(Composition{6}, Composition{}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_polynomial(Composition{7}, Composition{}, 7), std::invalid_argument);
    CHECK_THROWS_AS(pair_with(nabla_e(2), Composition{1}, Composition{}), std::invalid_argument);
    CHECK_THROWS_AS(nabla_e(0), std::invalid_argument);
    CHECK_THROWS_AS(transition_tables(7, 7), std::invalid_argument);
}

TEST_CASE("linear algebra over Q(q,t)") {
    QtMatrix a{{q(), QtRational(1)}, {QtRational(1), t()}};
    const auto inv = invert(a);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            QtRational s;
            for (int k = 0; k < 2; ++k) s += a[i][k] * inv[k][j];
            CHECK(s == QtRational(i == j ? 1 : 0));
        }
    CHECK_THROWS_AS(solve_linear({{QtRational(1), QtRational(1)}, {QtRational(1), QtRational(1)}}, {1, 2}),
                    std::domain_error);
}
