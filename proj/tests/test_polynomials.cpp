#include <doctest.h>

#include <random>

#include "cliquepile/qt_polynomial.hpp"
#include "cliquepile/symfunc/bipoly.hpp"
#include "cliquepile/symfunc/qt_rational.hpp"

using namespace cliquepile;
using namespace cliquepile::symfunc;

namespace {

BiPoly random_bipoly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-3, 3);
    BiPoly p;
    for (int i = 0; i < 4; ++i) p += BiPoly::monomial(deg(rng), deg(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("QtPolynomial formatting") {
    QtPolynomial p = QtPolynomial::monomial(1, 0) + QtPolynomial::monomial(0, 1);
    CHECK(p.to_string() == "t + q");
    CHECK(p.to_csv() == "q,t,c\n0,1,1\n1,0,1\n");
    CHECK(p.terms_json().dump() == R"([{"q":0,"t":1,"c":1},{"q":1,"t":0,"c":1}])");
    CHECK(QtPolynomial::from_terms_json(p.terms_json()) == p);
    CHECK(QtPolynomial::constant(1).to_latex() == "1");
    CHECK(QtPolynomial::monomial(2, 1, 2).to_latex() == "2q^{2}t");
    CHECK(QtPolynomial().to_string() == "0");
    CHECK(p.swap_qt() == p);
    CHECK(p.evaluate(1, 1) == 2);
    CHECK((p * p).coefficient(1, 1) == 2);
    QtPolynomial z = p;
    z.add_term(1, 0, -1);
    CHECK(z == QtPolynomial::monomial(0, 1));
    CHECK_FALSE(QtPolynomial::monomial(0, 0, -1).non_negative());
}

TEST_CASE("univariate gcd") {
    const UPoly x_minus_1({-1, 1});
    const UPoly x_plus_1({1, 1});
    const UPoly x2_minus_1 = x_minus_1 * x_plus_1;
    CHECK(gcd(x2_minus_1, x_minus_1 * x_minus_1) == x_minus_1);
    CHECK(gcd(x2_minus_1.scaled(6), x_plus_1.scaled(4)) == x_plus_1.scaled(2));
    CHECK(divexact(x2_minus_1, x_plus_1) == x_minus_1);
    CHECK_THROWS_AS(divexact(x2_minus_1, UPoly({2, 1})), std::domain_error);
}

TEST_CASE("bivariate gcd and exact division") {
    const BiPoly q = BiPoly::q(), t = BiPoly::t();
    const BiPoly a = BiPoly(1) - q * t;
    const BiPoly b = BiPoly(1) + q;
    const BiPoly ga = gcd(a * b, a * (BiPoly(1) - t));
    CHECK((ga == a || ga == -a));
    const BiPoly g = gcd(a * b * b, b * (q - t));
    CHECK((g == b || g == -b));
    CHECK(divexact(a * b, b) == a);
    CHECK(gcd(q * q * t, q * t * t) == q * t);
    CHECK(gcd(BiPoly(6), BiPoly(4)) == BiPoly(2));
    CHECK(BiPoly::from_qt(QtPolynomial::monomial(2, 3, 5)).to_qt() == QtPolynomial::monomial(2, 3, 5));
    CHECK((q + t).swap_qt() == q + t);
    CHECK((q * t * t).reversed_t() == q);
}

TEST_CASE("property: gcd divides both inputs and removes all common factors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly common = random_bipoly(rng, 2);
        const BiPoly x = random_bipoly(rng, 3);
        const BiPoly y = random_bipoly(rng, 3);
        if (common.is_zero() || x.is_zero() || y.is_zero()) continue;
        const BiPoly a = common * x;
        const BiPoly b = common * y;
        const BiPoly g = gcd(a, b);
        REQUIRE_FALSE(g.is_zero());
        CHECK(divexact(a, g) * g == a);
        CHECK(divexact(b, g) * g == b);
        CHECK(divexact(g, common) * common == g);  // common divides g
        // cofactors are coprime
        const BiPoly rest = gcd(divexact(a, g), divexact(b, g));
        CHECK(rest.is_constant());
    }
}

TEST_CASE("QtRational field arithmetic") {
    const QtRational q = QtRational::q(), t = QtRational::t();
    const QtRational x = (QtRational(1) - q) / (QtRational(1) - t);
    CHECK(x * (QtRational(1) - t) == QtRational(1) - q);
    CHECK((x - x).is_zero());
    CHECK(x / x == QtRational(1));
    CHECK((q * q - QtRational(1)) / (q - QtRational(1)) == q + QtRational(1));
    CHECK(((q * q - QtRational(1)) / (q - QtRational(1))).is_polynomial());
    CHECK(QtRational::from_rational(mpq_class(2, 4)) * QtRational(2) == QtRational(1));
    CHECK(t.invert_t() * t == QtRational(1));
    CHECK(x.invert_t().invert_t() == x);
    CHECK(x.swap_qt() == (QtRational(1) - t) / (QtRational(1) - q));
    CHECK(pow(q, 3) == qt_monomial(3, 0));
    CHECK(pow(q, -2) * q * q == QtRational(1));
    CHECK_THROWS_AS(QtRational(1) / QtRational(), std::domain_error);
    CHECK_THROWS_AS(x.as_polynomial(), std::domain_error);
    CHECK_THROWS_AS(QtRational::from_rational(mpq_class(1, 2)).as_polynomial(), std::domain_error);
}

TEST_CASE("property: QtRational evaluation is a homomorphism") {
    std::mt19937 rng(11);
    auto eval = [](const QtRational& r, long a, long b) {
        mpq_class v(r.num().evaluate(a, b), r.den().evaluate(a, b));
        v.canonicalize();
        return v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        BiPoly n1 = random_bipoly(rng, 3), d1 = random_bipoly(rng, 2);
        BiPoly n2 = random_bipoly(rng, 3), d2 = random_bipoly(rng, 2);
        if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
        const QtRational a(n1, d1), b(n2, d2);
        for (auto [qv, tv] : {std::pair{5L, 7L}, std::pair{-3L, 11L}}) {
            if (d1.evaluate(qv, tv) == 0 || d2.evaluate(qv, tv) == 0 || n2.evaluate(qv, tv) == 0) continue;
            auto canon = [](mpq_class v) {
                v.canonicalize();
                return v;
            };
            const mpq_class ea = canon(mpq_class(n1.evaluate(qv, tv), d1.evaluate(qv, tv)));
            const mpq_class eb = canon(mpq_class(n2.evaluate(qv, tv), d2.evaluate(qv, tv)));
            CHECK(eval(a + b, qv, tv) == canon(ea + eb));
            CHECK(eval(a - b, qv, tv) == canon(ea - eb));
            CHECK(eval(a * b, qv, tv) == canon(ea * eb));
            CHECK(eval(a / b, qv, tv) == canon(ea / eb));
        }
    }
}
