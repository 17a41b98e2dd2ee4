#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "cliquepile/qt_polynomial.hpp"

namespace cliquepile::symfunc {

/// Univariate polynomial over the integers, dense, lowest degree first.
/// The zero polynomial has no coefficients; the top coefficient is never zero.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpz_class> coeffs);
    static UPoly constant(const mpz_class& c);
    static UPoly monomial(int exp, const mpz_class& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0); }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    UPoly scaled(const mpz_class& k) const;
    UPoly shifted(int k) const;  // times x^k
    UPoly divexact(const mpz_class& k) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);
/// Greatest common divisor with positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Polynomial in q and t over the integers, stored as a polynomial in t whose
/// coefficients are polynomials in q.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(long v) : BiPoly(constant(mpz_class(v))) {}  // NOLINT: implicit from integers
    static BiPoly constant(const mpz_class& c);
    static BiPoly monomial(int q_exp, int t_exp, const mpz_class& c = 1);
    static BiPoly q() { return monomial(1, 0); }
    static BiPoly t() { return monomial(0, 1); }
    static BiPoly from_qt(const QtPolynomial& p);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].degree() <= 0); }
    int degree_t() const { return static_cast<int>(c_.size()) - 1; }
    int degree_q() const;
    /// Lowest t-exponent that carries a non-zero coefficient (0 for zero).
    int low_degree_t() const;
    int low_degree_q() const;
    const UPoly& lc_t() const { return c_.back(); }
    const std::vector<UPoly>& coeffs_t() const { return c_; }
    mpz_class coeff(int q_exp, int t_exp) const;
    /// Sign of the coefficient of the highest t power's highest q power.
    int leading_sign() const;

    UPoly content_t() const;
    mpz_class integer_content() const;
    BiPoly scaled(const mpz_class& k) const;
    BiPoly times_upoly(const UPoly& u) const;
    BiPoly shifted(int q_exp, int t_exp) const;
    /// Divides out q^a t^b; requires every term to carry at least that power.
    BiPoly unshifted(int q_exp, int t_exp) const;

    /// t^deg_t * f(q, 1/t).
    BiPoly reversed_t() const;
    BiPoly swap_qt() const;
    mpz_class evaluate(const mpz_class& q, const mpz_class& t) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Throws std::overflow_error if a coefficient leaves the long long range.
    QtPolynomial to_qt() const;
    std::string to_string() const;

private:
    explicit BiPoly(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }
    void trim();
    friend BiPoly divexact(const BiPoly& a, const BiPoly& b);
    friend BiPoly gcd(const BiPoly& a, const BiPoly& b);
    friend BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);
    std::vector<UPoly> c_;
};

BiPoly divexact(const BiPoly& a, const BiPoly& b);
/// Greatest common divisor, normalised to a positive leading coefficient.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace cliquepile::symfunc
