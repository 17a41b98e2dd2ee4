#pragma once

#include <string>

#include "cliquepile/symfunc/bipoly.hpp"

namespace cliquepile::symfunc {

/// Element of Q(q, t) held as a reduced fraction of integer polynomials.
/// Canonical form: gcd(num, den) = 1, den has a positive leading coefficient,
/// zero is 0/1.
class QtRational {
public:
    QtRational() : num_(0), den_(1) {}
    QtRational(long v) : num_(v), den_(1) {}  // NOLINT: implicit from integers
    QtRational(BiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    QtRational(BiPoly num, BiPoly den);
    static QtRational from_rational(const mpq_class& r);

    static QtRational q() { return QtRational(BiPoly::q()); }
    static QtRational t() { return QtRational(BiPoly::t()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The polynomial value; throws std::domain_error if the denominator is
    /// not a unit or the coefficients are not integers.
    BiPoly as_polynomial() const;

    /// f(q, 1/t).
    QtRational invert_t() const;
    QtRational swap_qt() const;

    QtRational operator-() const;
    QtRational& operator+=(const QtRational& o);
    QtRational& operator-=(const QtRational& o);
    QtRational& operator*=(const QtRational& o);
    QtRational& operator/=(const QtRational& o);
    friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
    friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
    friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
    friend QtRational operator/(QtRational a, const QtRational& b) { return a /= b; }
    /// Cross-multiplication test; independent of the reduction.
    friend bool operator==(const QtRational& a, const QtRational& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

    std::string to_string() const;

private:
    void normalize();
    BiPoly num_;
    BiPoly den_;
};

/// q^a t^b.
QtRational qt_monomial(int q_exp, int t_exp);
QtRational pow(const QtRational& x, int k);

}  // namespace cliquepile::symfunc
