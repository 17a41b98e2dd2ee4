#include "cliquepile/symfunc/qt_rational.hpp"

#include <stdexcept>

namespace cliquepile::symfunc {

QtRational::QtRational(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

QtRational QtRational::from_rational(const mpq_class& r) {
    return QtRational(BiPoly::constant(r.get_num()), BiPoly::constant(r.get_den()));
}

void QtRational::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    BiPoly g = gcd(num_, den_);
    if (den_.leading_sign() < 0) g = -g;
    if (!(g == BiPoly(1))) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

BiPoly QtRational::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
    const mpz_class d = den_.coeff(0, 0);
    if (d == 1) return num_;
    if (num_.integer_content() % d != 0) throw std::domain_error("non-integer coefficients: " + to_string());
    return divexact(num_, den_);
}

QtRational QtRational::invert_t() const {
    // num(q,1/t) / den(q,1/t) = t^(dd - dn) * rev(num) / rev(den)
    const int shift = den_.degree_t() - num_.degree_t();
    BiPoly n = num_.reversed_t();
    BiPoly d = den_.reversed_t();
    if (shift >= 0)
        n = n.shifted(0, shift);
    else
        d = d.shifted(0, -shift);
    return {n, d};
}

QtRational QtRational::swap_qt() const { return {num_.swap_qt(), den_.swap_qt()}; }

QtRational QtRational::operator-() const {
    QtRational out = *this;
    out.num_ = -out.num_;
    return out;
}

QtRational& QtRational::operator+=(const QtRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        const BiPoly g = gcd(den_, o.den_);
        const BiPoly a = divexact(o.den_, g);
        num_ = num_ * a + o.num_ * divexact(den_, g);
        den_ = den_ * a;
    }
    normalize();
    return *this;
}

QtRational& QtRational::operator-=(const QtRational& o) { return *this += -o; }

QtRational& QtRational::operator*=(const QtRational& o) {
    if (is_zero() || o.is_zero()) return *this = QtRational();
    const BiPoly g1 = gcd(num_, o.den_);
    const BiPoly g2 = gcd(o.num_, den_);
    num_ = divexact(num_, g1) * divexact(o.num_, g2);
    den_ = divexact(den_, g2) * divexact(o.den_, g1);
    if (den_.leading_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

QtRational& QtRational::operator/=(const QtRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(q,t)");
    QtRational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.leading_sign() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

std::string QtRational::to_string() const {
    if (den_ == BiPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QtRational qt_monomial(int q_exp, int t_exp) { return QtRational(BiPoly::monomial(q_exp, t_exp)); }

QtRational pow(const QtRational& x, int k) {
    if (k < 0) return QtRational(1) / pow(x, -k);
    QtRational out(1);
    for (int i = 0; i < k; ++i) out *= x;
    return out;
}

}  // namespace cliquepile::symfunc
