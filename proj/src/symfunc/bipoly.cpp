#include "cliquepile/symfunc/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace cliquepile::symfunc {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const mpz_class& c) { return UPoly({c}); }

UPoly UPoly::monomial(int exp, const mpz_class& c) {
    std::vector<mpz_class> v(exp + 1, 0);
    v[exp] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class UPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly UPoly::scaled(const mpz_class& k) const {
    if (k == 0) return {};
    UPoly out = *this;
    for (auto& x : out.c_) x *= k;
    return out;
}

UPoly UPoly::shifted(int k) const {
    if (is_zero()) return {};
    UPoly out;
    out.c_.assign(k, 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

UPoly UPoly::divexact(const mpz_class& k) const {
    UPoly out = *this;
    for (auto& x : out.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return out;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return UPoly(std::move(out));
}

UPoly divexact(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (b.degree() == 0) {
        if (a.content() % b.lc() != 0) throw std::domain_error("inexact polynomial division");
        return a.divexact(b.lc());
    }
    UPoly quotient;
    UPoly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (rem.lc() % b.lc() != 0) throw std::domain_error("inexact polynomial division");
        mpz_class coef = rem.lc() / b.lc();
        const int k = rem.degree() - b.degree();
        quotient += UPoly::monomial(k, coef);
        rem -= b.scaled(coef).shifted(k);
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quotient;
}

namespace {

UPoly primitive(const UPoly& a) {
    if (a.is_zero()) return a;
    UPoly p = a.divexact(a.content());
    return p.lc() < 0 ? -p : p;
}

UPoly pseudo_remainder(UPoly rem, const UPoly& b) {
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int k = rem.degree() - b.degree();
        const mpz_class top = rem.lc();
        rem = rem.scaled(b.lc()) - b.scaled(top).shifted(k);
    }
    return rem;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return primitive(b).scaled(b.content());
    if (b.is_zero()) return primitive(a).scaled(a.content());
    mpz_class c;
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return UPoly::constant(c);
    UPoly x = primitive(a);
    UPoly y = primitive(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive(r);
    }
    return primitive(x).scaled(c);
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const mpz_class& c) { return BiPoly(std::vector<UPoly>{UPoly::constant(c)}); }

BiPoly BiPoly::monomial(int q_exp, int t_exp, const mpz_class& c) {
    std::vector<UPoly> v(t_exp + 1);
    v[t_exp] = UPoly::monomial(q_exp, c);
    return BiPoly(std::move(v));
}

BiPoly BiPoly::from_qt(const QtPolynomial& p) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out += monomial(e.first, e.second, mpz_class(static_cast<long>(c)));
    return out;
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_q() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
}

int BiPoly::low_degree_t() const {
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return static_cast<int>(j);
    return 0;
}

int BiPoly::low_degree_q() const {
    int low = INT_MAX;
    for (const auto& u : c_)
        for (int i = 0; i <= u.degree(); ++i)
            if (u.coeffs()[i] != 0) {
                low = std::min(low, i);
                break;
            }
    return low == INT_MAX ? 0 : low;
}

mpz_class BiPoly::coeff(int q_exp, int t_exp) const {
    if (t_exp < 0 || t_exp >= static_cast<int>(c_.size()) || q_exp < 0) return 0;
    return c_[t_exp].coeff(q_exp);
}

int BiPoly::leading_sign() const { return is_zero() ? 0 : sgn(c_.back().lc()); }

UPoly BiPoly::content_t() const {
    UPoly g;
    for (const auto& u : c_) {
        if (u.is_zero()) continue;
        g = gcd(g, u);
        if (g.degree() == 0 && g.lc() == 1) break;
    }
    return g;
}

mpz_class BiPoly::integer_content() const {
    mpz_class g = 0;
    for (const auto& u : c_) {
        mpz_class cu = u.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cu.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BiPoly BiPoly::scaled(const mpz_class& k) const {
    if (k == 0) return {};
    BiPoly out = *this;
    for (auto& u : out.c_) u = u.scaled(k);
    return out;
}

BiPoly BiPoly::times_upoly(const UPoly& u) const {
    std::vector<UPoly> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * u);
    return BiPoly(std::move(v));
}

BiPoly BiPoly::shifted(int q_exp, int t_exp) const {
    if (is_zero()) return {};
    std::vector<UPoly> v(t_exp);
    for (const auto& x : c_) v.push_back(x.shifted(q_exp));
    return BiPoly(std::move(v));
}

BiPoly BiPoly::unshifted(int q_exp, int t_exp) const {
    if (is_zero()) return {};
    if (low_degree_t() < t_exp || low_degree_q() < q_exp) throw std::domain_error("monomial does not divide");
    std::vector<UPoly> v;
    for (std::size_t j = t_exp; j < c_.size(); ++j) {
        const auto& co = c_[j].coeffs();
        v.push_back(co.empty() ? UPoly() : UPoly(std::vector<mpz_class>(co.begin() + q_exp, co.end())));
    }
    return BiPoly(std::move(v));
}

BiPoly BiPoly::reversed_t() const { return BiPoly(std::vector<UPoly>(c_.rbegin(), c_.rend())); }

BiPoly BiPoly::swap_qt() const {
    const int dq = degree_q();
    std::vector<std::vector<mpz_class>> rows(dq + 1, std::vector<mpz_class>(c_.size(), 0));
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (int i = 0; i <= c_[j].degree(); ++i) rows[i][j] = c_[j].coeffs()[i];
    std::vector<UPoly> v;
    for (auto& r : rows) v.emplace_back(std::move(r));
    return BiPoly(std::move(v));
}

mpz_class BiPoly::evaluate(const mpz_class& q, const mpz_class& t) const {
    mpz_class total = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpz_class inner = 0;
        const auto& co = it->coeffs();
        for (auto jt = co.rbegin(); jt != co.rend(); ++jt) inner = inner * q + *jt;
        total = total * t + inner;
    }
    return total;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& u : out.c_) u = -u;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UPoly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(out));
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (b.degree_t() == 0) {
        std::vector<UPoly> v;
        for (const auto& u : a.c_) v.push_back(u.is_zero() ? u : divexact(u, b.c_[0]));
        return BiPoly(std::move(v));
    }
    BiPoly quotient;
    BiPoly rem = a;
    while (!rem.is_zero() && rem.degree_t() >= b.degree_t()) {
        const UPoly coef = divexact(rem.lc_t(), b.lc_t());
        const int k = rem.degree_t() - b.degree_t();
        std::vector<UPoly> term(k + 1);
        term[k] = coef;
        quotient += BiPoly(std::move(term));
        rem -= b.times_upoly(coef).shifted(0, k);
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quotient;
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
    BiPoly rem = a;
    while (!rem.is_zero() && rem.degree_t() >= b.degree_t()) {
        const int k = rem.degree_t() - b.degree_t();
        const UPoly top = rem.lc_t();
        rem = rem.times_upoly(b.lc_t()) - b.times_upoly(top).shifted(0, k);
    }
    return rem;
}

namespace {

BiPoly with_positive_lead(BiPoly p) { return p.leading_sign() < 0 ? -p : p; }

BiPoly primitive_t(const BiPoly& p) {
    if (p.is_zero()) return p;
    const UPoly c = p.content_t();
    if (c.degree() == 0 && c.lc() == 1) return with_positive_lead(p);
    return with_positive_lead(divexact(p, BiPoly::constant(1).times_upoly(c)));
}

// Specialising q to a point where lc_t(a) survives keeps deg_t of any common
// factor, so a constant univariate gcd proves the bivariate gcd is free of t.
bool coprime_in_t(const BiPoly& a, const BiPoly& b) {
    for (long q0 : {3L, 5L, 7L}) {
        auto at = [&](const BiPoly& p) {
            std::vector<mpz_class> c;
            for (const auto& u : p.coeffs_t()) {
                mpz_class v = 0;
                for (int i = u.degree(); i >= 0; --i) v = v * q0 + u.coeffs()[i];
                c.push_back(v);
            }
            return UPoly(std::move(c));
        };
        const UPoly sa = at(a);
        if (sa.degree() != a.degree_t()) continue;
        return gcd(sa, at(b)).degree() == 0;
    }
    return false;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return with_positive_lead(b);
    if (b.is_zero()) return with_positive_lead(a);
    if (a.is_constant() || b.is_constant()) {
        mpz_class g;
        mpz_class ca = a.integer_content();
        mpz_class cb = b.integer_content();
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return BiPoly::constant(g);
    }
    // Common monomial factor first; the rest of the gcd then has no q or t divisor.
    const int low_q = std::min(a.low_degree_q(), b.low_degree_q());
    const int low_t = std::min(a.low_degree_t(), b.low_degree_t());
    if (low_q > 0 || low_t > 0) {
        const BiPoly rest = gcd(a.unshifted(a.low_degree_q(), a.low_degree_t()),
                                b.unshifted(b.low_degree_q(), b.low_degree_t()));
        return rest.shifted(low_q, low_t);
    }
    const UPoly content = gcd(a.content_t(), b.content_t());
    if (coprime_in_t(a, b)) return BiPoly::constant(1).times_upoly(content);
    BiPoly x = primitive_t(a);
    BiPoly y = primitive_t(b);
    if (x.degree_t() < y.degree_t()) std::swap(x, y);
    while (!y.is_zero()) {
        BiPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_t(r);
    }
    return with_positive_lead(primitive_t(x).times_upoly(content));
}

QtPolynomial BiPoly::to_qt() const {
    QtPolynomial out;
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (int i = 0; i <= c_[j].degree(); ++i) {
            const mpz_class& x = c_[j].coeffs()[i];
            if (x == 0) continue;
            if (!x.fits_slong_p()) throw std::overflow_error("coefficient exceeds machine range");
            out.add_term(i, static_cast<int>(j), x.get_si());
        }
    return out;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int j = degree_t(); j >= 0; --j)
        for (int i = c_[j].degree(); i >= 0; --i) {
            mpz_class x = c_[j].coeffs()[i];
            if (x == 0) continue;
            out += first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + ");
            first = false;
            mpz_class mag = abs(x);
            std::string mono;
            if (i > 0) mono += i == 1 ? "q" : "q^" + std::to_string(i);
            if (j > 0) mono += (mono.empty() ? "" : "*") + std::string(j == 1 ? "t" : "t^" + std::to_string(j));
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        }
    return out;
}

}  // namespace cliquepile::symfunc
