#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace cliquepile {

/// Bivariate polynomial in q, t with integer coefficients. Zero coefficients
/// are never stored; iteration runs over (q-exponent, t-exponent) ascending.
class QtPolynomial {
public:
    using Exponents = std::pair<int, int>;

    QtPolynomial() = default;
    static QtPolynomial constant(long long c);
    static QtPolynomial monomial(int q_exp, int t_exp, long long c = 1);

    void add_term(int q_exp, int t_exp, long long c);
    long long coefficient(int q_exp, int t_exp) const;
    const std::map<Exponents, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Exchanges the roles of q and t.
    QtPolynomial swap_qt() const;
    long long evaluate(long long q, long long t) const;
    bool non_negative() const;

    QtPolynomial& operator+=(const QtPolynomial& other);
    friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
    friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);
    friend bool operator==(const QtPolynomial&, const QtPolynomial&) = default;

    /// Human-readable form such as "1 + t + q" (terms in canonical order).
    std::string to_string() const;
    /// Sum of monomials in LaTeX, e.g. "2q^{2}t + 1".
    std::string to_latex() const;
    /// "q,t,c" header followed by one line per term.
    std::string to_csv() const;
    /// [{"q":..,"t":..,"c":..}, ...] in canonical order.
    nlohmann::ordered_json terms_json() const;
    static QtPolynomial from_terms_json(const nlohmann::ordered_json& terms);

private:
    std::map<Exponents, long long> terms_;
};

}  // namespace cliquepile
