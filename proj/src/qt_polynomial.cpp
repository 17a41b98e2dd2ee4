#include "cliquepile/qt_polynomial.hpp"

#include <sstream>

namespace cliquepile {

QtPolynomial QtPolynomial::constant(long long c) { return monomial(0, 0, c); }

QtPolynomial QtPolynomial::monomial(int q_exp, int t_exp, long long c) {
    QtPolynomial p;
    p.add_term(q_exp, t_exp, c);
    return p;
}

void QtPolynomial::add_term(int q_exp, int t_exp, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long QtPolynomial::coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
}

QtPolynomial QtPolynomial::swap_qt() const {
    QtPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
    return out;
}

long long QtPolynomial::evaluate(long long q, long long t) const {
    long long total = 0;
    for (const auto& [e, c] : terms_) {
        long long term = c;
        for (int i = 0; i < e.first; ++i) term *= q;
        for (int i = 0; i < e.second; ++i) term *= t;
        total += term;
    }
    return total;
}

bool QtPolynomial::non_negative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
    QtPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

namespace {

std::string power(char var, int exp, bool latex) {
    if (exp == 0) return "";
    std::string s(1, var);
    if (exp > 1) s += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
    return s;
}

std::string render(const std::map<QtPolynomial::Exponents, long long>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        long long mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono = power('q', e.first, latex);
        std::string tpart = power('t', e.second, latex);
        if (!latex && !mono.empty() && !tpart.empty()) mono += "*";
        mono += tpart;
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + (latex ? "" : "*") + mono;
    }
    return out;
}

}  // namespace

std::string QtPolynomial::to_string() const { return render(terms_, false); }
std::string QtPolynomial::to_latex() const { return render(terms_, true); }

std::string QtPolynomial::to_csv() const {
    std::ostringstream os;
    os << "q,t,c\n";
    for (const auto& [e, c] : terms_) os << e.first << ',' << e.second << ',' << c << '\n';
    return os.str();
}

nlohmann::ordered_json QtPolynomial::terms_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) arr.push_back({{"q", e.first}, {"t", e.second}, {"c", c}});
    return arr;
}

QtPolynomial QtPolynomial::from_terms_json(const nlohmann::ordered_json& terms) {
    QtPolynomial p;
    for (const auto& term : terms) p.add_term(term.at("q").get<int>(), term.at("t").get<int>(), term.at("c").get<long long>());
    return p;
}

}  // namespace cliquepile
