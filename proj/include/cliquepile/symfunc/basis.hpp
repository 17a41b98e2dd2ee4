#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cliquepile/symfunc/partition.hpp"
#include "cliquepile/symfunc/qt_rational.hpp"

namespace cliquepile::symfunc {

enum class Basis { Monomial, Elementary, Homogeneous, PowerSum, Schur, ModifiedMacdonald };

std::string basis_name(Basis b);

inline constexpr int kDefaultMaxDegree = 5;
inline constexpr int kHardMaxDegree = 6;

/// Homogeneous symmetric function of a fixed degree, expanded in one basis.
/// Zero coefficients are not stored.
struct SymFuncExpr {
    int degree = 0;
    Basis basis = Basis::Schur;
    std::map<Partition, QtRational> coeffs;

    static SymFuncExpr basis_element(Basis b, const Partition& lambda);
    QtRational coefficient(const Partition& lambda) const;
    void add(const Partition& lambda, const QtRational& c);

    SymFuncExpr& operator+=(const SymFuncExpr& o);
    SymFuncExpr scaled(const QtRational& c) const;
    /// Coefficient-wise equality; both sides must use the same basis.
    bool same_as(const SymFuncExpr& o) const;
    std::string to_string() const;
};

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Transition data for one degree. Row lambda of to_monomial(B) expands B_lambda
/// in the monomial basis; from_monomial(B) is its inverse.
struct TransitionTables {
    int degree = 0;
    std::vector<Partition> partitions;  // decreasing lexicographic order
    std::map<Partition, int> index;
    std::map<Basis, RationalMatrix> to_monomial;
    std::map<Basis, RationalMatrix> from_monomial;
};

/// Built once per degree and cached; safe for concurrent readers.
const TransitionTables& transition_tables(int degree, int max_degree = kDefaultMaxDegree);

/// Re-expands f in the target basis. Throws std::invalid_argument above max_degree.
SymFuncExpr convert(const SymFuncExpr& f, Basis target, int max_degree = kDefaultMaxDegree);

/// The q,t scalar product: <p_a, p_b> = delta_ab z_a prod_i (1 - q^{a_i}) / (1 - t^{a_i}).
QtRational qt_inner(const SymFuncExpr& f, const SymFuncExpr& g, int max_degree = kDefaultMaxDegree);
/// The Hall scalar product, in which the Schur functions are orthonormal.
QtRational hall_inner(const SymFuncExpr& f, const SymFuncExpr& g, int max_degree = kDefaultMaxDegree);

// Integer combinatorics behind the transition tables.

/// Character of the irreducible indexed by lambda on cycle type rho (Murnaghan-Nakayama).
mpz_class character(const Partition& lambda, const Partition& rho);
/// Number of semistandard tableaux of shape lambda and content alpha.
mpz_class kostka(const Partition& lambda, const std::vector<int>& content);

/// Schur expansion of e_{mu_1} e_{mu_2} ... h_{nu_1} h_{nu_2} ... via Pieri rules.
std::map<Partition, mpz_class> schur_expand_eh(const std::vector<int>& e_parts, const std::vector<int>& h_parts);

}  // namespace cliquepile::symfunc
