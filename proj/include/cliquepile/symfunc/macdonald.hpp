#pragma once

#include <vector>

#include "cliquepile/composition.hpp"
#include "cliquepile/qt_polynomial.hpp"
#include "cliquepile/symfunc/basis.hpp"

namespace cliquepile::symfunc {

using QtMatrix = std::vector<std::vector<QtRational>>;

/// Gram matrix of the monomial basis under qt_inner, rows/columns in the
/// order of transition_tables(degree).partitions.
const QtMatrix& monomial_gram_matrix(int degree, int max_degree = kDefaultMaxDegree);

/// Macdonald P_lambda in the monomial basis: unitriangular with respect to
/// dominance and orthogonal under qt_inner. Obtained as m_lambda plus the
/// combination of lexicographically smaller m_mu orthogonal to all of them
/// (Gram-Schmidt along lex order, solved fraction-free); a coefficient outside
/// the dominance order ideal throws std::logic_error.
SymFuncExpr macdonald_P(const Partition& lambda, int max_degree = kDefaultMaxDegree);

/// prod over cells of (1 - q^arm t^(leg+1)).
QtRational integral_normalizer(const Partition& lambda);

/// J_lambda = integral_normalizer(lambda) * P_lambda, in the monomial basis.
SymFuncExpr integral_J(const Partition& lambda, int max_degree = kDefaultMaxDegree);

/// Modified Macdonald H~_lambda in the Schur basis, from
/// t^{n(lambda)} J_lambda[X / (1 - 1/t); q, 1/t]. Every coefficient must be a
/// polynomial in q, t with integer coefficients (std::logic_error otherwise).
SymFuncExpr modified_H(const Partition& lambda, int max_degree = kDefaultMaxDegree);

/// Row lambda holds the Schur coefficients of H~_lambda; and its inverse.
const QtMatrix& modified_H_matrix(int degree, int max_degree = kDefaultMaxDegree);
const QtMatrix& modified_H_matrix_inverse(int degree, int max_degree = kDefaultMaxDegree);

/// Eigenvalue q^{n(lambda')} t^{n(lambda)} of nabla on H~_lambda.
QtRational nabla_eigenvalue(const Partition& lambda);

/// nabla e_n in the Schur basis. Coefficients are checked to be integer polynomials.
SymFuncExpr nabla_e(int n, int max_degree = kDefaultMaxDegree);

/// Hall pairing of nabla e_n with e_mu h_nu; checked to be a polynomial with
/// non-negative integer coefficients.
QtPolynomial pair_with(const SymFuncExpr& nabla_en, const Composition& mu, const Composition& nu,
                       int max_degree = kDefaultMaxDegree);

/// <nabla e_n, e_mu h_nu> with n = |mu| + |nu|.
QtPolynomial oracle_polynomial(const Composition& mu, const Composition& nu, int max_degree = kDefaultMaxDegree);

/// Solves A x = b over Q(q, t) by Gaussian elimination; throws std::domain_error if singular.
std::vector<QtRational> solve_linear(QtMatrix a, std::vector<QtRational> b);
QtMatrix invert(const QtMatrix& a);

}  // namespace cliquepile::symfunc
