#include "cliquepile/symfunc/macdonald.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cliquepile::symfunc {

namespace {

template <typename Value, typename Build>
const Value& cached(std::mutex& mutex, std::map<int, Value>& cache, int degree, Build build) {
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(degree);
        if (it != cache.end()) return it->second;
    }
    Value value = build();
    std::lock_guard lock(mutex);
    return cache.try_emplace(degree, std::move(value)).first->second;
}

QtRational power_sum_weight(const Partition& rho) {
    QtRational w = QtRational::from_rational(mpq_class(rho.z()));
    for (int part : rho.parts())
        w *= QtRational(BiPoly(1) - BiPoly::monomial(part, 0), BiPoly(1) - BiPoly::monomial(0, part));
    return w;
}

// Solves a x = b over Q(q, t) for a polynomial system by Bareiss elimination,
// so every intermediate stays in Z[q, t]; only the final quotients are reduced.
std::vector<QtRational> solve_fraction_free(std::vector<std::vector<BiPoly>> a, std::vector<BiPoly> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    BiPoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular system over Q(q,t)");
        std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = BiPoly();
        }
        prev = a[k][k];
    }
    if (n == 0) return {};
    // y = det * x is polynomial (Cramer), so back substitution divides exactly.
    const BiPoly det = a[n - 1][n - 1];
    std::vector<BiPoly> y(n);
    for (std::size_t i = n; i-- > 0;) {
        BiPoly acc = det * a[i][n];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!a[i][j].is_zero()) acc -= a[i][j] * y[j];
        y[i] = divexact(acc, a[i][i]);
    }
    std::vector<QtRational> x;
    for (const BiPoly& yi : y) x.emplace_back(yi, det);
    return x;
}

// The monomial Gram matrix times a common factor that makes every entry an
// integer polynomial. Orthogonality is unaffected by the scaling.
std::vector<std::vector<BiPoly>> polynomial_gram(int degree, int max_degree) {
    QtRational clear(1);
    for (int k = 1; k <= degree; ++k)
        for (int m = 0; m < degree / k; ++m) clear *= QtRational(BiPoly(1) - BiPoly::monomial(0, k));
    QtMatrix gram = monomial_gram_matrix(degree, max_degree);
    mpz_class lcm = 1;
    for (auto& row : gram)
        for (auto& x : row) {
            x *= clear;
            if (!x.is_polynomial()) throw std::logic_error("Gram matrix denominators not cleared");
            const mpz_class d = x.den().coeff(0, 0);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
    std::vector<std::vector<BiPoly>> out;
    for (const auto& row : gram) {
        out.emplace_back();
        for (const auto& x : row) out.back().push_back((x * QtRational::from_rational(mpq_class(lcm))).as_polynomial());
    }
    return out;
}

// P_lambda for every lambda of the degree, as monomial coefficient vectors.
// P_lambda = m_lambda + sum of lexicographically smaller m_mu, orthogonal to
// all of them; that this stays inside the dominance order is checked, not assumed.
std::vector<std::vector<QtRational>> build_macdonald_P(int degree, int max_degree) {
    const TransitionTables& tab = transition_tables(degree, max_degree);
    const auto gram = polynomial_gram(degree, max_degree);
    const std::size_t size = tab.partitions.size();
    std::vector<std::vector<QtRational>> p(size, std::vector<QtRational>(size));
    for (std::size_t k = 0; k < size; ++k) {
        // Unknowns: coefficients on indices k+1..size-1 (smaller in lex order).
        std::vector<std::vector<BiPoly>> a;
        std::vector<BiPoly> b;
        for (std::size_t r = k + 1; r < size; ++r) {
            a.emplace_back(gram[r].begin() + static_cast<std::ptrdiff_t>(k + 1), gram[r].end());
            b.push_back(-gram[r][k]);
        }
        const std::vector<QtRational> c = solve_fraction_free(std::move(a), std::move(b));
        p[k][k] = QtRational(1);
        for (std::size_t j = 0; j < c.size(); ++j) p[k][k + 1 + j] = c[j];
        for (std::size_t b2 = 0; b2 < size; ++b2)
            if (!p[k][b2].is_zero() && !dominates(tab.partitions[k], tab.partitions[b2]))
                throw std::logic_error("Macdonald P" + tab.partitions[k].to_string() + " has a term outside dominance");
    }
    return p;
}

std::vector<SymFuncExpr> build_modified_H(int degree, int max_degree) {
    const TransitionTables& tab = transition_tables(degree, max_degree);
    std::vector<SymFuncExpr> out;
    for (const Partition& lambda : tab.partitions) {
        const SymFuncExpr j = convert(integral_J(lambda, max_degree), Basis::PowerSum, max_degree);
        const QtRational shift = qt_monomial(0, static_cast<int>(lambda.n_statistic()));
        SymFuncExpr plethystic{degree, Basis::PowerSum, {}};
        for (const auto& [rho, c] : j.coeffs) {
            // p_k -> p_k / (1 - t^{-k}) = p_k t^k / (t^k - 1)
            QtRational factor = shift;
            for (int k : rho.parts())
                factor *= QtRational(BiPoly::monomial(0, k), BiPoly::monomial(0, k) - BiPoly(1));
            plethystic.add(rho, c.invert_t() * factor);
        }
        SymFuncExpr schur = convert(plethystic, Basis::Schur, max_degree);
        for (auto& [mu, c] : schur.coeffs) {
            try {
                c = QtRational(c.as_polynomial());
            } catch (const std::domain_error&) {
                throw std::logic_error("H~" + lambda.to_string() + " has a non-polynomial coefficient on s" +
                                       mu.to_string() + ": " + c.to_string());
            }
        }
        out.push_back(std::move(schur));
    }
    return out;
}

const std::vector<SymFuncExpr>& modified_H_all(int degree, int max_degree) {
    transition_tables(degree, max_degree);
    static std::mutex mutex;
    static std::map<int, std::vector<SymFuncExpr>> cache;
    return cached(mutex, cache, degree, [&] { return build_modified_H(degree, max_degree); });
}

const std::vector<std::vector<QtRational>>& macdonald_P_all(int degree, int max_degree) {
    transition_tables(degree, max_degree);
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<QtRational>>> cache;
    return cached(mutex, cache, degree, [&] { return build_macdonald_P(degree, max_degree); });
}

}  // namespace

const QtMatrix& monomial_gram_matrix(int degree, int max_degree) {
    const TransitionTables& tab = transition_tables(degree, max_degree);
    static std::mutex mutex;
    static std::map<int, QtMatrix> cache;
    return cached(mutex, cache, degree, [&] {
        // m_a = sum_rho A[a][rho] p_rho, so <m_a, m_b> = sum_rho A[a][rho] A[b][rho] w_rho.
        const RationalMatrix& a = tab.from_monomial.at(Basis::PowerSum);
        const std::size_t size = tab.partitions.size();
        std::vector<QtRational> weight;
        for (const Partition& rho : tab.partitions) weight.push_back(power_sum_weight(rho));
        QtMatrix g(size, std::vector<QtRational>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i; j < size; ++j) {
                QtRational total;
                for (std::size_t r = 0; r < size; ++r) {
                    const mpq_class c = a[i][r] * a[j][r];
                    if (c != 0) total += QtRational::from_rational(c) * weight[r];
                }
                g[i][j] = total;
                g[j][i] = total;
            }
        return g;
    });
}

SymFuncExpr macdonald_P(const Partition& lambda, int max_degree) {
    const TransitionTables& tab = transition_tables(lambda.size(), max_degree);
    const auto& coeffs = macdonald_P_all(lambda.size(), max_degree)[tab.index.at(lambda)];
    SymFuncExpr out{lambda.size(), Basis::Monomial, {}};
    for (std::size_t b = 0; b < coeffs.size(); ++b) out.add(tab.partitions[b], coeffs[b]);
    return out;
}

QtRational integral_normalizer(const Partition& lambda) {
    QtRational c(1);
    for (int r = 0; r < lambda.length(); ++r)
        for (int col = 0; col < lambda.part(r); ++col)
            c *= QtRational(BiPoly(1) - BiPoly::monomial(lambda.arm(r, col), lambda.leg(r, col) + 1));
    return c;
}

SymFuncExpr integral_J(const Partition& lambda, int max_degree) {
    return macdonald_P(lambda, max_degree).scaled(integral_normalizer(lambda));
}

SymFuncExpr modified_H(const Partition& lambda, int max_degree) {
    const TransitionTables& tab = transition_tables(lambda.size(), max_degree);
    return modified_H_all(lambda.size(), max_degree)[tab.index.at(lambda)];
}

const QtMatrix& modified_H_matrix(int degree, int max_degree) {
    const TransitionTables& tab = transition_tables(degree, max_degree);
    static std::mutex mutex;
    static std::map<int, QtMatrix> cache;
    return cached(mutex, cache, degree, [&] {
        const auto& all = modified_H_all(degree, max_degree);
        const std::size_t size = tab.partitions.size();
        QtMatrix m(size, std::vector<QtRational>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) m[i][j] = all[i].coefficient(tab.partitions[j]);
        return m;
    });
}

const QtMatrix& modified_H_matrix_inverse(int degree, int max_degree) {
    static std::mutex mutex;
    static std::map<int, QtMatrix> cache;
    return cached(mutex, cache, degree, [&] { return invert(modified_H_matrix(degree, max_degree)); });
}

QtRational nabla_eigenvalue(const Partition& lambda) {
    return qt_monomial(static_cast<int>(lambda.conjugate().n_statistic()), static_cast<int>(lambda.n_statistic()));
}

SymFuncExpr nabla_e(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("nabla_e needs n >= 1");
    transition_tables(n, max_degree);
    static std::mutex mutex;
    static std::map<int, SymFuncExpr> cache;
    return cached(mutex, cache, n, [&] {
        // e_n = s_{1^n}; its H~ coordinates x solve H^T x = unit vector at (1^n).
        const TransitionTables& tab = transition_tables(n, max_degree);
        const QtMatrix& h = modified_H_matrix(n, max_degree);
        const std::size_t size = h.size();
        QtMatrix ht(size, std::vector<QtRational>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) ht[i][j] = h[j][i];
        std::vector<QtRational> unit(size);
        unit[tab.index.at(Partition(std::vector<int>(n, 1)))] = QtRational(1);
        const std::vector<QtRational> x = solve_linear(ht, unit);
        SymFuncExpr image{n, Basis::ModifiedMacdonald, {}};
        for (std::size_t i = 0; i < size; ++i)
            if (!x[i].is_zero()) image.add(tab.partitions[i], x[i] * nabla_eigenvalue(tab.partitions[i]));
        SymFuncExpr schur = convert(image, Basis::Schur, max_degree);
        for (auto& [mu, c] : schur.coeffs) {
            try {
                c = QtRational(c.as_polynomial());
            } catch (const std::domain_error&) {
                throw std::logic_error("nabla e_" + std::to_string(n) + " has a non-polynomial coefficient on s" +
                                       mu.to_string());
            }
        }
        return schur;
    });
}

QtPolynomial pair_with(const SymFuncExpr& nabla_en, const Composition& mu, const Composition& nu, int max_degree) {
    const int n = mu.size() + nu.size();
    if (n != nabla_en.degree) throw std::invalid_argument("pair_with: degree mismatch");
    if (n > max_degree) throw std::invalid_argument("pair_with: degree exceeds the oracle bound");
    const SymFuncExpr schur = convert(nabla_en, Basis::Schur, max_degree);
    QtRational total;
    for (const auto& [lambda, c] : schur_expand_eh(mu.parts(), nu.parts())) {
        const QtRational coeff = schur.coefficient(lambda);
        if (!coeff.is_zero()) total += coeff * QtRational::from_rational(mpq_class(c));
    }
    QtPolynomial out = total.as_polynomial().to_qt();
    if (!out.non_negative())
        throw std::logic_error("pairing <nabla e_n, e_mu h_nu> has a negative coefficient: " + out.to_string());
    return out;
}

QtPolynomial oracle_polynomial(const Composition& mu, const Composition& nu, int max_degree) {
    const int n = mu.size() + nu.size();
    if (n > max_degree) throw std::invalid_argument("oracle limited to n <= " + std::to_string(max_degree));
    return pair_with(nabla_e(n, max_degree), mu, nu, max_degree);
}

std::vector<QtRational> solve_linear(QtMatrix a, std::vector<QtRational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular system over Q(q,t)");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const QtRational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    std::vector<QtRational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        QtRational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!a[i][j].is_zero()) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

QtMatrix invert(const QtMatrix& a) {
    const std::size_t n = a.size();
    QtMatrix inv(n, std::vector<QtRational>(n));
    // Row e of the inverse solves x^T a = e^T, i.e. a^T x = e.
    QtMatrix at(n, std::vector<QtRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = a[j][i];
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<QtRational> unit(n);
        unit[e] = QtRational(1);
        const std::vector<QtRational> x = solve_linear(at, unit);
        for (std::size_t l = 0; l < n; ++l) inv[e][l] = x[l];
    }
    return inv;
}

}  // namespace cliquepile::symfunc
