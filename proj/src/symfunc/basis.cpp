#include "cliquepile/symfunc/basis.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "cliquepile/symfunc/macdonald.hpp"

namespace cliquepile::symfunc {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "m";
        case Basis::Elementary: return "e";
        case Basis::Homogeneous: return "h";
        case Basis::PowerSum: return "p";
        case Basis::Schur: return "s";
        case Basis::ModifiedMacdonald: return "Ht";
    }
    return "?";
}

SymFuncExpr SymFuncExpr::basis_element(Basis b, const Partition& lambda) {
    SymFuncExpr f{lambda.size(), b, {}};
    f.coeffs.emplace(lambda, QtRational(1));
    return f;
}

QtRational SymFuncExpr::coefficient(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? QtRational() : it->second;
}

void SymFuncExpr::add(const Partition& lambda, const QtRational& c) {
    if (c.is_zero()) return;
    if (lambda.size() != degree) throw std::invalid_argument("term of the wrong degree");
    auto [it, inserted] = coeffs.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

SymFuncExpr& SymFuncExpr::operator+=(const SymFuncExpr& o) {
    if (o.basis != basis || o.degree != degree) throw std::invalid_argument("adding expressions in different bases");
    for (const auto& [lambda, c] : o.coeffs) add(lambda, c);
    return *this;
}

SymFuncExpr SymFuncExpr::scaled(const QtRational& c) const {
    SymFuncExpr out{degree, basis, {}};
    for (const auto& [lambda, x] : coeffs) out.add(lambda, x * c);
    return out;
}

bool SymFuncExpr::same_as(const SymFuncExpr& o) const {
    if (o.basis != basis || o.degree != degree) return false;
    std::set<Partition> keys;
    for (const auto& kv : coeffs) keys.insert(kv.first);
    for (const auto& kv : o.coeffs) keys.insert(kv.first);
    for (const auto& lambda : keys)
        if (!(coefficient(lambda) == o.coefficient(lambda))) return false;
    return true;
}

std::string SymFuncExpr::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + basis_name(basis) + lambda.to_string();
    }
    return out;
}

// ------------------------------------------------------------ combinatorics

namespace {

enum class RowRule { ZeroOne, Free, SingleColumn };

// Counts matrices with the given row sums and column sums whose rows obey the rule.
mpz_class count_matrices(const std::vector<int>& rows, std::vector<int> cols, RowRule rule) {
    mpz_class total = 0;
    std::function<void(std::size_t)> by_row;
    std::function<void(std::size_t, std::size_t, int)> fill_row = [&](std::size_t row, std::size_t col, int left) {
        if (left == 0) {
            by_row(row + 1);
            return;
        }
        if (col == cols.size()) return;
        const int cap = rule == RowRule::ZeroOne ? std::min(1, cols[col]) : std::min(left, cols[col]);
        for (int take = cap; take >= 0; --take) {
            if (rule == RowRule::SingleColumn && take != 0 && take != left) continue;
            cols[col] -= take;
            fill_row(row, col + 1, left - take);
            cols[col] += take;
        }
    };
    by_row = [&](std::size_t row) {
        if (row == rows.size()) {
            if (std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; })) ++total;
            return;
        }
        fill_row(row, 0, rows[row]);
    };
    by_row(0);
    return total;
}

// Partitions mu with lambda / mu a horizontal strip of the given size.
std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int size) {
    std::vector<Partition> out;
    std::vector<int> mu(lambda.length(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == lambda.length()) {
            if (left == 0) {
                std::vector<int> parts;
                for (int x : mu)
                    if (x > 0) parts.push_back(x);
                out.emplace_back(parts);
            }
            return;
        }
        const int lo = lambda.part(i + 1);
        for (int m = lambda.part(i); m >= lo; --m) {
            const int removed = lambda.part(i) - m;
            if (removed > left) break;
            mu[i] = m;
            rec(i + 1, left - removed);
        }
    };
    rec(0, size);
    return out;
}

// Partitions mu with mu / lambda a horizontal strip of the given size.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int size) {
    std::vector<Partition> out;
    const int rows = lambda.length() + 1;
    std::vector<int> mu(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) {
                std::vector<int> parts;
                for (int x : mu)
                    if (x > 0) parts.push_back(x);
                out.emplace_back(parts);
            }
            return;
        }
        const int hi = i == 0 ? lambda.part(0) + left : lambda.part(i - 1);
        for (int m = lambda.part(i); m <= hi; ++m) {
            const int added = m - lambda.part(i);
            if (added > left) break;
            mu[i] = m;
            rec(i + 1, left - added);
        }
    };
    rec(0, size);
    return out;
}

RationalMatrix invert_rational(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular transition matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const mpq_class p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::unique_ptr<TransitionTables> build_tables(int degree) {
    auto t = std::make_unique<TransitionTables>();
    t->degree = degree;
    t->partitions = partitions_of(degree);
    const std::size_t size = t->partitions.size();
    for (std::size_t i = 0; i < size; ++i) t->index[t->partitions[i]] = static_cast<int>(i);

    auto table = [&](RowRule rule) {
        RationalMatrix m(size, std::vector<mpq_class>(size, 0));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                m[i][j] = count_matrices(t->partitions[i].parts(), t->partitions[j].parts(), rule);
        return m;
    };
    RationalMatrix identity(size, std::vector<mpq_class>(size, 0));
    for (std::size_t i = 0; i < size; ++i) identity[i][i] = 1;
    t->to_monomial[Basis::Monomial] = identity;
    t->to_monomial[Basis::Elementary] = table(RowRule::ZeroOne);
    t->to_monomial[Basis::Homogeneous] = table(RowRule::Free);
    t->to_monomial[Basis::PowerSum] = table(RowRule::SingleColumn);

    // s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho
    const RationalMatrix& p = t->to_monomial[Basis::PowerSum];
    RationalMatrix s(size, std::vector<mpq_class>(size, 0));
    for (std::size_t l = 0; l < size; ++l)
        for (std::size_t r = 0; r < size; ++r) {
            mpq_class weight(character(t->partitions[l], t->partitions[r]), t->partitions[r].z());
            if (weight == 0) continue;
            weight.canonicalize();
            for (std::size_t a = 0; a < size; ++a) s[l][a] += weight * p[r][a];
        }
    t->to_monomial[Basis::Schur] = std::move(s);

    for (const auto& [b, m] : t->to_monomial) t->from_monomial[b] = invert_rational(m);
    return t;
}

}  // namespace

mpz_class character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character: size mismatch");
    // Beta-set recursion: removing a rim hook of length k moves one bead from b to b - k.
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.part(i) + (len - 1 - i);
    std::function<mpz_class(std::vector<int>&, int)> rec = [&](std::vector<int>& beads, int idx) -> mpz_class {
        if (idx == rho.length()) return 1;
        const int k = rho.part(idx);
        mpz_class total = 0;
        for (std::size_t i = 0; i < beads.size(); ++i) {
            const int from = beads[i];
            const int to = from - k;
            if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
            int between = 0;
            for (int b : beads)
                if (b > to && b < from) ++between;
            beads[i] = to;
            mpz_class sub = rec(beads, idx + 1);
            beads[i] = from;
            total += between % 2 ? -sub : sub;
        }
        return total;
    };
    return rec(beta, 0);
}

mpz_class kostka(const Partition& lambda, const std::vector<int>& content) {
    if (content.empty()) return lambda.size() == 0 ? 1 : 0;
    std::vector<int> rest(content.begin(), content.end() - 1);
    mpz_class total = 0;
    for (const Partition& mu : remove_horizontal_strip(lambda, content.back())) total += kostka(mu, rest);
    return total;
}

std::map<Partition, mpz_class> schur_expand_eh(const std::vector<int>& e_parts, const std::vector<int>& h_parts) {
    std::map<Partition, mpz_class> current{{Partition{}, 1}};
    auto step = [&](int k, bool vertical) {
        std::map<Partition, mpz_class> next;
        for (const auto& [lambda, c] : current) {
            if (vertical) {
                for (const Partition& mu : add_horizontal_strip(lambda.conjugate(), k)) next[mu.conjugate()] += c;
            } else {
                for (const Partition& mu : add_horizontal_strip(lambda, k)) next[mu] += c;
            }
        }
        current = std::move(next);
    };
    for (int k : e_parts) step(k, true);
    for (int k : h_parts) step(k, false);
    return current;
}

// ------------------------------------------------------------ tables & convert

const TransitionTables& transition_tables(int degree, int max_degree) {
    if (degree < 0 || degree > max_degree || degree > kHardMaxDegree)
        throw std::invalid_argument("unsupported degree " + std::to_string(degree));
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<TransitionTables>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[degree];
    if (!slot) slot = build_tables(degree);
    return *slot;
}

namespace {

std::vector<QtRational> to_monomial_vector(const SymFuncExpr& f, const TransitionTables& tab, int max_degree) {
    const std::size_t size = tab.partitions.size();
    std::vector<QtRational> out(size);
    if (f.basis == Basis::ModifiedMacdonald) {
        const QtMatrix& h = modified_H_matrix(f.degree, max_degree);
        std::vector<QtRational> schur(size);
        for (const auto& [lambda, c] : f.coeffs) {
            const int row = tab.index.at(lambda);
            for (std::size_t j = 0; j < size; ++j)
                if (!h[row][j].is_zero()) schur[j] += c * h[row][j];
        }
        const RationalMatrix& s = tab.to_monomial.at(Basis::Schur);
        for (std::size_t i = 0; i < size; ++i) {
            if (schur[i].is_zero()) continue;
            for (std::size_t j = 0; j < size; ++j)
                if (s[i][j] != 0) out[j] += schur[i] * QtRational::from_rational(s[i][j]);
        }
        return out;
    }
    const RationalMatrix& m = tab.to_monomial.at(f.basis);
    for (const auto& [lambda, c] : f.coeffs) {
        const int row = tab.index.at(lambda);
        for (std::size_t j = 0; j < size; ++j)
            if (m[row][j] != 0) out[j] += c * QtRational::from_rational(m[row][j]);
    }
    return out;
}

std::vector<QtRational> apply(const RationalMatrix& inv, const std::vector<QtRational>& v) {
    // v holds monomial coefficients; inv[a][l] expands m_a in the target basis.
    std::vector<QtRational> out(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        for (std::size_t l = 0; l < v.size(); ++l)
            if (inv[a][l] != 0) out[l] += v[a] * QtRational::from_rational(inv[a][l]);
    }
    return out;
}

}  // namespace

SymFuncExpr convert(const SymFuncExpr& f, Basis target, int max_degree) {
    if (f.degree < 0 || f.degree > max_degree || f.degree > kHardMaxDegree)
        throw std::invalid_argument("unsupported degree " + std::to_string(f.degree));
    if (f.basis == target) return f;
    const TransitionTables& tab = transition_tables(f.degree, max_degree);
    const std::vector<QtRational> mono = to_monomial_vector(f, tab, max_degree);

    std::vector<QtRational> coeffs;
    if (target == Basis::ModifiedMacdonald) {
        const std::vector<QtRational> schur = apply(tab.from_monomial.at(Basis::Schur), mono);
        const QtMatrix& inv = modified_H_matrix_inverse(f.degree, max_degree);
        coeffs.assign(schur.size(), QtRational());
        for (std::size_t a = 0; a < schur.size(); ++a) {
            if (schur[a].is_zero()) continue;
            for (std::size_t l = 0; l < schur.size(); ++l)
                if (!inv[a][l].is_zero()) coeffs[l] += schur[a] * inv[a][l];
        }
    } else {
        coeffs = apply(tab.from_monomial.at(target), mono);
    }
    SymFuncExpr out{f.degree, target, {}};
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.add(tab.partitions[i], coeffs[i]);
    return out;
}

QtRational qt_inner(const SymFuncExpr& f, const SymFuncExpr& g, int max_degree) {
    if (f.degree != g.degree) throw std::invalid_argument("qt_inner: degree mismatch");
    const SymFuncExpr fp = convert(f, Basis::PowerSum, max_degree);
    const SymFuncExpr gp = convert(g, Basis::PowerSum, max_degree);
    QtRational total;
    for (const auto& [rho, c] : fp.coeffs) {
        auto it = gp.coeffs.find(rho);
        if (it == gp.coeffs.end()) continue;
        QtRational weight = QtRational::from_rational(mpq_class(rho.z()));
        for (int part : rho.parts())
            weight *= QtRational(BiPoly(1) - BiPoly::monomial(part, 0), BiPoly(1) - BiPoly::monomial(0, part));
        total += c * it->second * weight;
    }
    return total;
}

QtRational hall_inner(const SymFuncExpr& f, const SymFuncExpr& g, int max_degree) {
    if (f.degree != g.degree) throw std::invalid_argument("hall_inner: degree mismatch");
    const SymFuncExpr fs = convert(f, Basis::Schur, max_degree);
    const SymFuncExpr gs = convert(g, Basis::Schur, max_degree);
    QtRational total;
    for (const auto& [lambda, c] : fs.coeffs) {
        auto it = gs.coeffs.find(lambda);
        if (it != gs.coeffs.end()) total += c * it->second;
    }
    return total;
}

}  // namespace cliquepile::symfunc
