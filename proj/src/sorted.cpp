#include "cliquepile/sorted.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliquepile/sandpile.hpp"

namespace cliquepile {

void check_bound(int n, int max_n) {
    if (n > max_n)
        throw std::invalid_argument("size n = " + std::to_string(n) + " exceeds the configured bound " +
                                    std::to_string(max_n));
}

bool is_sorted(const CliqueIndependentGraph& g, const Configuration& k) {
    if (k.n() != g.n()) throw std::invalid_argument("configuration size does not match graph");
    for (const Component& c : g.components())
        for (int v = c.first; v < c.last; ++v) {
            bool ok = c.sort == SortDirection::NonIncreasing ? k[v] >= k[v + 1] : k[v] <= k[v + 1];
            if (!ok) return false;
        }
    return true;
}

namespace {

// Offset nu_s - j for the j-th largest vertex of an independent block.
int lift_offset(const Component& c, int v) { return v - c.first; }

}  // namespace

Lift lift(const CliqueIndependentGraph& g, const Configuration& k) {
    if (!is_sorted(g, k)) throw std::invalid_argument("lift needs a sorted configuration, got " + k.to_string());
    Configuration lifted = k;
    for (const Component& c : g.components())
        if (c.kind == ComponentKind::Independent)
            for (int v = c.first; v <= c.last; ++v) lifted[v] += lift_offset(c, v);
    return {g.all_clique(), lifted};
}

Configuration unlift(const CliqueIndependentGraph& g, const Configuration& lifted) {
    if (lifted.n() != g.n()) throw std::invalid_argument("configuration size does not match graph");
    Configuration k = lifted;
    for (const Component& c : g.components())
        if (c.kind == ComponentKind::Independent)
            for (int v = c.first; v <= c.last; ++v) k[v] -= lift_offset(c, v);
    return k;
}

std::vector<int> u_word(const std::vector<int>& sigma, const Configuration& lifted) {
    const int n = static_cast<int>(sigma.size());
    if (lifted.n() != n) throw std::invalid_argument("u_word: size mismatch");
    std::vector<int> u(n);
    for (int j = 1; j <= n; ++j) u[j - 1] = j + lifted.at(sigma[j - 1]) - n;
    return u;
}

std::vector<int> w_word(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> word(n + 1, 0);
    std::copy(sigma.begin(), sigma.end(), word.begin() + 1);
    // run_start[p]: index in word where the run containing p begins
    std::vector<int> run_start(n + 1, 0);
    for (int p = 1; p <= n; ++p) run_start[p] = word[p] > word[p - 1] ? p : run_start[p - 1];

    std::vector<int> w(n, 0);
    for (int p = 1; p <= n; ++p) {
        const int value = word[p];
        const int start = run_start[p];
        int count = 0;
        for (int r = start; r <= n && run_start[r] == start; ++r)
            if (word[r] > value) ++count;
        if (start > 0) {
            const int prev_start = run_start[start - 1];
            for (int r = prev_start; r < start; ++r)
                if (word[r] < value) ++count;
        }
        w[p - 1] = count;
    }
    return w;
}

int SortedWitness::u_of_vertex(int i) const {
    auto it = std::find(sigma.begin(), sigma.end(), i);
    if (it == sigma.end()) throw std::out_of_range("vertex not in sigma");
    return u[it - sigma.begin()];
}

int SortedWitness::w_of_vertex(int i) const {
    auto it = std::find(sigma.begin(), sigma.end(), i);
    if (it == sigma.end()) throw std::out_of_range("vertex not in sigma");
    return w[it - sigma.begin()];
}

bool SortedWitness::satisfies_bounds() const {
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] < 0 || u[j] >= w[j]) return false;
    return true;
}

namespace {

void require_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("sigma has the wrong length");
    std::vector<bool> seen(n + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("sigma is not a permutation of [n]");
        seen[v] = true;
    }
}

}  // namespace

SortedWitness make_witness(const CliqueIndependentGraph& g, const Configuration& k, const std::vector<int>& sigma) {
    require_permutation(sigma, g.n());
    Lift l = lift(g, k);
    return {sigma, u_word(sigma, l.config), w_word(sigma)};
}

bool check_characterization(const CliqueIndependentGraph& g, const Configuration& k, const std::vector<int>& sigma) {
    return make_witness(g, k, sigma).satisfies_bounds();
}

void for_each_sorted_stable(const CliqueIndependentGraph& g, const std::function<void(const Configuration&)>& visit) {
    // Recursing over vertices n down to 1 with values chosen in increasing order
    // yields configurations in lexicographic display order.
    const int n = g.n();
    Configuration k(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == 0) {
            visit(k);
            return;
        }
        const Component& c = g.component(g.component_of(v));
        int lo = 0;
        int hi = g.degree(v) - 1;
        if (v < c.last) {
            if (c.sort == SortDirection::NonIncreasing)
                lo = k[v + 1];  // k[v] >= k[v+1]
            else
                hi = std::min(hi, k[v + 1]);  // k[v] <= k[v+1]
        }
        for (int x = lo; x <= hi; ++x) {
            k[v] = x;
            rec(v - 1);
        }
        k[v] = 0;
    };
    rec(n);
}

std::vector<Configuration> enumerate_sortrec(const Composition& mu, const Composition& nu, int max_n) {
    CliqueIndependentGraph g(mu, nu);
    check_bound(g.n(), max_n);
    std::vector<Configuration> out;
    for_each_sorted_stable(g, [&](const Configuration& k) {
        auto res = run_toppling(g, k);
        if (res && !check_characterization(g, k, res->sigma))
            throw std::logic_error("toppling word of recurrent " + k.to_string() + " fails the u < w bounds");
        if (res) out.push_back(k);
    });
    return out;
}

QtPolynomial sortrec_polynomial(const Composition& mu, const Composition& nu, int max_n) {
    CliqueIndependentGraph g(mu, nu);
    QtPolynomial poly;
    for (const Configuration& k : enumerate_sortrec(mu, nu, max_n)) {
        auto res = run_toppling(g, k);
        poly.add_term(static_cast<int>(level(g, k)), static_cast<int>(delay(*res)), 1);
    }
    return poly;
}

}  // namespace cliquepile
