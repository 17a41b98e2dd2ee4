#pragma once

#include <functional>
#include <vector>

#include "cliquepile/configuration.hpp"
#include "cliquepile/graph.hpp"
#include "cliquepile/qt_polynomial.hpp"
#include "cliquepile/toppling.hpp"

namespace cliquepile {

/// Weakly decreasing along each clique block, weakly increasing along each
/// independent block (more precisely: monotone in each block's sort direction).
bool is_sorted(const CliqueIndependentGraph& g, const Configuration& k);

struct Lift {
    CliqueIndependentGraph graph;  // every block made a clique, layout kept
    Configuration config;
};

/// Adds nu_s - j to the j-th largest vertex of each independent block; clique
/// values are copied. Throws if k is not sorted.
Lift lift(const CliqueIndependentGraph& g, const Configuration& k);
/// Inverse of lift: subtracts the same offsets. No sortedness requirement.
Configuration unlift(const CliqueIndependentGraph& g, const Configuration& lifted);

/// Positional u-word: u_j = j + lifted(sigma_j) - n.
std::vector<int> u_word(const std::vector<int>& sigma, const Configuration& lifted);

/// Positional w-word. With 0 prepended to sigma and runs taken as maximal
/// decreasing factors, w_j counts the run-mates of sigma_j that are larger
/// plus the entries of the previous run that are smaller.
std::vector<int> w_word(const std::vector<int>& sigma);

/// u and w stored by topple position j (1-based in the accessors).
struct SortedWitness {
    std::vector<int> sigma;
    std::vector<int> u;
    std::vector<int> w;

    int u_at(int j) const { return u[j - 1]; }
    int w_at(int j) const { return w[j - 1]; }
    /// Vertex-indexed views: the entry for the position where vertex i toppled.
    int u_of_vertex(int i) const;
    int w_of_vertex(int i) const;
    /// 0 <= u_j < w_j for every position.
    bool satisfies_bounds() const;
};

SortedWitness make_witness(const CliqueIndependentGraph& g, const Configuration& k, const std::vector<int>& sigma);

/// True iff 0 <= u_j < w_j for all j, with u built from lift(k) and sigma.
bool check_characterization(const CliqueIndependentGraph& g, const Configuration& k, const std::vector<int>& sigma);

/// Every sorted stable configuration of g (not necessarily recurrent), in
/// lexicographic display order.
void for_each_sorted_stable(const CliqueIndependentGraph& g, const std::function<void(const Configuration&)>& visit);

inline constexpr int kDefaultMaxN = 8;

/// Sorted recurrent configurations, each once, in lexicographic display order.
/// Recurrence is decided by the toppling algorithm and cross-checked against
/// check_characterization; a disagreement throws std::logic_error.
std::vector<Configuration> enumerate_sortrec(const Composition& mu, const Composition& nu, int max_n = kDefaultMaxN);

/// Sum over sorted recurrent configurations of q^level t^delay.
QtPolynomial sortrec_polynomial(const Composition& mu, const Composition& nu, int max_n = kDefaultMaxN);

void check_bound(int n, int max_n);

}  // namespace cliquepile
