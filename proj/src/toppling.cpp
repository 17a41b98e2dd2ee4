#include "cliquepile/toppling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cliquepile/sandpile.hpp"

namespace cliquepile {

int TopplingResult::position_of(int v) const {
    auto it = std::find(sigma.begin(), sigma.end(), v);
    if (it == sigma.end()) throw std::out_of_range("vertex not in toppling word");
    return static_cast<int>(it - sigma.begin()) + 1;
}

std::optional<TopplingResult> run_toppling(const CliqueIndependentGraph& g, const Configuration& k) {
    require_stable_non_negative(g, k);
    const int n = g.n();
    Configuration current = topple(g, k, 0);
    std::vector<bool> toppled(n, false);
    TopplingResult res;
    res.rounds.assign(n, 0);

    // A vertex that has already fired cannot become unstable again before every
    // other vertex fires, so skipping toppled vertices does not change the output.
    for (int sweep = 0; static_cast<int>(res.sigma.size()) < n; ++sweep) {
        bool progress = false;
        for (int v = n; v >= 1; --v) {
            if (toppled[v - 1] || current[v] < g.degree(v)) continue;
            current = topple(g, current, v);
            toppled[v - 1] = true;
            res.sigma.push_back(v);
            res.rounds[v - 1] = sweep;
            progress = true;
        }
        if (!progress) return std::nullopt;
    }
    return res;
}

long long delay(const TopplingResult& res) {
    return std::accumulate(res.rounds.begin(), res.rounds.end(), 0LL);
}

MajStats maj_stats(const std::vector<int>& word) {
    MajStats out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) {
            out.descents.push_back(static_cast<int>(i) + 1);
            out.maj += static_cast<long long>(i) + 1;
        }
    return out;
}

}  // namespace cliquepile
