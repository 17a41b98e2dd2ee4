#pragma once

#include <optional>
#include <vector>

#include "cliquepile/configuration.hpp"
#include "cliquepile/graph.hpp"

namespace cliquepile {

/// Output of the sweep toppling algorithm.
struct TopplingResult {
    /// Non-sink vertices in the order they toppled.
    std::vector<int> sigma;
    /// rounds[v-1]: number of completed sweeps before the one in which v toppled.
    std::vector<int> rounds;

    int position_of(int v) const;  // 1-based position of v in sigma
    friend bool operator==(const TopplingResult&, const TopplingResult&) = default;
};

/// Fires the sink, then sweeps vertices n down to 1 firing every unstable
/// untoppled vertex, until each vertex has fired once. Returns std::nullopt when
/// a whole sweep fires nothing while some vertex is still untoppled, i.e. the
/// input is not recurrent. Throws on unstable or negative input.
std::optional<TopplingResult> run_toppling(const CliqueIndependentGraph& g, const Configuration& k);

/// Sum of the per-vertex sweep indices.
long long delay(const TopplingResult& res);

struct MajStats {
    std::vector<int> descents;  // 1-based positions i with word[i] > word[i+1]
    long long maj = 0;
};

MajStats maj_stats(const std::vector<int>& word);

}  // namespace cliquepile
