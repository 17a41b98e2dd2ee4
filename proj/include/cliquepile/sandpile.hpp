#pragma once

#include <vector>

#include "cliquepile/configuration.hpp"
#include "cliquepile/graph.hpp"

namespace cliquepile {

/// Fires vertex v once. Any vertex may fire, stable or not; firing the sink
/// adds one grain everywhere.
Configuration topple(const CliqueIndependentGraph& g, const Configuration& k, int v);

/// Stable means kappa(v) < deg(v) for every non-sink vertex.
bool is_stable(const CliqueIndependentGraph& g, const Configuration& k);
/// Vertices with kappa(v) >= deg(v), largest first.
std::vector<int> unstable_vertices(const CliqueIndependentGraph& g, const Configuration& k);
bool is_non_negative(const Configuration& k);

/// Total grains minus the number of edges not touching the sink.
long long level(const CliqueIndependentGraph& g, const Configuration& k);

/// Exhaustive subset criterion: after firing the sink, no proper subset A of
/// [n] may fire (each vertex once) into a stable configuration. Exact for
/// n <= 20. Throws on unstable or negative input.
bool is_recurrent_bruteforce(const CliqueIndependentGraph& g, const Configuration& k);

/// Throws std::invalid_argument unless k is a non-negative stable configuration of g.
void require_stable_non_negative(const CliqueIndependentGraph& g, const Configuration& k);

}  // namespace cliquepile
