#include "cliquepile/sandpile.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquepile {

namespace {

void check_size(const CliqueIndependentGraph& g, const Configuration& k) {
    if (k.n() != g.n())
        throw std::invalid_argument("configuration has " + std::to_string(k.n()) + " values, graph has " +
                                    std::to_string(g.n()) + " non-sink vertices");
}

}  // namespace

Configuration topple(const CliqueIndependentGraph& g, const Configuration& k, int v) {
    check_size(g, k);
    if (v < 0 || v > g.n()) throw std::out_of_range("cannot topple vertex " + std::to_string(v));
    Configuration out = k;
    if (v == 0) {
        for (int w = 1; w <= g.n(); ++w) ++out[w];
        return out;
    }
    out[v] -= g.degree(v);
    for (int w = 1; w <= g.n(); ++w)
        if (g.adjacent(v, w)) ++out[w];
    return out;
}

bool is_stable(const CliqueIndependentGraph& g, const Configuration& k) {
    check_size(g, k);
    for (int v = 1; v <= g.n(); ++v)
        if (k[v] >= g.degree(v)) return false;
    return true;
}

std::vector<int> unstable_vertices(const CliqueIndependentGraph& g, const Configuration& k) {
    check_size(g, k);
    std::vector<int> out;
    for (int v = g.n(); v >= 1; --v)
        if (k[v] >= g.degree(v)) out.push_back(v);
    return out;
}

bool is_non_negative(const Configuration& k) {
    for (int x : k.ascending())
        if (x < 0) return false;
    return true;
}

long long level(const CliqueIndependentGraph& g, const Configuration& k) {
    check_size(g, k);
    return k.total() - g.non_sink_edge_count();
}

void require_stable_non_negative(const CliqueIndependentGraph& g, const Configuration& k) {
    check_size(g, k);
    if (!is_non_negative(k)) throw std::invalid_argument("configuration " + k.to_string() + " has a negative value");
    if (!is_stable(g, k)) throw std::invalid_argument("configuration " + k.to_string() + " is not stable");
}

bool is_recurrent_bruteforce(const CliqueIndependentGraph& g, const Configuration& k) {
    require_stable_non_negative(g, k);
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("subset search limited to n <= 20");
    const Configuration fired = topple(g, k, 0);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<int> in_component(g.component_count());
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        std::fill(in_component.begin(), in_component.end(), 0);
        int size = 0;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) {
                ++size;
                ++in_component[g.component_of(v)];
            }
        bool stable = true;
        for (int v = 1; v <= n && stable; ++v) {
            const bool in_a = mask >> (v - 1) & 1;
            const int c = g.component_of(v);
            int fired_neighbours = size - (in_a ? 1 : 0);
            if (g.component(c).kind == ComponentKind::Independent)
                fired_neighbours -= in_component[c] - (in_a ? 1 : 0);
            const int value = fired[v] + fired_neighbours - (in_a ? g.degree(v) : 0);
            stable = value < g.degree(v);
        }
        if (stable) return false;
    }
    return true;
}

}  // namespace cliquepile
