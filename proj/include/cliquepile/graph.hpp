#pragma once

#include <vector>

#include "cliquepile/composition.hpp"

namespace cliquepile {

enum class ComponentKind { Clique, Independent };

/// Direction in which a sorted configuration is monotone on a component.
enum class SortDirection { NonIncreasing, NonDecreasing };

/// A block of consecutive vertices [first, last] forming one component.
struct Component {
    int first;
    int last;
    ComponentKind kind;
    SortDirection sort;

    int size() const { return last - first + 1; }
    bool contains(int v) const { return first <= v && v <= last; }
};

/// The clique-independent graph on {0} ∪ [n] with universal sink 0.
///
/// Clique blocks K_{mu_1}, K_{mu_2}, ... occupy the top of [n] going down from n;
/// independent blocks I_{nu_1}, I_{nu_2}, ... occupy the bottom going up from 1.
/// Two distinct non-sink vertices are adjacent unless they share an independent
/// block. Adjacency is answered from component ids; no edge list is stored.
class CliqueIndependentGraph {
public:
    CliqueIndependentGraph(Composition mu, Composition nu);

    const Composition& mu() const { return mu_; }
    const Composition& nu() const { return nu_; }
    int n() const { return n_; }

    /// Component ids: clique blocks 0..l(mu)-1, then independent blocks.
    int component_count() const { return static_cast<int>(components_.size()); }
    const Component& component(int id) const { return components_.at(id); }
    const std::vector<Component>& components() const { return components_; }
    int component_of(int v) const;

    int degree(int v) const;
    bool adjacent(int u, int v) const;
    long long non_sink_edge_count() const;

    /// The graph with every independent block turned into a clique, keeping the
    /// block layout and the sort direction of each block.
    CliqueIndependentGraph all_clique() const;

private:
    CliqueIndependentGraph() = default;
    void check_vertex(int v) const;

    Composition mu_;
    Composition nu_;
    int n_ = 0;
    std::vector<Component> components_;
    std::vector<int> component_of_;  // index v-1
};

}  // namespace cliquepile
