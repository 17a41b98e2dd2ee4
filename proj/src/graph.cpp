#include "cliquepile/graph.hpp"

#include <stdexcept>
#include <string>

namespace cliquepile {

CliqueIndependentGraph::CliqueIndependentGraph(Composition mu, Composition nu)
    : mu_(std::move(mu)), nu_(std::move(nu)), n_(mu_.size() + nu_.size()) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one non-sink vertex");
    int top = n_;
    for (int part : mu_.parts()) {
        components_.push_back({top - part + 1, top, ComponentKind::Clique, SortDirection::NonIncreasing});
        top -= part;
    }
    int bottom = 1;
    for (int part : nu_.parts()) {
        components_.push_back({bottom, bottom + part - 1, ComponentKind::Independent, SortDirection::NonDecreasing});
        bottom += part;
    }
    component_of_.assign(n_, -1);
    for (int id = 0; id < component_count(); ++id)
        for (int v = components_[id].first; v <= components_[id].last; ++v) component_of_[v - 1] = id;
}

void CliqueIndependentGraph::check_vertex(int v) const {
    if (v < 0 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside {0..." + std::to_string(n_) + "}");
}

int CliqueIndependentGraph::component_of(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " is not a non-sink vertex");
    return component_of_[v - 1];
}

int CliqueIndependentGraph::degree(int v) const {
    check_vertex(v);
    if (v == 0) return n_;
    const Component& c = components_[component_of_[v - 1]];
    return c.kind == ComponentKind::Clique ? n_ : n_ - c.size() + 1;
}

bool CliqueIndependentGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (u == 0 || v == 0) return true;
    int cu = component_of_[u - 1];
    if (cu != component_of_[v - 1]) return true;
    return components_[cu].kind == ComponentKind::Clique;
}

long long CliqueIndependentGraph::non_sink_edge_count() const {
    auto choose2 = [](long long k) { return k * (k - 1) / 2; };
    long long edges = choose2(n_);
    for (const Component& c : components_)
        if (c.kind == ComponentKind::Independent) edges -= choose2(c.size());
    return edges;
}

CliqueIndependentGraph CliqueIndependentGraph::all_clique() const {
    CliqueIndependentGraph g = *this;
    std::vector<int> joined = mu_.parts();
    joined.insert(joined.end(), nu_.parts().begin(), nu_.parts().end());
    g.mu_ = Composition(std::move(joined));
    g.nu_ = Composition{};
    for (Component& c : g.components_) c.kind = ComponentKind::Clique;
    return g;
}

}  // namespace cliquepile
