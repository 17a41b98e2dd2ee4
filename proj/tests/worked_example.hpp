#pragma once
// The (4,3),(3,2) configuration used throughout the tests.

#include <vector>

#include "cliquepile/composition.hpp"
#include "cliquepile/configuration.hpp"
#include "cliquepile/graph.hpp"

namespace worked {

inline cliquepile::CliqueIndependentGraph graph() {
    return cliquepile::CliqueIndependentGraph(cliquepile::Composition{4, 3}, cliquepile::Composition{3, 2});
}
inline cliquepile::Configuration kappa() {
    return cliquepile::Configuration::from_display({3, 10, 11, 11, 8, 10, 11, 10, 4, 9, 7, 3});
}
inline const std::vector<int> sigma{10, 9, 7, 6, 5, 3, 2, 11, 8, 4, 1, 12};
inline const std::vector<int> rounds{1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 2};
inline const std::vector<int> lifted_ascending{3, 8, 11, 4, 11, 11, 10, 8, 11, 11, 10, 3};
inline const std::vector<int> u{0, 1, 1, 3, 4, 5, 3, 6, 5, 2, 2, 3};
inline const std::vector<int> w{1, 2, 3, 4, 5, 6, 7, 7, 6, 4, 3, 4};
inline const std::vector<int> columns{9, 4, 1, 8, 1, 1, 2, 4, 1, 1, 2, 9};
inline const std::vector<int> area_word{0, 1, 2, 3, 4, 4, 5, 4, 5, 2, 2, 3};
inline const std::vector<int> reading{3, 5, 6, 9, 10, 7, 11, 2, 8, 4, 1, 12};

}  // namespace worked
