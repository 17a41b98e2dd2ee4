#pragma once

#include <optional>
#include <string>

#include "cliquepile/configuration.hpp"
#include "cliquepile/graph.hpp"
#include "cliquepile/parking.hpp"
#include "cliquepile/qt_polynomial.hpp"

namespace cliquepile {

/// Sends a sorted recurrent configuration to the parking function with label i
/// in column n - lifted(i). The image is checked to be a parking function whose
/// reading word lies in the shuffle set; a failure throws std::logic_error.
/// Throws std::invalid_argument on unsorted or non-recurrent input.
LabelledDyckPath phi(const CliqueIndependentGraph& g, const Configuration& k);

/// Reads lifted(i) = n - column(i) off the path and undoes the lift. The result
/// is checked to be sorted recurrent with phi(result) == d (std::logic_error
/// otherwise). Throws std::invalid_argument when the reading word is not in the
/// shuffle set of (mu, nu).
Configuration phi_inverse(const Composition& mu, const Composition& nu, const LabelledDyckPath& d);

struct VerificationReport {
    Composition mu;
    Composition nu;
    int n = 0;
    std::size_t sortrec_count = 0;
    std::size_t pf_count = 0;
    QtPolynomial sandpile_side;
    QtPolynomial parking_side;
    bool ok = true;
    /// First failing configuration (display word) and the failed check.
    std::optional<std::string> counterexample;

    nlohmann::ordered_json to_json() const;
};

/// Element-by-element check over SortRec(mu; nu): the image lies in PF(mu; nu),
/// area matches level, pmaj matches delay, the parking word equals the toppling
/// word, and phi is a bijection onto PF(mu; nu).
VerificationReport verify_theorem(const Composition& mu, const Composition& nu, int max_n = 8);

}  // namespace cliquepile
