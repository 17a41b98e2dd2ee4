#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cliquepile {

/// A finite tuple of positive integers. The empty composition is allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }

    /// Parses "4,3,1"; "-" (or an empty string) denotes the empty composition.
    static Composition parse(std::string_view text);
    /// Inverse of parse: "-" for the empty composition.
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All compositions of k, in lexicographic order of their parts.
std::vector<Composition> compositions_of(int k);

/// All pairs (mu, nu) with |mu| + |nu| = n.
std::vector<std::pair<Composition, Composition>> composition_pairs(int n);

}  // namespace cliquepile
