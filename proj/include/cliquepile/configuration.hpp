#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cliquepile {

/// Grain counts on the non-sink vertices 1..n. The sink value is not stored.
///
/// Values are held in ascending vertex order; the display word lists them from
/// vertex n down to vertex 1.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n, int fill = 0) : grains_(n, fill) {}

    /// From values in ascending vertex order: values[0] is vertex 1.
    static Configuration from_ascending(std::vector<int> values);
    /// From the display word kappa(n), ..., kappa(1).
    static Configuration from_display(const std::vector<int>& word);
    /// Parses a comma-separated display word.
    static Configuration parse(std::string_view text);

    int n() const { return static_cast<int>(grains_.size()); }
    int operator[](int v) const { return grains_[v - 1]; }
    int& operator[](int v) { return grains_[v - 1]; }
    int at(int v) const;

    const std::vector<int>& ascending() const { return grains_; }
    std::vector<int> display_word() const;
    /// Comma-separated display word.
    std::string to_string() const;

    long long total() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<int> grains_;
};

}  // namespace cliquepile
