#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquepile/composition.hpp"
#include "cliquepile/qt_polynomial.hpp"

namespace cliquepile {

/// A parking function, stored as label -> column (columns 1-indexed from the
/// left). Rows, the lattice path and the area word are derived from it: row r
/// carries the r-th label when columns are read left to right, each column
/// bottom to top in increasing label order.
class LabelledDyckPath {
public:
    /// column_of[i-1] is the column of label i. Throws unless every column is
    /// in [1, n] and the path stays weakly above the diagonal.
    explicit LabelledDyckPath(std::vector<int> column_of);

    /// Parses "col(1),col(2),...,col(n)".
    static LabelledDyckPath parse(std::string_view text);
    std::string to_string() const;

    int n() const { return static_cast<int>(column_of_.size()); }
    int column_of(int label) const { return column_of_.at(label - 1); }
    const std::vector<int>& columns() const { return column_of_; }
    /// Labels of one column, increasing (bottom to top).
    std::vector<int> column_labels(int column) const;
    /// Row (1-based, from the bottom) holding the label.
    int row_of(int label) const;

    friend bool operator==(const LabelledDyckPath&, const LabelledDyckPath&) = default;
    friend auto operator<=>(const LabelledDyckPath& a, const LabelledDyckPath& b) {
        return a.column_of_ <=> b.column_of_;
    }

private:
    std::vector<int> column_of_;
};

/// True iff #{i : column_of[i] <= c} >= c for all c and all columns lie in [1, n].
bool is_parking_function(const std::vector<int>& column_of);

struct AreaData {
    std::vector<int> area_word;  // a_1..a_n, bottom row first
    long long area = 0;
};

AreaData area_data(const LabelledDyckPath& d);
/// Labels read bottom to top.
std::vector<int> reading_word(const LabelledDyckPath& d);
/// Greedy car-parking word p_1..p_n.
std::vector<int> parking_word(const LabelledDyckPath& d);
/// maj of p_n ... p_1.
long long pmaj(const LabelledDyckPath& d);

/// Membership of a permutation in the shuffle of the increasing clique blocks
/// and decreasing independent blocks: each block's subword must be increasing
/// (clique) or decreasing (independent).
bool in_shuffle(const std::vector<int>& word, const Composition& mu, const Composition& nu);

/// Calls visit on every parking function of size n, in lexicographic order of column_of.
void for_each_parking_function(int n, const std::function<void(const LabelledDyckPath&)>& visit);

std::vector<LabelledDyckPath> enumerate_pf(const Composition& mu, const Composition& nu, int max_n = 8);
/// Sum over PF(mu; nu) of q^area t^pmaj.
QtPolynomial pf_polynomial(const Composition& mu, const Composition& nu, int max_n = 8);

}  // namespace cliquepile
