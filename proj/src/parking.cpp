#include "cliquepile/parking.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "cliquepile/graph.hpp"
#include "cliquepile/sorted.hpp"
#include "cliquepile/toppling.hpp"

namespace cliquepile {

bool is_parking_function(const std::vector<int>& column_of) {
    const int n = static_cast<int>(column_of.size());
    std::vector<int> per_column(n + 1, 0);
    for (int c : column_of) {
        if (c < 1 || c > n) return false;
        ++per_column[c];
    }
    int cumulative = 0;
    for (int c = 1; c <= n; ++c) {
        cumulative += per_column[c];
        if (cumulative < c) return false;
    }
    return true;
}

LabelledDyckPath::LabelledDyckPath(std::vector<int> column_of) : column_of_(std::move(column_of)) {
    if (column_of_.empty()) throw std::invalid_argument("parking function of size 0");
    if (!is_parking_function(column_of_)) throw std::invalid_argument("not a parking function: " + to_string());
}

LabelledDyckPath LabelledDyckPath::parse(std::string_view text) {
    std::vector<int> cols;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("malformed parking function: '" + std::string(text) + "'");
        cols.push_back(value);
        pos = comma + 1;
    }
    return LabelledDyckPath(std::move(cols));
}

std::string LabelledDyckPath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < column_of_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(column_of_[i]);
    }
    return out;
}

std::vector<int> LabelledDyckPath::column_labels(int column) const {
    std::vector<int> labels;
    for (int i = 1; i <= n(); ++i)
        if (column_of_[i - 1] == column) labels.push_back(i);
    return labels;
}

int LabelledDyckPath::row_of(int label) const {
    const int col = column_of(label);
    int row = 1;
    for (int i = 1; i <= n(); ++i) {
        const int c = column_of_[i - 1];
        if (c < col || (c == col && i < label)) ++row;
    }
    return row;
}

std::vector<int> reading_word(const LabelledDyckPath& d) {
    std::vector<int> word;
    word.reserve(d.n());
    for (int c = 1; c <= d.n(); ++c)
        for (int label : d.column_labels(c)) word.push_back(label);
    return word;
}

AreaData area_data(const LabelledDyckPath& d) {
    // Row r sits in column c_r; the path is at x = c_r - 1 there, so the number
    // of full cells between it and the diagonal is (r - 1) - (c_r - 1).
    AreaData out;
    int row = 0;
    for (int c = 1; c <= d.n(); ++c)
        for (std::size_t k = 0; k < d.column_labels(c).size(); ++k) {
            ++row;
            out.area_word.push_back(row - c);
            out.area += row - c;
        }
    return out;
}

std::vector<int> parking_word(const LabelledDyckPath& d) {
    const int n = d.n();
    std::vector<int> candidates;
    std::vector<int> word;
    word.reserve(n);
    for (int i = 1; i <= n; ++i) {
        if (i > 1) candidates.erase(std::find(candidates.begin(), candidates.end(), word.back()));
        for (int label : d.column_labels(i)) candidates.push_back(label);
        // Dyck condition keeps the candidate set non-empty.
        int best = -1;
        int overall = -1;
        for (int x : candidates) {
            overall = std::max(overall, x);
            if (i > 1 && x <= word.back()) best = std::max(best, x);
        }
        word.push_back(best >= 0 ? best : overall);
    }
    return word;
}

long long pmaj(const LabelledDyckPath& d) {
    std::vector<int> p = parking_word(d);
    std::reverse(p.begin(), p.end());
    return maj_stats(p).maj;
}

bool in_shuffle(const std::vector<int>& word, const Composition& mu, const Composition& nu) {
    const int n = mu.size() + nu.size();
    if (static_cast<int>(word.size()) != n) return false;
    if (n == 0) return true;
    CliqueIndependentGraph g(mu, nu);
    std::vector<int> last(g.component_count(), -1);
    for (int x : word) {
        if (x < 1 || x > n) return false;
        const int c = g.component_of(x);
        if (last[c] >= 0) {
            const bool increasing = g.component(c).kind == ComponentKind::Clique;
            if (increasing ? x <= last[c] : x >= last[c]) return false;
        }
        last[c] = x;
    }
    return true;
}

void for_each_parking_function(int n, const std::function<void(const LabelledDyckPath&)>& visit) {
    if (n < 1) throw std::invalid_argument("parking functions need n >= 1");
    // at_least[c]: number of labels assigned to columns >= c; a parking function
    // needs at_least[c] <= n + 1 - c for every c.
    std::vector<int> cols(n, 0);
    std::vector<int> at_least(n + 2, 0);
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            visit(LabelledDyckPath(cols));
            return;
        }
        for (int c = 1; c <= n; ++c) {
            bool ok = true;
            for (int k = 1; k <= c; ++k)
                if (at_least[k] + 1 > n + 1 - k) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int k = 1; k <= c; ++k) ++at_least[k];
            cols[label - 1] = c;
            rec(label + 1);
            for (int k = 1; k <= c; ++k) --at_least[k];
        }
    };
    rec(1);
}

std::vector<LabelledDyckPath> enumerate_pf(const Composition& mu, const Composition& nu, int max_n) {
    const int n = mu.size() + nu.size();
    check_bound(n, max_n);
    std::vector<LabelledDyckPath> out;
    for_each_parking_function(n, [&](const LabelledDyckPath& d) {
        if (in_shuffle(reading_word(d), mu, nu)) out.push_back(d);
    });
    return out;
}

QtPolynomial pf_polynomial(const Composition& mu, const Composition& nu, int max_n) {
    QtPolynomial poly;
    for (const auto& d : enumerate_pf(mu, nu, max_n))
        poly.add_term(static_cast<int>(area_data(d).area), static_cast<int>(pmaj(d)), 1);
    return poly;
}

}  // namespace cliquepile
