#include "cliquepile/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cliquepile {

Configuration Configuration::from_ascending(std::vector<int> values) {
    Configuration k;
    k.grains_ = std::move(values);
    return k;
}

Configuration Configuration::from_display(const std::vector<int>& word) {
    return from_ascending(std::vector<int>(word.rbegin(), word.rend()));
}

Configuration Configuration::parse(std::string_view text) {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("malformed configuration: '" + std::string(text) + "'");
        word.push_back(value);
        pos = comma + 1;
    }
    return from_display(word);
}

int Configuration::at(int v) const {
    if (v < 1 || v > n()) throw std::out_of_range("vertex " + std::to_string(v) + " outside configuration");
    return grains_[v - 1];
}

std::vector<int> Configuration::display_word() const { return {grains_.rbegin(), grains_.rend()}; }

std::string Configuration::to_string() const {
    std::string out;
    for (int v = n(); v >= 1; --v) {
        out += std::to_string(grains_[v - 1]);
        if (v > 1) out += ',';
    }
    return out;
}

long long Configuration::total() const { return std::accumulate(grains_.begin(), grains_.end(), 0LL); }

}  // namespace cliquepile
