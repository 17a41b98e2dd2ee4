#include "cliquepile/composition.hpp"

#include <charconv>
#include <stdexcept>

namespace cliquepile {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("composition parts must be positive, got " + std::to_string(p));
        size_ += p;
    }
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) {
    if (text.empty() || text == "-") return Composition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string Composition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int k) {
    if (k < 0) throw std::invalid_argument("negative composition size");
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(k, prefix, out);
    return out;
}

std::vector<std::pair<Composition, Composition>> composition_pairs(int n) {
    std::vector<std::pair<Composition, Composition>> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& mu : compositions_of(k))
            for (const auto& nu : compositions_of(n - k)) out.emplace_back(mu, nu);
    return out;
}

}  // namespace cliquepile
