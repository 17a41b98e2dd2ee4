#include "cliquepile/symfunc/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cliquepile::symfunc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

long long Partition::n_statistic() const {
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<long long>(i) * parts_[i];
    return total;
}

mpz_class Partition::z() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    mpz_class out = 1;
    for (auto [part, m] : mult) {
        for (int k = 0; k < m; ++k) out *= part;
        for (int k = 2; k <= m; ++k) out *= k;
    }
    return out;
}

int Partition::arm(int r, int c) const { return part(r) - c - 1; }

int Partition::leg(int r, int c) const {
    int below = 0;
    for (int i = r + 1; i < length() && parts_[i] > c; ++i) ++below;
    return below;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            prefix.push_back(p);
            rec(remaining - p, p);
            prefix.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
    int sa = 0;
    int sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace cliquepile::symfunc
