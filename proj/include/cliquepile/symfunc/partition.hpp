#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace cliquepile::symfunc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts arbitrary positive parts into a partition.
    static Partition sorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    /// Part i (0-based), 0 beyond the length.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// n(lambda) = sum (i-1) lambda_i.
    long long n_statistic() const;
    /// z_lambda = prod_i i^{m_i} m_i!.
    mpz_class z() const;
    /// Arm and leg of the cell in row r, column c (both 0-based).
    int arm(int r, int c) const;
    int leg(int r, int c) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
/// This order is a linear extension of dominance (larger first).
std::vector<Partition> partitions_of(int n);

/// True iff a dominates b (prefix sums of a are at least those of b). Same size required.
bool dominates(const Partition& a, const Partition& b);

}  // namespace cliquepile::symfunc
