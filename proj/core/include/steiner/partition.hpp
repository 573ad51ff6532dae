#pragma once

#include <compare>
#include <string>
#include <vector>

#include "steiner/errors.hpp"

namespace steiner::chow {

/// Weakly decreasing positive parts; trailing zeros are trimmed so equal
/// partitions compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int size() const; // number of boxes
    bool empty() const { return parts_.empty(); }

    bool fits_in_box(int rows, int cols) const;

    /// mu/this is a horizontal strip: this ⊆ mu and mu_{i+1} <= this_i.
    bool horizontal_strip_to(const Partition& mu) const;

    std::string str() const; // "(2,1)"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions inside a rows x cols box, the empty one included,
/// in increasing lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);

} // namespace steiner::chow
