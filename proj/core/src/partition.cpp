#include "steiner/partition.hpp"

#include <algorithm>
#include <numeric>

namespace steiner::chow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw Error("partition with negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits_in_box(int rows, int cols) const {
    if (static_cast<int>(parts_.size()) > rows)
        return false;
    return parts_.empty() || parts_.front() <= cols;
}

bool Partition::horizontal_strip_to(const Partition& mu) const {
    if (mu.length() < length())
        return false;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu.part(i) < part(i))
            return false;
        if (i + 1 < mu.length() && mu.part(i + 1) > part(i))
            return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void gen(int rows, int cols, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows)
        return;
    for (int v = 1; v <= std::min(cols, max_part); ++v) {
        cur.push_back(v);
        gen(rows, cols, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(rows, cols, cols, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace steiner::chow
