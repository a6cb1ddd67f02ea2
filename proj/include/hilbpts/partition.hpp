#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilbpts/error.hpp"

namespace hilb {

/// A cell of a Young diagram, 0-based. In the monomial dictionary the box
/// (row, col) stands for x^col y^row.
struct Box {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

/**
 * Integer partition stored as weakly decreasing positive parts.
 *
 * The encoding is canonical (no trailing zeros) so equality and ordering
 * are structural. parts()[r] is the length of row r of the diagram.
 */
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (parts_[r] <= 0)
                throw invalid_input("partition parts must be positive");
            if (r > 0 && parts_[r] > parts_[r - 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    /// Number of rows.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Row length, 0 past the last row.
    int row(int r) const noexcept {
        return (r >= 0 && r < length()) ? parts_[static_cast<std::size_t>(r)] : 0;
    }

    bool contains(Box b) const noexcept {
        return b.row >= 0 && b.col >= 0 && b.col < row(b.row);
    }

    /// Box-wise containment of diagrams.
    bool contained_in(const Partition& other) const noexcept {
        if (length() > other.length())
            return false;
        for (int r = 0; r < length(); ++r)
            if (row(r) > other.row(r))
                return false;
        return true;
    }

    /// Number of distinct part values (= number of removable corners).
    int distinct_parts() const noexcept {
        int count = 0;
        for (std::size_t r = 0; r < parts_.size(); ++r)
            if (r == 0 || parts_[r] != parts_[r - 1])
                ++count;
        return count;
    }

    /// Boxes in row-major order.
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int r = 0; r < length(); ++r)
            for (int c = 0; c < row(r); ++c)
                out.push_back({r, c});
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (r)
                os << ',';
            os << parts_[r];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

namespace detail {

inline void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n, in lexicographically descending order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw invalid_input("partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::enumerate_into(n, n, prefix, out);
    return out;
}

inline Partition conjugate(const Partition& p) {
    std::vector<int> parts(static_cast<std::size_t>(p.largest()), 0);
    for (int c = 0; c < p.largest(); ++c) {
        int height = 0;
        while (height < p.length() && p.row(height) > c)
            ++height;
        parts[static_cast<std::size_t>(c)] = height;
    }
    return Partition(std::move(parts));
}

/// Boxes strictly to the right of b in its row.
inline int arm(const Partition& p, Box b) {
    if (!p.contains(b))
        throw invalid_input("box not in partition");
    return p.row(b.row) - b.col - 1;
}

/// Boxes strictly below b in its column.
inline int leg(const Partition& p, Box b) {
    if (!p.contains(b))
        throw invalid_input("box not in partition");
    int below = 0;
    while (p.row(b.row + below + 1) > b.col)
        ++below;
    return below;
}

/// Partitions obtained by adding one box, ordered by the row receiving it.
inline std::vector<Partition> covers(const Partition& p) {
    std::vector<Partition> out;
    for (int r = 0; r <= p.length(); ++r) {
        if (r > 0 && p.row(r - 1) == p.row(r))
            continue;
        std::vector<int> parts = p.parts();
        if (r == p.length())
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(r)];
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Partitions obtained by removing one box, ordered by the row losing it.
inline std::vector<Partition> cocovers(const Partition& p) {
    if (p.empty())
        throw invalid_input("no cocovers");
    std::vector<Partition> out;
    for (int r = 0; r < p.length(); ++r) {
        if (p.row(r) == p.row(r + 1))
            continue;
        std::vector<int> parts = p.parts();
        if (--parts[static_cast<std::size_t>(r)] == 0)
            parts.pop_back();
        out.emplace_back(std::move(parts));
    }
    return out;
}

} // namespace hilb
