#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace khal {

// Coordinates are capped at +/- 2^62 so that one-step neighborhood
// arithmetic can never wrap around in 64 bits. Exceeding the cap is a
// reported error, not undefined behaviour.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 62;

// A point of the n-dimensional Khalimsky lattice. Dimension is fixed at
// construction; mixed-dimension operations throw std::invalid_argument.
class KPoint {
public:
    KPoint() = default;
    explicit KPoint(std::vector<std::int64_t> coords);
    KPoint(std::initializer_list<std::int64_t> coords);

    std::size_t dim() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    bool operator==(const KPoint& other) const = default;
    // Lexicographic order; used everywhere a deterministic point order is needed.
    auto operator<=>(const KPoint& other) const = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

// A finite set of same-dimension points, kept sorted and duplicate-free.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<KPoint> points);

    bool contains(const KPoint& p) const;
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const KPoint& operator[](std::size_t i) const { return points_[i]; }

    bool is_subset_of(const PointSet& other) const;
    bool operator==(const PointSet& other) const = default;

    std::string to_string() const;

private:
    std::vector<KPoint> points_;
};

// An axis-aligned lattice box, the product of per-coordinate integer ranges.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<std::pair<std::int64_t, std::int64_t>> ranges);

    std::size_t dim() const { return ranges_.size(); }
    std::int64_t lo(std::size_t i) const { return ranges_[i].first; }
    std::int64_t hi(std::size_t i) const { return ranges_[i].second; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges() const { return ranges_; }

    bool contains(const KPoint& p) const;
    // Number of lattice points (throws std::overflow_error if it exceeds 2^62).
    std::uint64_t point_count() const;
    // Box enlarged by `margin` on each side of every coordinate.
    Box expanded(std::int64_t margin) const;
    // All lattice points in ascending lexicographic order.
    std::vector<KPoint> points() const;

    bool operator==(const Box& other) const = default;
    std::string to_string() const;

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges_;
};

// Smallest open neighborhood of x in the Khalimsky line: {x} for odd x,
// {x-1, x, x+1} for even x.
std::vector<std::int64_t> min_nbhd_1d(std::int64_t x);

// Closure of {x} in the Khalimsky line: {x} for even x, {x-1, x, x+1} for
// odd x. Dual to min_nbhd_1d: y is in closure_1d(x) iff x is in min_nbhd_1d(y).
std::vector<std::int64_t> closure_1d(std::int64_t x);

// Smallest open neighborhood in the n-dimensional lattice: the coordinatewise
// product of min_nbhd_1d. Cardinality is 3^(#even coordinates).
PointSet min_nbhd(const KPoint& p);

// Closure of a singleton, the coordinatewise product of closure_1d.
PointSet point_closure(const KPoint& p);

// True iff every coordinate is even, equivalently point_closure(p) == {p}.
bool is_closed_point(const KPoint& p);

// A finite sequence x = c_1, ..., c_p = y whose consecutive minimal
// neighborhoods intersect. Walks coordinates one at a time; within a
// coordinate, odd values step to their even neighbor below, then the even
// values advance by 2 toward the target. Deterministic; not shortest.
std::vector<KPoint> chain(const KPoint& x, const KPoint& y);

namespace detail {
// Even anchor used by chain: x for even x, x-1 for odd x.
std::int64_t even_anchor(std::int64_t x);
}  // namespace detail

}  // namespace khal
