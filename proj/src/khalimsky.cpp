#include "khal/khalimsky.hpp"

#include <algorithm>
#include <cstdlib>

namespace khal {

namespace {

void check_coord(std::int64_t c) {
    if (c > kCoordLimit || c < -kCoordLimit) {
        throw std::overflow_error("coordinate exceeds +/-2^62: " + std::to_string(c));
    }
}

void check_same_dim(const KPoint& a, const KPoint& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
}

bool is_even(std::int64_t x) {
    return x % 2 == 0;
}

// Product of per-coordinate 1-D sets, in lexicographic order.
PointSet coordinate_product(const std::vector<std::vector<std::int64_t>>& axes) {
    std::vector<KPoint> out;
    std::size_t total = 1;
    for (const auto& axis : axes) total *= axis.size();
    out.reserve(total);
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<std::int64_t> coords(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) coords[i] = axes[i][idx[i]];
        out.emplace_back(std::move(coords));
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
        }
    }
    return PointSet(std::move(out));
}

}  // namespace

KPoint::KPoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("point must have dimension >= 1");
    }
    for (std::int64_t c : coords_) check_coord(c);
}

KPoint::KPoint(std::initializer_list<std::int64_t> coords)
    : KPoint(std::vector<std::int64_t>(coords)) {}

std::string KPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(coords_[i]);
    }
    s += ")";
    return s;
}

PointSet::PointSet(std::vector<KPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].dim() != points_[0].dim()) {
            throw std::invalid_argument("point set mixes dimensions");
        }
    }
}

bool PointSet::contains(const KPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool PointSet::is_subset_of(const PointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(),
                         points_.begin(), points_.end());
}

std::string PointSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i > 0) s += ", ";
        s += points_[i].to_string();
    }
    s += "}";
    return s;
}

Box::Box(std::vector<std::pair<std::int64_t, std::int64_t>> ranges)
    : ranges_(std::move(ranges)) {
    if (ranges_.empty()) {
        throw std::invalid_argument("box must have dimension >= 1");
    }
    for (const auto& [a, b] : ranges_) {
        check_coord(a);
        check_coord(b);
        if (a > b) {
            throw std::invalid_argument("empty box range [" + std::to_string(a) + "," +
                                        std::to_string(b) + "]");
        }
    }
}

bool Box::contains(const KPoint& p) const {
    if (p.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (p[i] < lo(i) || p[i] > hi(i)) return false;
    }
    return true;
}

std::uint64_t Box::point_count() const {
    std::uint64_t total = 1;
    for (const auto& [a, b] : ranges_) {
        const std::uint64_t len = static_cast<std::uint64_t>(b - a) + 1;
        if (total > static_cast<std::uint64_t>(kCoordLimit) / len) {
            throw std::overflow_error("box point count exceeds 2^62");
        }
        total *= len;
    }
    return total;
}

Box Box::expanded(std::int64_t margin) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(ranges_.size());
    for (const auto& [a, b] : ranges_) out.emplace_back(a - margin, b + margin);
    return Box(std::move(out));
}

std::vector<KPoint> Box::points() const {
    std::vector<KPoint> out;
    out.reserve(point_count());
    std::vector<std::int64_t> cur;
    cur.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) cur.push_back(lo(i));
    for (;;) {
        out.emplace_back(cur);
        std::size_t i = dim();
        while (i-- > 0) {
            if (cur[i] < hi(i)) {
                ++cur[i];
                break;
            }
            cur[i] = lo(i);
            if (i == 0) return out;
        }
    }
}

std::string Box::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        if (i > 0) s += "x";
        s += "[" + std::to_string(lo(i)) + "," + std::to_string(hi(i)) + "]";
    }
    return s;
}

std::vector<std::int64_t> min_nbhd_1d(std::int64_t x) {
    check_coord(x);
    if (is_even(x)) {
        check_coord(x - 1);
        check_coord(x + 1);
        return {x - 1, x, x + 1};
    }
    return {x};
}

std::vector<std::int64_t> closure_1d(std::int64_t x) {
    check_coord(x);
    if (is_even(x)) return {x};
    check_coord(x - 1);
    check_coord(x + 1);
    return {x - 1, x, x + 1};
}

PointSet min_nbhd(const KPoint& p) {
    std::vector<std::vector<std::int64_t>> axes;
    axes.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) axes.push_back(min_nbhd_1d(p[i]));
    return coordinate_product(axes);
}

PointSet point_closure(const KPoint& p) {
    std::vector<std::vector<std::int64_t>> axes;
    axes.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) axes.push_back(closure_1d(p[i]));
    return coordinate_product(axes);
}

bool is_closed_point(const KPoint& p) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (!is_even(p[i])) return false;
    }
    return true;
}

namespace detail {
std::int64_t even_anchor(std::int64_t x) {
    return is_even(x) ? x : x - 1;
}
}  // namespace detail

std::vector<KPoint> chain(const KPoint& x, const KPoint& y) {
    check_same_dim(x, y);
    std::vector<KPoint> out;
    out.push_back(x);
    std::vector<std::int64_t> cur = x.coords();
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const std::int64_t from = cur[i];
        const std::int64_t to = y[i];
        if (from == to) continue;
        const std::int64_t a = detail::even_anchor(from);
        const std::int64_t b = detail::even_anchor(to);
        if (a != from) {
            cur[i] = a;
            out.emplace_back(cur);
        }
        const std::int64_t step = (b > a) ? 2 : -2;
        for (std::int64_t v = a; v != b;) {
            v += step;
            cur[i] = v;
            out.emplace_back(cur);
        }
        if (b != to) {
            cur[i] = to;
            out.emplace_back(cur);
        }
    }
    return out;
}

}  // namespace khal
