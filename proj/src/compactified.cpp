#include "khal/compactified.hpp"

#include <algorithm>

namespace khal {

namespace {

std::size_t window_rank(const Box& window, const KPoint& p) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < window.dim(); ++i) {
        const std::size_t len = static_cast<std::size_t>(window.hi(i) - window.lo(i)) + 1;
        rank = rank * len + static_cast<std::size_t>(p[i] - window.lo(i));
    }
    return rank;
}

void check_dim(const ExtPoint& v, std::size_t dim, const char* what) {
    if (!v.is_infinity() && v.lattice().dim() != dim) {
        throw std::invalid_argument(std::string(what) + " dimension mismatch");
    }
}

}  // namespace

EventuallyConstantMap::EventuallyConstantMap(std::size_t dim,
                                             std::optional<Box> window,
                                             std::vector<ExtPoint> window_values,
                                             ExtPoint tail,
                                             ExtPoint at_infinity)
    : dim_(dim),
      window_(std::move(window)),
      window_values_(std::move(window_values)),
      tail_(std::move(tail)),
      at_infinity_(std::move(at_infinity)) {
    if (dim_ == 0) throw std::invalid_argument("map requires dimension >= 1");
    if (window_) {
        if (window_->dim() != dim_) throw std::invalid_argument("window dimension mismatch");
        if (window_values_.size() != window_->point_count()) {
            throw std::invalid_argument("window values must cover the window");
        }
    } else if (!window_values_.empty()) {
        throw std::invalid_argument("window values without a window");
    }
    for (const ExtPoint& v : window_values_) check_dim(v, dim_, "window value");
    check_dim(tail_, dim_, "tail value");
    check_dim(at_infinity_, dim_, "value at infinity");
}

EventuallyConstantMap EventuallyConstantMap::constant(std::size_t dim, const ExtPoint& value) {
    return EventuallyConstantMap(dim, std::nullopt, {}, value, value);
}

ExtPoint EventuallyConstantMap::value_at(const KPoint& p) const {
    if (p.dim() != dim_) throw std::invalid_argument("point dimension mismatch");
    if (window_ && window_->contains(p)) return window_values_[window_rank(*window_, p)];
    return tail_;
}

ExtPoint EventuallyConstantMap::value_at(const ExtPoint& p) const {
    return p.is_infinity() ? at_infinity_ : value_at(p.lattice());
}

std::optional<ExtPoint> EventuallyConstantMap::global_constant_value() const {
    if (at_infinity_ != tail_) return std::nullopt;
    for (const ExtPoint& v : window_values_) {
        if (v != tail_) return std::nullopt;
    }
    return tail_;
}

bool is_closed_point_ext(const ExtPoint& p) {
    return p.is_infinity() || is_closed_point(p.lattice());
}

bool constant_map_closed_graph(const ExtPoint& value) {
    return is_closed_point_ext(value);
}

ExtGraphCheck has_closed_graph_ext(const EventuallyConstantMap& f) {
    const ExtPoint& c = f.tail();
    const ExtPoint& f_inf = f.at_infinity();

    std::vector<KPoint> scan;  // window expanded by 1; empty when no window
    if (f.window()) scan = f.window()->expanded(1).points();

    // (i) lattice/lattice pairs with x near the window.
    for (const KPoint& x : scan) {
        const ExtPoint fx = f.value_at(x);
        for (const KPoint& xp : min_nbhd(x)) {
            const ExtPoint v = f.value_at(xp);
            if (v.is_infinity()) continue;
            for (const KPoint& y : point_closure(v.lattice())) {
                if (fx.is_infinity() || fx.lattice() != y) {
                    return {false, std::make_pair(ExtPoint(x), ExtPoint(y)),
                            "lattice pair near window"};
                }
            }
        }
    }
    // (i) far from the window every V(x) sees only the tail value.
    if (!c.is_infinity() && !is_closed_point(c.lattice())) {
        std::vector<std::int64_t> far(f.dim(), 0);
        if (f.window()) {
            // Any point outside the expanded window works; stay representable.
            for (std::size_t i = 0; i < f.dim(); ++i) {
                far[i] = f.window()->lo(i) - 2 >= -kCoordLimit ? f.window()->lo(i) - 2
                                                               : f.window()->hi(i) + 2;
            }
        }
        const PointSet cl = point_closure(c.lattice());
        for (const KPoint& y : cl) {
            if (y != c.lattice()) {
                return {false, std::make_pair(ExtPoint(KPoint(std::move(far))), ExtPoint(y)),
                        "lattice pair in tail region"};
            }
        }
    }

    // (ii) pairs (x, inf).
    for (const KPoint& x : scan) {
        if (f.value_at(x).is_infinity()) continue;
        for (const KPoint& xp : min_nbhd(x)) {
            if (f.value_at(xp).is_infinity()) {
                return {false, std::make_pair(ExtPoint(x), ExtPoint::infinity()),
                        "inf value adjacent to a lattice value"};
            }
        }
    }

    // (iii) pairs (inf, y): y limited to the closures of c and f(inf).
    std::vector<KPoint> ys;
    if (!c.is_infinity()) {
        for (const KPoint& y : point_closure(c.lattice())) ys.push_back(y);
    }
    if (!f_inf.is_infinity()) {
        for (const KPoint& y : point_closure(f_inf.lattice())) ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (const KPoint& y : ys) {
        if (f_inf.is_infinity() || f_inf.lattice() != y) {
            return {false, std::make_pair(ExtPoint::infinity(), ExtPoint(y)),
                    "tail or inf-value accumulates at a lattice point"};
        }
    }

    // (iv) pair (inf, inf): an inf tail accumulates at (inf, inf).
    if (c.is_infinity() && !f_inf.is_infinity()) {
        return {false, std::make_pair(ExtPoint::infinity(), ExtPoint::infinity()),
                "inf tail with lattice value at inf"};
    }

    return {};
}

CompactifiedTheoremReport verify_compactified_theorem(
    const std::vector<EventuallyConstantMap>& family) {
    CompactifiedTheoremReport report;
    for (const EventuallyConstantMap& f : family) {
        ++report.checked;
        const std::optional<ExtPoint> value = f.global_constant_value();
        const bool predicted = value && is_closed_point_ext(*value);
        const ExtGraphCheck actual = has_closed_graph_ext(f);
        if (actual.holds != predicted) {
            report.pass = false;
            std::string desc = "map #" + std::to_string(report.checked - 1) +
                               ": graph check says " + (actual.holds ? "closed" : "not closed") +
                               ", constant criterion says " + (predicted ? "closed" : "not closed");
            report.mismatches.push_back(std::move(desc));
        }
    }
    return report;
}

}  // namespace khal
