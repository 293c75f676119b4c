#include "khal/rule_map.hpp"

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

}  // namespace

RuleMap::RuleMap(std::size_t dim, Rule rule) : dim_(dim), rule_(std::move(rule)) {
    if (dim_ == 0) throw std::invalid_argument("rule map requires dimension >= 1");
    if (const auto* c = std::get_if<Constant>(&rule_)) {
        if (c->value.dim() != dim_) {
            throw std::invalid_argument("constant value dimension mismatch");
        }
    } else if (const auto* t = std::get_if<TableWithDefault>(&rule_)) {
        if (t->window.dim() != dim_ || !t->fallback || t->fallback->dim() != dim_) {
            throw std::invalid_argument("table rule dimension mismatch");
        }
        if (t->values.size() != t->window.point_count()) {
            throw std::invalid_argument("table rule must cover its window");
        }
        for (const KPoint& v : t->values) {
            if (v.dim() != dim_) {
                throw std::invalid_argument("table rule value dimension mismatch");
            }
        }
    }
}

KPoint RuleMap::apply(const KPoint& p) const {
    if (p.dim() != dim_) throw std::invalid_argument("point dimension mismatch");
    struct Visitor {
        const KPoint& p;
        KPoint operator()(const Constant& c) const { return c.value; }
        KPoint operator()(const Identity&) const { return p; }
        KPoint operator()(const Coordinatewise& cw) const {
            std::vector<std::int64_t> coords(p.dim());
            for (std::size_t i = 0; i < p.dim(); ++i) coords[i] = cw.h.apply(p[i]);
            return KPoint(std::move(coords));
        }
        KPoint operator()(const TableWithDefault& t) const {
            if (t.window.contains(p)) return t.values[window_rank(t.window, p)];
            return t.fallback->apply(p);
        }
    };
    return std::visit(Visitor{p}, rule_);
}

std::optional<KPoint> RuleMap::constant_value() const {
    if (const auto* c = std::get_if<Constant>(&rule_)) return c->value;
    if (const auto* cw = std::get_if<Coordinatewise>(&rule_)) {
        using Kind = ParityRule1D::Action::Kind;
        if (cw->h.even.kind == Kind::kConst && cw->h.odd.kind == Kind::kConst &&
            cw->h.even.amount == cw->h.odd.amount) {
            return KPoint(std::vector<std::int64_t>(dim_, cw->h.even.amount));
        }
        return std::nullopt;
    }
    if (const auto* t = std::get_if<TableWithDefault>(&rule_)) {
        std::optional<KPoint> base = t->fallback->constant_value();
        if (!base) return std::nullopt;
        for (const KPoint& v : t->values) {
            if (v != *base) return std::nullopt;
        }
        return base;
    }
    return std::nullopt;  // identity on a lattice is never constant
}

RuleMap constant_rule(KPoint value) {
    const std::size_t n = value.dim();
    return RuleMap(n, RuleMap::Constant{std::move(value)});
}

RuleMap identity_rule(std::size_t dim) {
    return RuleMap(dim, RuleMap::Identity{});
}

RuleMap parity_rule(std::size_t dim, ParityRule1D h) {
    return RuleMap(dim, RuleMap::Coordinatewise{h});
}

RuleMap staircase_rule(std::size_t dim) {
    return parity_rule(dim, {ParityRule1D::Action::offset(1), ParityRule1D::Action::offset(0)});
}

RuleMap parity_sign_rule(std::size_t dim) {
    return parity_rule(dim, {ParityRule1D::Action::constant(1), ParityRule1D::Action::constant(-1)});
}

bool check_rule_at(const RuleMap& rule, LocalProperty property, const KPoint& p) {
    const PointSet target = min_nbhd(rule.apply(p));
    const PointSet up = min_nbhd(p);
    const auto image_inside = [&](const KPoint& w) {
        for (const KPoint& q : min_nbhd(w)) {
            if (!target.contains(rule.apply(q))) return false;
        }
        return true;
    };
    if (property == LocalProperty::kContinuity) {
        return image_inside(p);
    }
    for (const KPoint& w : up) {
        if (image_inside(w)) return true;
    }
    return false;
}

std::string RuleReport::summary() const {
    std::string out;
    out += constant_value ? "constant" : "NOT constant";
    out += continuous_on_window ? ", continuous" : ", NOT continuous";
    out += quasi_continuous_on_window ? ", quasi-continuous" : ", NOT quasi-continuous";
    switch (graph_status) {
        case GraphStatus::kClosed:
            out += ", closed graph";
            break;
        case GraphStatus::kNotClosed:
            out += ", NOT closed graph";
            break;
        case GraphStatus::kNotRefutedInRegion:
            out += ", closed graph not refuted within the region";
            break;
    }
    return out;
}

RuleReport analyze_rule(const RuleMap& rule, const Box& window, const Box& refutation_region) {
    RuleReport report;
    report.constant_value = rule.constant_value();
    for (const KPoint& p : window.points()) {
        if (report.continuous_on_window &&
            !check_rule_at(rule, LocalProperty::kContinuity, p)) {
            report.continuous_on_window = false;
            report.continuity_witness = p;
        }
        if (report.quasi_continuous_on_window &&
            !check_rule_at(rule, LocalProperty::kQuasiContinuity, p)) {
            report.quasi_continuous_on_window = false;
            report.quasi_witness = p;
        }
        if (!report.continuous_on_window && !report.quasi_continuous_on_window) break;
    }
    if (report.constant_value) {
        report.graph_status = is_closed_point(*report.constant_value)
                                  ? RuleReport::GraphStatus::kClosed
                                  : RuleReport::GraphStatus::kNotClosed;
        if (report.graph_status == RuleReport::GraphStatus::kNotClosed) {
            report.graph_witness = refute_closed_graph_rule(rule, refutation_region);
        }
    } else if (auto witness = refute_closed_graph_rule(rule, refutation_region)) {
        report.graph_status = RuleReport::GraphStatus::kNotClosed;
        report.graph_witness = witness;
    }
    return report;
}

std::optional<std::pair<KPoint, KPoint>> refute_closed_graph_rule(const RuleMap& rule,
                                                                  const Box& region) {
    if (region.dim() != rule.dim()) {
        throw std::invalid_argument("region dimension mismatch");
    }
    const std::vector<KPoint> pts = region.points();
    for (const KPoint& y : pts) {
        const PointSet uy = min_nbhd(y);
        for (const KPoint& x : pts) {
            if (rule.apply(x) == y) continue;
            for (const KPoint& xp : min_nbhd(x)) {
                if (uy.contains(rule.apply(xp))) {
                    return std::make_pair(x, y);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace khal
