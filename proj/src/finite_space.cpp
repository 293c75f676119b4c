#include "khal/finite_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace khal {

namespace {

IndexSet sorted_unique(IndexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const IndexSet& s, std::size_t x) {
    return std::binary_search(s.begin(), s.end(), x);
}

bool subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string Violation::describe(const FiniteSpace& space) const {
    const auto name = [&](std::size_t i) {
        return i < space.size() ? space.label(i) : "#" + std::to_string(i);
    };
    switch (kind) {
        case Kind::kPointNotInOwnNbhd:
            return name(x) + " not in U(" + name(x) + ")";
        case Kind::kNbhdNotMinimal:
            return "U(" + name(y) + ") not contained in U(" + name(x) + ") although " +
                   name(y) + " is in U(" + name(x) + ")";
        case Kind::kDuplicateLabel:
            return "duplicate label " + name(x);
        case Kind::kIndexOutOfRange:
            return "U(" + name(x) + ") refers to out-of-range index " + std::to_string(y);
    }
    return "unknown violation";
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels,
                         std::vector<IndexSet> min_nbhds,
                         std::optional<std::vector<KPoint>> embedding)
    : labels_(std::move(labels)),
      nbhds_(std::move(min_nbhds)),
      embedding_(std::move(embedding)) {
    if (labels_.size() != nbhds_.size()) {
        throw std::invalid_argument("label/neighborhood count mismatch");
    }
    if (embedding_ && embedding_->size() != labels_.size()) {
        throw std::invalid_argument("embedding size mismatch");
    }
    for (auto& n : nbhds_) n = sorted_unique(std::move(n));
    description_ = "space on " + std::to_string(size()) + " points";
}

std::optional<std::size_t> FiniteSpace::index_of_embedded(const KPoint& p) const {
    if (!embedding_) return std::nullopt;
    for (std::size_t i = 0; i < embedding_->size(); ++i) {
        if ((*embedding_)[i] == p) return i;
    }
    return std::nullopt;
}

std::vector<Violation> FiniteSpace::validate() const {
    std::vector<Violation> out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!seen.insert(labels_[i]).second) {
            out.push_back({Violation::Kind::kDuplicateLabel, i, 0});
        }
    }
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y : nbhds_[x]) {
            if (y >= size()) {
                out.push_back({Violation::Kind::kIndexOutOfRange, x, y});
            }
        }
    }
    if (!out.empty()) return out;  // deeper checks need in-range indices
    for (std::size_t x = 0; x < size(); ++x) {
        if (!contains(nbhds_[x], x)) {
            out.push_back({Violation::Kind::kPointNotInOwnNbhd, x, x});
        }
    }
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y : nbhds_[x]) {
            if (!subset(nbhds_[y], nbhds_[x])) {
                out.push_back({Violation::Kind::kNbhdNotMinimal, x, y});
            }
        }
    }
    return out;
}

IndexSet FiniteSpace::closure_of(const IndexSet& subset_in) const {
    IndexSet out;
    for (std::size_t y = 0; y < size(); ++y) {
        for (std::size_t u : nbhds_[y]) {
            if (contains(subset_in, u)) {
                out.push_back(y);
                break;
            }
        }
    }
    return out;
}

bool FiniteSpace::is_open(const IndexSet& subset_in) const {
    for (std::size_t x : subset_in) {
        if (!subset(nbhds_[x], subset_in)) return false;
    }
    return true;
}

bool FiniteSpace::is_closed(const IndexSet& subset_in) const {
    return closure_of(subset_in) == subset_in;
}

IndexSet FiniteSpace::closed_points() const {
    IndexSet out;
    for (std::size_t x = 0; x < size(); ++x) {
        if (closure_of({x}) == IndexSet{x}) out.push_back(x);
    }
    return out;
}

bool FiniteSpace::is_chain_connected() const {
    if (size() == 0) return true;
    // Union-find over "minimal neighborhoods intersect".
    std::vector<std::size_t> parent(size());
    for (std::size_t i = 0; i < size(); ++i) parent[i] = i;
    const auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t u : nbhds_[x]) parent[find(u)] = find(x);
    }
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < size(); ++i) {
        if (find(i) != root) return false;
    }
    return true;
}

std::optional<Box> FiniteSpace::lattice_window() const {
    if (!embedding_ || embedding_->empty()) return std::nullopt;
    const std::size_t n = (*embedding_)[0].dim();
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges(
        n, {kCoordLimit, -kCoordLimit});
    for (const KPoint& p : *embedding_) {
        if (p.dim() != n) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) {
            ranges[i].first = std::min(ranges[i].first, p[i]);
            ranges[i].second = std::max(ranges[i].second, p[i]);
        }
    }
    Box box(std::move(ranges));
    if (box.point_count() != size()) return std::nullopt;
    const std::vector<KPoint> expected = box.points();
    for (std::size_t i = 0; i < size(); ++i) {
        if ((*embedding_)[i] != expected[i]) return std::nullopt;
    }
    return box;
}

FiniteSpace product(const FiniteSpace& s1, const FiniteSpace& s2) {
    const std::size_t n1 = s1.size();
    const std::size_t n2 = s2.size();
    std::vector<std::string> labels;
    std::vector<IndexSet> nbhds;
    labels.reserve(n1 * n2);
    nbhds.reserve(n1 * n2);
    std::optional<std::vector<KPoint>> embedding;
    const bool embed = s1.has_embedding() && s2.has_embedding();
    if (embed) {
        embedding.emplace();
        embedding->reserve(n1 * n2);
    }
    for (std::size_t a = 0; a < n1; ++a) {
        for (std::size_t b = 0; b < n2; ++b) {
            labels.push_back("(" + s1.label(a) + "," + s2.label(b) + ")");
            IndexSet u;
            u.reserve(s1.nbhd(a).size() * s2.nbhd(b).size());
            for (std::size_t ua : s1.nbhd(a)) {
                for (std::size_t ub : s2.nbhd(b)) {
                    u.push_back(ua * n2 + ub);
                }
            }
            nbhds.push_back(std::move(u));
            if (embed) {
                std::vector<std::int64_t> coords = s1.embedded(a).coords();
                const auto& right = s2.embedded(b).coords();
                coords.insert(coords.end(), right.begin(), right.end());
                embedding->emplace_back(std::move(coords));
            }
        }
    }
    FiniteSpace out(std::move(labels), std::move(nbhds), std::move(embedding));
    out.description_ = s1.description() + " x " + s2.description();
    return out;
}

FiniteSpace interval_space(std::int64_t a, std::int64_t b) {
    if (a > b) {
        throw std::invalid_argument("interval requires a <= b");
    }
    const std::size_t n = static_cast<std::size_t>(b - a + 1);
    std::vector<std::string> labels;
    std::vector<IndexSet> nbhds;
    std::vector<KPoint> embedding;
    labels.reserve(n);
    nbhds.reserve(n);
    embedding.reserve(n);
    for (std::int64_t x = a; x <= b; ++x) {
        labels.push_back(std::to_string(x));
        IndexSet u;
        for (std::int64_t v : min_nbhd_1d(x)) {
            if (v >= a && v <= b) u.push_back(static_cast<std::size_t>(v - a));
        }
        nbhds.push_back(std::move(u));
        embedding.emplace_back(KPoint{x});
    }
    FiniteSpace out(std::move(labels), std::move(nbhds), std::move(embedding));
    out.kind_ = FiniteSpace::Kind::kInterval;
    out.description_ = "interval [" + std::to_string(a) + "," + std::to_string(b) + "]";
    return out;
}

FiniteSpace box_space(const Box& box) {
    FiniteSpace out = interval_space(box.lo(0), box.hi(0));
    for (std::size_t i = 1; i < box.dim(); ++i) {
        out = product(out, interval_space(box.lo(i), box.hi(i)));
    }
    if (box.dim() > 1) {
        // Relabel points as lattice tuples.
        for (std::size_t i = 0; i < out.size(); ++i) {
            out.labels_[i] = out.embedded(i).to_string();
        }
        out.kind_ = FiniteSpace::Kind::kBox;
        out.description_ = "box " + box.to_string();
    }
    return out;
}

}  // namespace khal
