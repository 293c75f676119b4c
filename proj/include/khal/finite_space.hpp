#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khal/khalimsky.hpp"

namespace khal {

// Subset of a space, as a sorted duplicate-free list of point indices.
using IndexSet = std::vector<std::size_t>;

// One broken axiom, with the witness pair that breaks it.
struct Violation {
    enum class Kind {
        kPointNotInOwnNbhd,   // x not in U(x)
        kNbhdNotMinimal,      // y in U(x) but U(y) not a subset of U(x)
        kDuplicateLabel,
        kIndexOutOfRange,
    };
    Kind kind;
    std::size_t x = 0;
    std::size_t y = 0;
    std::string describe(const class FiniteSpace& space) const;
};

// A finite Alexandroff space given by its minimal-open-neighborhood system.
// Immutable after construction; safe for shared concurrent reads.
//
// Point order is construction order, which the interval/box/product
// constructors keep lexicographic over the embedded lattice coordinates.
// Every deterministic witness in the toolkit leans on that order.
class FiniteSpace {
public:
    enum class Kind { kGeneric, kInterval, kBox };

    FiniteSpace(std::vector<std::string> labels,
                std::vector<IndexSet> min_nbhds,
                std::optional<std::vector<KPoint>> embedding = std::nullopt);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const IndexSet& nbhd(std::size_t i) const { return nbhds_[i]; }

    bool has_embedding() const { return embedding_.has_value(); }
    const KPoint& embedded(std::size_t i) const { return (*embedding_)[i]; }
    std::optional<std::size_t> index_of_embedded(const KPoint& p) const;

    Kind kind() const { return kind_; }
    const std::string& description() const { return description_; }

    // Checks the minimal-neighborhood axioms; violations are data, not errors.
    std::vector<Violation> validate() const;
    bool is_valid() const { return validate().empty(); }

    IndexSet closure_of(const IndexSet& subset) const;
    bool is_open(const IndexSet& subset) const;
    bool is_closed(const IndexSet& subset) const;
    IndexSet closed_points() const;

    // True iff every two points are linked by a path of overlapping minimal
    // neighborhoods; on such spaces a closed-graph map is necessarily constant.
    bool is_chain_connected() const;

    // The lattice box this space is a full window of, when the embedding
    // covers an axis-aligned box in lexicographic point order.
    std::optional<Box> lattice_window() const;

private:
    friend FiniteSpace product(const FiniteSpace&, const FiniteSpace&);
    friend FiniteSpace interval_space(std::int64_t, std::int64_t);
    friend FiniteSpace box_space(const Box&);

    std::vector<std::string> labels_;
    std::vector<IndexSet> nbhds_;
    std::optional<std::vector<KPoint>> embedding_;
    Kind kind_ = Kind::kGeneric;
    std::string description_;
};

// Product space: points are pairs in left-major order, and the minimal
// neighborhood of (a,b) is U(a) x U(b).
FiniteSpace product(const FiniteSpace& s1, const FiniteSpace& s2);

// The Khalimsky interval [a,b] with its subspace topology:
// U(x) = min_nbhd_1d(x) intersected with [a,b]. Requires a <= b.
FiniteSpace interval_space(std::int64_t a, std::int64_t b);

// Finite window of the n-dimensional lattice, the iterated product of
// interval spaces. Point labels are the lattice tuples.
FiniteSpace box_space(const Box& box);

}  // namespace khal
