#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

// A nonempty bounded interval with per-endpoint open/closed flags.
// Invariant: lo <= hi, and a singleton (lo == hi) is closed on both sides.
struct Interval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval make(Rational lo, bool lo_closed, Rational hi, bool hi_closed);
    static Interval closed(Rational lo, Rational hi) { return make(std::move(lo), true, std::move(hi), true); }
    static Interval open(Rational lo, Rational hi) { return make(std::move(lo), false, std::move(hi), false); }
    static Interval point(Rational x);

    bool contains(const Rational& x) const;
    bool is_singleton() const { return lo == hi; }
    Rational length() const { return hi - lo; }

    bool operator==(const Interval&) const = default;

    std::string to_string() const;
    static Interval parse(std::string_view text);
};

// Canonical finite union of disjoint, non-mergeable intervals inside a bounded
// closed universe. This is the concrete "measurable set" of the library; all
// set algebra, measure and regularity questions about it are decidable exactly.
class IntervalSet {
public:
    static IntervalSet empty(const Interval& universe);
    static IntervalSet whole(const Interval& universe);
    static IntervalSet single(const Interval& component, const Interval& universe);

    // Sorts, merges overlapping/touching intervals, drops nothing else.
    // Throws ComponentOutsideUniverse if a raw interval leaves the universe.
    static IntervalSet normalize(std::vector<Interval> raw, const Interval& universe);

    const std::vector<Interval>& components() const { return components_; }
    const Interval& universe() const { return universe_; }
    bool empty() const { return components_.empty(); }
    size_t size() const { return components_.size(); }

    bool contains(const Rational& x) const;
    Rational measure() const;

    bool is_closed() const;
    // Open relative to the universe: endpoints shared with the universe
    // boundary count as relatively open.
    bool is_open_rel() const;

    bool subset_of(const IntervalSet& other) const;
    bool operator==(const IntervalSet&) const = default;

    std::string to_string() const;  // "[0,1) u (2,3]" or "empty"
    static IntervalSet parse(std::string_view text, const Interval& universe);

private:
    IntervalSet(Interval universe, std::vector<Interval> components)
        : universe_(std::move(universe)), components_(std::move(components)) {}

    Interval universe_;
    std::vector<Interval> components_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_complement(const IntervalSet& a);  // relative to the universe

std::optional<Interval> interval_intersect(const Interval& a, const Interval& b);

// {y in i : y > x} and friends; nullopt when empty.
std::optional<Interval> interval_clip_gt(const Interval& i, const Rational& x);
std::optional<Interval> interval_clip_ge(const Interval& i, const Rational& x);
std::optional<Interval> interval_clip_lt(const Interval& i, const Rational& x);
std::optional<Interval> interval_clip_le(const Interval& i, const Rational& x);

// Sweep order: does a end strictly before b (open end at the same point first)?
bool interval_ends_before(const Interval& a, const Interval& b);

// Largest closed subset extractor behind the First Principle. Shrink rule:
// with c = number of components having a non-closed endpoint, delta = eps/(4c);
// open endpoints move inward by delta, components of length <= 2*delta collapse
// to their midpoint singleton. Total loss <= eps/2 < eps, exactly.
IntervalSet closed_subset_within(const IntervalSet& set, const Rational& eps);

// Theorem-shaped decomposition E = K u F with K closed and measure(F) < eps.
struct DecompositionCert {
    IntervalSet K;
    IntervalSet F;
    Rational epsilon;
    Rational loss;  // = measure(F)
};

DecompositionCert principle1_decompose(const IntervalSet& set, const Rational& eps);

}  // namespace littlewood
