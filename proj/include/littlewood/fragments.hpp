#pragma once

#include "littlewood/functions.hpp"

namespace littlewood {

// Piecewise-affine view of a function: a partition of its domain into spans,
// each carrying an affine value or a declared infinity. Unlike PiecewiseLinear
// this representation is allowed to jump at junctions, which is what the
// deviations |f_n - f| of mixed step/linear sequences look like.
struct Fragment {
    Interval span;
    int inf_sign = 0;  // +1 / -1 for infinite fragments, 0 for affine
    Rational slope, offset;

    // Affine extension; does not check span membership.
    ExtendedRational at(const Rational& x) const;
};

class FragmentFn {
public:
    FragmentFn(std::vector<Fragment> fragments, IntervalSet domain);

    // Piecewise-affine view of a step or piecewise-linear function.
    static FragmentFn of(const MeasurableFn& f);
    static bool representable(const MeasurableFn& f);

    static FragmentFn diff(const FragmentFn& a, const FragmentFn& b);      // a - b
    static FragmentFn abs_diff(const FragmentFn& a, const FragmentFn& b);  // |a - b|

    // a(x) >= b(x) at every point, decided exactly.
    static bool pointwise_ge(const FragmentFn& a, const FragmentFn& b);

    const std::vector<Fragment>& fragments() const { return fragments_; }
    const IntervalSet& domain() const { return domain_; }

    IntervalSet sublevel_lt(const Rational& t) const;  // {x : g(x) < t}
    IntervalSet sublevel_le(const Rational& t) const;
    ExtendedRational sup_on(const IntervalSet& k) const;
    ExtendedRational eval(const Rational& x) const;
    bool nonneg() const;
    bool continuous_on(const IntervalSet& k) const;

    FragmentFn abs() const;

    // Closed subset on which this function is continuous: open fragment ends
    // move inward, discontinuous junctions get separated by a positive gap,
    // continuous junctions stay connected. Loss < budget, exactly.
    IntervalSet nearly_continuous_subset(const Rational& budget) const;

private:
    std::vector<Fragment> fragments_;  // sorted by span.lo, disjoint, cover domain
    IntervalSet domain_;
};

}  // namespace littlewood
