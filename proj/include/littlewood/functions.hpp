#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "littlewood/interval_set.hpp"

namespace littlewood {

enum class FnKind { step, piecewise_linear, reciprocal_ramp, other };

// A measurable function is anything that can answer exact level-set queries.
// Values live in the extended real line; infinities are declared explicitly
// through the infinity sets, never computed from limits.
class MeasurableFn {
public:
    virtual ~MeasurableFn() = default;

    virtual FnKind kind() const = 0;
    virtual const IntervalSet& domain() const = 0;
    virtual IntervalSet level_gt(const Rational& t) const = 0;  // {x : f(x) > t}
    virtual IntervalSet level_ge(const Rational& t) const = 0;  // {x : f(x) >= t}
    virtual IntervalSet plus_infinity_set() const;
    virtual IntervalSet minus_infinity_set() const;
    virtual ExtendedRational eval(const Rational& x) const = 0;
    // Exact supremum over k (including unattained endpoint limits);
    // sup of the empty set is reported as -inf.
    virtual ExtendedRational sup_on(const IntervalSet& k) const = 0;
    virtual std::vector<Rational> breakpoints() const = 0;
};

using FnPtr = std::shared_ptr<const MeasurableFn>;

struct StepPiece {
    IntervalSet carrier;
    ExtendedRational value;
};

// Finitely many values on disjoint carriers covering the domain. The
// "simple" flag of the classical theory corresponds to all values finite.
class StepFunction final : public MeasurableFn {
public:
    explicit StepFunction(std::vector<StepPiece> pieces);
    static StepFunction constant(IntervalSet domain, ExtendedRational value);
    static StepFunction indicator(const IntervalSet& carrier, const IntervalSet& domain);

    const std::vector<StepPiece>& pieces() const { return pieces_; }
    bool simple() const { return simple_; }

    FnKind kind() const override { return FnKind::step; }
    const IntervalSet& domain() const override { return domain_; }
    IntervalSet level_gt(const Rational& t) const override;
    IntervalSet level_ge(const Rational& t) const override;
    IntervalSet plus_infinity_set() const override;
    IntervalSet minus_infinity_set() const override;
    ExtendedRational eval(const Rational& x) const override;
    ExtendedRational sup_on(const IntervalSet& k) const override;
    std::vector<Rational> breakpoints() const override;

private:
    IntervalSet domain_;
    std::vector<StepPiece> pieces_;              // sorted by value, values distinct
    std::vector<std::pair<Interval, size_t>> flat_;  // components sorted by lo -> piece index
    bool simple_ = true;
};

struct LinearPiece {
    Interval span;
    Rational slope, offset;  // f(x) = slope*x + offset on span

    Rational at(const Rational& x) const { return slope * x + offset; }
};

// Piecewise affine, continuous on every connected component of its domain.
class PiecewiseLinear final : public MeasurableFn {
public:
    PiecewiseLinear(std::vector<LinearPiece> pieces, const Interval& universe);
    static PiecewiseLinear constant(const IntervalSet& domain, Rational value);
    static PiecewiseLinear line(Interval span, Rational slope, Rational offset, const Interval& universe);

    const std::vector<LinearPiece>& pieces() const { return pieces_; }
    Rational max_abs_slope() const;

    FnKind kind() const override { return FnKind::piecewise_linear; }
    const IntervalSet& domain() const override { return domain_; }
    IntervalSet level_gt(const Rational& t) const override;
    IntervalSet level_ge(const Rational& t) const override;
    ExtendedRational eval(const Rational& x) const override;
    ExtendedRational sup_on(const IntervalSet& k) const override;
    std::vector<Rational> breakpoints() const override;

private:
    IntervalSet domain_;
    std::vector<LinearPiece> pieces_;  // sorted by span.lo, pairwise disjoint
};

// f(x) = coef/(x - pole) on (pole, q]: finite everywhere, unbounded near the
// pole. The canonical witness that finite a.e. does not mean bounded.
class ReciprocalRamp final : public MeasurableFn {
public:
    ReciprocalRamp(Rational pole, Rational coef, Interval span, const Interval& universe);

    const Rational& pole() const { return pole_; }
    const Rational& coef() const { return coef_; }

    FnKind kind() const override { return FnKind::reciprocal_ramp; }
    const IntervalSet& domain() const override { return domain_; }
    IntervalSet level_gt(const Rational& t) const override;
    IntervalSet level_ge(const Rational& t) const override;
    ExtendedRational eval(const Rational& x) const override;
    ExtendedRational sup_on(const IntervalSet& k) const override;
    std::vector<Rational> breakpoints() const override;

private:
    Rational pole_, coef_;
    Interval span_;
    IntervalSet domain_;
};

// Pointwise algebra; exact, and only defined for operands of like concrete
// kind (step with step, piecewise-linear with piecewise-linear).
FnPtr fn_add(const FnPtr& f, const FnPtr& g);
FnPtr fn_sub(const FnPtr& f, const FnPtr& g);
FnPtr fn_max(const FnPtr& f, const FnPtr& g);
FnPtr fn_min(const FnPtr& f, const FnPtr& g);
FnPtr fn_scale(const FnPtr& f, const Rational& c);
FnPtr fn_abs(const FnPtr& f);

// f = fplus - fminus with fplus = max(f, 0) and fminus = max(-f, 0).
std::pair<FnPtr, FnPtr> pos_neg_decompose(const FnPtr& f);

ExtendedRational sup_on(const MeasurableFn& f, const IntervalSet& k);

IntervalSet abs_level_gt(const MeasurableFn& f, const Rational& t);  // {|f| > t}, t >= 0
IntervalSet abs_level_ge(const MeasurableFn& f, const Rational& t);

bool fn_nonneg(const MeasurableFn& f);

// (finite a.e.?, measure of the declared infinity sets)
std::pair<bool, Rational> is_finite_ae(const MeasurableFn& f);

// s_n(x) = min(n, floor(2^n f(x)) / 2^n), expressed purely through level_ge so
// it works for any oracle kind. Requires f >= 0 on its domain.
StepFunction dyadic_simple_approx(const MeasurableFn& f, int n);

// Same quantizer with cap and mesh decoupled: min(cap, floor(2^r f)/2^r).
StepFunction quantize_below(const MeasurableFn& f, const BigInt& cap, int resolution_bits);

// Bracketing pair (lo, hi) with hi - lo <= tol and lo < sup(f on k) <= hi,
// computed by binary search on level_gt only. For oracle kinds without an
// exact sup; f must be bounded above on k by 2^cap.
std::pair<Rational, Rational> sup_bracket(const MeasurableFn& f, const IntervalSet& k,
                                          const Rational& tol, int cap = 64);

}  // namespace littlewood
