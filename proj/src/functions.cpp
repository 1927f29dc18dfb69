#include "littlewood/functions.hpp"

#include <algorithm>
#include <functional>

namespace littlewood {

IntervalSet MeasurableFn::plus_infinity_set() const { return IntervalSet::empty(domain().universe()); }
IntervalSet MeasurableFn::minus_infinity_set() const { return IntervalSet::empty(domain().universe()); }

// --- StepFunction ---

StepFunction::StepFunction(std::vector<StepPiece> pieces) : domain_(IntervalSet::empty(Interval::closed(0, 0))) {
    std::erase_if(pieces, [](const StepPiece& p) { return p.carrier.empty(); });
    if (pieces.empty()) throw InputError("step function needs at least one nonempty piece");
    const Interval universe = pieces.front().carrier.universe();
    for (const StepPiece& p : pieces)
        if (!(p.carrier.universe() == universe))
            throw UniverseMismatch("step function carriers live in different universes");
    // group equal values
    std::sort(pieces.begin(), pieces.end(),
              [](const StepPiece& a, const StepPiece& b) { return a.value < b.value; });
    for (StepPiece& p : pieces) {
        if (!pieces_.empty() && pieces_.back().value == p.value) {
            pieces_.back().carrier = set_union(pieces_.back().carrier, p.carrier);
            continue;
        }
        pieces_.push_back(std::move(p));
    }
    std::vector<Interval> all;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (!pieces_[i].value.is_finite()) simple_ = false;
        for (const Interval& c : pieces_[i].carrier.components()) {
            all.push_back(c);
            flat_.emplace_back(c, i);
        }
    }
    std::sort(flat_.begin(), flat_.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    // disjointness: sorted components of distinct pieces must not overlap
    for (size_t i = 0; i + 1 < flat_.size(); ++i) {
        const Interval& a = flat_[i].first;
        const Interval& b = flat_[i + 1].first;
        bool overlap = b.lo < a.hi || (b.lo == a.hi && a.hi_closed && b.lo_closed);
        if (overlap && flat_[i].second != flat_[i + 1].second)
            throw InputError("step function carriers overlap near " + rat_to_string(b.lo));
    }
    domain_ = IntervalSet::normalize(std::move(all), universe);
}

StepFunction StepFunction::constant(IntervalSet domain, ExtendedRational value) {
    return StepFunction({{std::move(domain), std::move(value)}});
}

StepFunction StepFunction::indicator(const IntervalSet& carrier, const IntervalSet& domain) {
    std::vector<StepPiece> pieces;
    IntervalSet rest = set_difference(domain, carrier);
    if (!carrier.empty()) pieces.push_back({carrier, ExtendedRational(1)});
    if (!rest.empty()) pieces.push_back({std::move(rest), ExtendedRational(0)});
    return StepFunction(std::move(pieces));
}

IntervalSet StepFunction::level_gt(const Rational& t) const {
    std::vector<Interval> comps;
    ExtendedRational bound{t};
    for (const StepPiece& p : pieces_)
        if (p.value > bound)
            comps.insert(comps.end(), p.carrier.components().begin(), p.carrier.components().end());
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

IntervalSet StepFunction::level_ge(const Rational& t) const {
    std::vector<Interval> comps;
    ExtendedRational bound{t};
    for (const StepPiece& p : pieces_)
        if (p.value >= bound)
            comps.insert(comps.end(), p.carrier.components().begin(), p.carrier.components().end());
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

IntervalSet StepFunction::plus_infinity_set() const {
    for (const StepPiece& p : pieces_)
        if (p.value.is_plus_inf()) return p.carrier;
    return IntervalSet::empty(domain_.universe());
}

IntervalSet StepFunction::minus_infinity_set() const {
    for (const StepPiece& p : pieces_)
        if (p.value.is_minus_inf()) return p.carrier;
    return IntervalSet::empty(domain_.universe());
}

ExtendedRational StepFunction::eval(const Rational& x) const {
    auto it = std::upper_bound(flat_.begin(), flat_.end(), x,
                               [](const Rational& v, const auto& e) { return v < e.first.lo; });
    for (int back = 0; back < 2 && it != flat_.begin(); ++back) {
        --it;
        if (it->first.contains(x)) return pieces_[it->second].value;
    }
    throw PointOutsideDomain("point " + rat_to_string(x) + " outside step function domain");
}

ExtendedRational StepFunction::sup_on(const IntervalSet& k) const {
    ExtendedRational best = ExtendedRational::minus_inf();
    size_t i = 0, j = 0;
    const auto& kc = k.components();
    while (i < flat_.size() && j < kc.size()) {
        if (interval_intersect(flat_[i].first, kc[j]))
            best = er_max(best, pieces_[flat_[i].second].value);
        if (interval_ends_before(flat_[i].first, kc[j])) ++i;
        else ++j;
    }
    return best;
}

std::vector<Rational> StepFunction::breakpoints() const {
    std::vector<Rational> pts;
    for (const auto& [c, idx] : flat_) {
        pts.push_back(c.lo);
        pts.push_back(c.hi);
    }
    return pts;
}

// --- PiecewiseLinear ---

PiecewiseLinear::PiecewiseLinear(std::vector<LinearPiece> pieces, const Interval& universe)
    : domain_(IntervalSet::empty(universe)) {
    if (pieces.empty()) throw InputError("piecewise-linear function needs at least one piece");
    std::sort(pieces.begin(), pieces.end(),
              [](const LinearPiece& a, const LinearPiece& b) { return a.span.lo < b.span.lo; });
    for (LinearPiece& p : pieces) {
        if (!pieces_.empty()) {
            LinearPiece& last = pieces_.back();
            bool overlap = p.span.lo < last.span.hi ||
                           (p.span.lo == last.span.hi && last.span.hi_closed && p.span.lo_closed);
            if (overlap)
                throw InputError("piecewise-linear spans overlap near " + rat_to_string(p.span.lo));
            bool touching = p.span.lo == last.span.hi && (last.span.hi_closed || p.span.lo_closed);
            if (touching) {
                if (last.at(p.span.lo) != p.at(p.span.lo))
                    throw InputError("piecewise-linear function discontinuous at " +
                                     rat_to_string(p.span.lo));
                if (last.slope == p.slope && last.offset == p.offset) {
                    last.span.hi = p.span.hi;
                    last.span.hi_closed = p.span.hi_closed;
                    continue;
                }
            }
        }
        pieces_.push_back(std::move(p));
    }
    std::vector<Interval> spans;
    for (const LinearPiece& p : pieces_) spans.push_back(p.span);
    domain_ = IntervalSet::normalize(std::move(spans), universe);
}

PiecewiseLinear PiecewiseLinear::constant(const IntervalSet& domain, Rational value) {
    std::vector<LinearPiece> pieces;
    for (const Interval& c : domain.components()) pieces.push_back({c, Rational(0), value});
    return PiecewiseLinear(std::move(pieces), domain.universe());
}

PiecewiseLinear PiecewiseLinear::line(Interval span, Rational slope, Rational offset,
                                      const Interval& universe) {
    return PiecewiseLinear({{std::move(span), std::move(slope), std::move(offset)}}, universe);
}

Rational PiecewiseLinear::max_abs_slope() const {
    Rational best(0);
    for (const LinearPiece& p : pieces_) {
        Rational a = p.slope < 0 ? -p.slope : p.slope;
        if (a > best) best = a;
    }
    return best;
}

IntervalSet PiecewiseLinear::level_gt(const Rational& t) const {
    std::vector<Interval> comps;
    for (const LinearPiece& p : pieces_) {
        if (p.slope == 0) {
            if (p.offset > t) comps.push_back(p.span);
            continue;
        }
        Rational root = (t - p.offset) / p.slope;
        auto piece = p.slope > 0 ? interval_clip_gt(p.span, root) : interval_clip_lt(p.span, root);
        if (piece) comps.push_back(std::move(*piece));
    }
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

IntervalSet PiecewiseLinear::level_ge(const Rational& t) const {
    std::vector<Interval> comps;
    for (const LinearPiece& p : pieces_) {
        if (p.slope == 0) {
            if (p.offset >= t) comps.push_back(p.span);
            continue;
        }
        Rational root = (t - p.offset) / p.slope;
        auto piece = p.slope > 0 ? interval_clip_ge(p.span, root) : interval_clip_le(p.span, root);
        if (piece) comps.push_back(std::move(*piece));
    }
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

ExtendedRational PiecewiseLinear::eval(const Rational& x) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const LinearPiece& p) { return v < p.span.lo; });
    for (int back = 0; back < 2 && it != pieces_.begin(); ++back) {
        --it;
        if (it->span.contains(x)) return ExtendedRational(it->at(x));
    }
    throw PointOutsideDomain("point " + rat_to_string(x) + " outside piecewise-linear domain");
}

ExtendedRational PiecewiseLinear::sup_on(const IntervalSet& k) const {
    ExtendedRational best = ExtendedRational::minus_inf();
    size_t i = 0, j = 0;
    const auto& kc = k.components();
    while (i < pieces_.size() && j < kc.size()) {
        if (auto iv = interval_intersect(pieces_[i].span, kc[j])) {
            // affine on a bounded interval: the sup is an endpoint limit
            best = er_max(best, ExtendedRational(pieces_[i].at(iv->lo)));
            best = er_max(best, ExtendedRational(pieces_[i].at(iv->hi)));
        }
        if (interval_ends_before(pieces_[i].span, kc[j])) ++i;
        else ++j;
    }
    return best;
}

std::vector<Rational> PiecewiseLinear::breakpoints() const {
    std::vector<Rational> pts;
    for (const LinearPiece& p : pieces_) {
        pts.push_back(p.span.lo);
        pts.push_back(p.span.hi);
    }
    return pts;
}

// --- ReciprocalRamp ---

ReciprocalRamp::ReciprocalRamp(Rational pole, Rational coef, Interval span, const Interval& universe)
    : pole_(std::move(pole)), coef_(std::move(coef)), span_(std::move(span)),
      domain_(IntervalSet::single(span_, universe)) {
    if (coef_ <= 0) throw InputError("reciprocal ramp needs coef > 0");
    if (span_.lo != pole_ || span_.lo_closed || !span_.hi_closed)
        throw InputError("reciprocal ramp domain must be (pole, q]");
}

IntervalSet ReciprocalRamp::level_gt(const Rational& t) const {
    if (t <= 0) return domain_;
    Rational edge = pole_ + coef_ / t;  // f(edge) = t
    if (edge > span_.hi) return domain_;
    return IntervalSet::single(Interval{pole_, edge, false, false}, domain_.universe());
}

IntervalSet ReciprocalRamp::level_ge(const Rational& t) const {
    if (t <= 0) return domain_;
    Rational edge = pole_ + coef_ / t;
    if (edge >= span_.hi) return domain_;
    return IntervalSet::single(Interval{pole_, edge, false, true}, domain_.universe());
}

ExtendedRational ReciprocalRamp::eval(const Rational& x) const {
    if (!span_.contains(x))
        throw PointOutsideDomain("point " + rat_to_string(x) + " outside reciprocal ramp domain");
    return ExtendedRational(coef_ / (x - pole_));
}

ExtendedRational ReciprocalRamp::sup_on(const IntervalSet& k) const {
    if (k.empty()) return ExtendedRational::minus_inf();
    const Rational& lo = k.components().front().lo;
    if (lo == pole_) return ExtendedRational::plus_inf();  // sup as a limit toward the pole
    return ExtendedRational(coef_ / (lo - pole_));
}

std::vector<Rational> ReciprocalRamp::breakpoints() const { return {span_.lo, span_.hi}; }

// --- algebra ---

namespace {

const StepFunction* as_step(const MeasurableFn& f) { return dynamic_cast<const StepFunction*>(&f); }
const PiecewiseLinear* as_pl(const MeasurableFn& f) { return dynamic_cast<const PiecewiseLinear*>(&f); }

void require_same_domain(const MeasurableFn& f, const MeasurableFn& g) {
    if (!(f.domain() == g.domain()))
        throw DomainMismatch("pointwise algebra needs operands with identical domains");
}

using ErOp = std::function<ExtendedRational(const ExtendedRational&, const ExtendedRational&)>;

FnPtr step_combine(const StepFunction& f, const StepFunction& g, const ErOp& op) {
    std::vector<StepPiece> pieces;
    for (const StepPiece& pf : f.pieces())
        for (const StepPiece& pg : g.pieces()) {
            IntervalSet inter = set_intersect(pf.carrier, pg.carrier);
            if (inter.empty()) continue;
            pieces.push_back({std::move(inter), op(pf.value, pg.value)});
        }
    return std::make_shared<StepFunction>(std::move(pieces));
}

enum class PlOp { add, sub, max, min };

void emit_extreme(std::vector<LinearPiece>& out, const Interval& span, const LinearPiece& a,
                  const LinearPiece& b, bool want_max) {
    Rational probe = span.is_singleton() ? span.lo : (span.lo + span.hi) / 2;
    bool pick_a = want_max ? a.at(probe) >= b.at(probe) : a.at(probe) <= b.at(probe);
    const LinearPiece& w = pick_a ? a : b;
    out.push_back({span, w.slope, w.offset});
}

FnPtr pl_combine(const PiecewiseLinear& f, const PiecewiseLinear& g, PlOp op) {
    std::vector<LinearPiece> out;
    const auto& pf = f.pieces();
    const auto& pg = g.pieces();
    size_t i = 0, j = 0;
    while (i < pf.size() && j < pg.size()) {
        if (auto atom = interval_intersect(pf[i].span, pg[j].span)) {
            const LinearPiece& a = pf[i];
            const LinearPiece& b = pg[j];
            if (op == PlOp::add || op == PlOp::sub) {
                Rational s = op == PlOp::add ? a.slope + b.slope : a.slope - b.slope;
                Rational o = op == PlOp::add ? a.offset + b.offset : a.offset - b.offset;
                out.push_back({*atom, std::move(s), std::move(o)});
            } else {
                bool want_max = op == PlOp::max;
                bool split = false;
                if (a.slope != b.slope) {
                    Rational cross = (b.offset - a.offset) / (a.slope - b.slope);
                    if (atom->lo < cross && cross < atom->hi) {
                        Interval left{atom->lo, cross, atom->lo_closed, true};
                        Interval right{cross, atom->hi, false, atom->hi_closed};
                        emit_extreme(out, left, a, b, want_max);
                        emit_extreme(out, right, a, b, want_max);
                        split = true;
                    }
                }
                if (!split) emit_extreme(out, *atom, a, b, want_max);
            }
        }
        if (interval_ends_before(pf[i].span, pg[j].span)) ++i;
        else if (interval_ends_before(pg[j].span, pf[i].span)) ++j;
        else { ++i; ++j; }
    }
    return std::make_shared<PiecewiseLinear>(std::move(out), f.domain().universe());
}

FnPtr combine(const FnPtr& f, const FnPtr& g, const ErOp& er_op, PlOp pl_op) {
    require_same_domain(*f, *g);
    if (const StepFunction* sf = as_step(*f))
        if (const StepFunction* sg = as_step(*g)) return step_combine(*sf, *sg, er_op);
    if (const PiecewiseLinear* lf = as_pl(*f))
        if (const PiecewiseLinear* lg = as_pl(*g)) return pl_combine(*lf, *lg, pl_op);
    throw DomainMismatch("pointwise algebra needs step or piecewise-linear operands of like kind");
}

}  // namespace

FnPtr fn_add(const FnPtr& f, const FnPtr& g) {
    return combine(f, g, [](const ExtendedRational& a, const ExtendedRational& b) { return a + b; },
                   PlOp::add);
}

FnPtr fn_sub(const FnPtr& f, const FnPtr& g) {
    return combine(f, g, [](const ExtendedRational& a, const ExtendedRational& b) { return a - b; },
                   PlOp::sub);
}

FnPtr fn_max(const FnPtr& f, const FnPtr& g) { return combine(f, g, er_max, PlOp::max); }
FnPtr fn_min(const FnPtr& f, const FnPtr& g) { return combine(f, g, er_min, PlOp::min); }

FnPtr fn_scale(const FnPtr& f, const Rational& c) {
    if (const StepFunction* s = as_step(*f)) {
        std::vector<StepPiece> pieces;
        for (const StepPiece& p : s->pieces()) pieces.push_back({p.carrier, p.value.scaled(c)});
        return std::make_shared<StepFunction>(std::move(pieces));
    }
    if (const PiecewiseLinear* l = as_pl(*f)) {
        std::vector<LinearPiece> pieces;
        for (const LinearPiece& p : l->pieces()) pieces.push_back({p.span, p.slope * c, p.offset * c});
        return std::make_shared<PiecewiseLinear>(std::move(pieces), l->domain().universe());
    }
    throw DomainMismatch("fn_scale needs a step or piecewise-linear operand");
}

FnPtr fn_abs(const FnPtr& f) { return fn_max(f, fn_scale(f, Rational(-1))); }

std::pair<FnPtr, FnPtr> pos_neg_decompose(const FnPtr& f) {
    FnPtr zero;
    if (as_step(*f))
        zero = std::make_shared<StepFunction>(StepFunction::constant(f->domain(), ExtendedRational(0)));
    else if (as_pl(*f))
        zero = std::make_shared<PiecewiseLinear>(PiecewiseLinear::constant(f->domain(), Rational(0)));
    else
        throw DomainMismatch("pos_neg_decompose needs a step or piecewise-linear operand");
    return {fn_max(f, zero), fn_max(fn_scale(f, Rational(-1)), zero)};
}

ExtendedRational sup_on(const MeasurableFn& f, const IntervalSet& k) {
    if (!k.subset_of(f.domain()))
        throw DomainMismatch("sup_on needs K inside the function domain");
    return f.sup_on(k);
}

IntervalSet abs_level_gt(const MeasurableFn& f, const Rational& t) {
    if (t < 0) throw InputError("abs_level_gt needs t >= 0");
    return set_union(f.level_gt(t), set_difference(f.domain(), f.level_ge(-t)));
}

IntervalSet abs_level_ge(const MeasurableFn& f, const Rational& t) {
    if (t < 0) throw InputError("abs_level_ge needs t >= 0");
    IntervalSet below = f.level_gt(-t);  // {f > -t}; complement is {f <= -t}
    return set_union(f.level_ge(t), set_difference(f.domain(), below));
}

bool fn_nonneg(const MeasurableFn& f) {
    return set_difference(f.domain(), f.level_ge(0)).empty();
}

std::pair<bool, Rational> is_finite_ae(const MeasurableFn& f) {
    Rational bad = set_union(f.plus_infinity_set(), f.minus_infinity_set()).measure();
    return {bad == 0, std::move(bad)};
}

StepFunction quantize_below(const MeasurableFn& f, const BigInt& cap, int resolution_bits) {
    if (cap < 1 || resolution_bits < 0) throw InputError("quantize_below needs cap >= 1, bits >= 0");
    BigInt cells = cap << resolution_bits;
    if (cells > 20'000'000)
        throw IterationCapExceeded("quantizer would need " + cells.str() + " cells");
    long n = cells.convert_to<long>();
    Rational mesh = pow2_inv(resolution_bits);
    std::vector<StepPiece> pieces;
    IntervalSet prev = f.level_ge(mesh);
    pieces.push_back({set_difference(f.domain(), prev), ExtendedRational(0)});
    for (long j = 1; j < n; ++j) {
        IntervalSet next = f.level_ge(Rational(j + 1) * mesh);
        pieces.push_back({set_difference(prev, next), ExtendedRational(Rational(j) * mesh)});
        prev = std::move(next);
    }
    pieces.push_back({std::move(prev), ExtendedRational(Rational(cap))});
    return StepFunction(std::move(pieces));
}

StepFunction dyadic_simple_approx(const MeasurableFn& f, int n) {
    if (n < 1) throw InputError("dyadic_simple_approx needs n >= 1");
    if (!fn_nonneg(f)) throw NegativeFunction("dyadic approximation needs f >= 0 on its domain");
    return quantize_below(f, BigInt(n), n);
}

std::pair<Rational, Rational> sup_bracket(const MeasurableFn& f, const IntervalSet& k,
                                          const Rational& tol, int cap) {
    if (k.empty()) throw InputError("sup_bracket needs a nonempty set");
    if (tol <= 0) throw InputError("sup_bracket needs tol > 0");
    // any point of k gives a lower bound
    const Interval& c0 = k.components().front();
    Rational probe = c0.lo_closed ? c0.lo : (c0.lo + c0.hi) / 2;
    ExtendedRational v = f.eval(probe);
    if (!v.is_finite()) throw InputError("sup_bracket needs finite values on K");
    Rational lo = v.value();
    Rational hi = lo < 0 ? Rational(1) : lo + 1;
    int spent = 0;
    while (!set_intersect(f.level_gt(hi), k).empty()) {
        hi = hi * 2;
        if (++spent > cap) throw IterationCapExceeded("sup_bracket: no finite upper bound found");
    }
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (set_intersect(f.level_gt(mid), k).empty()) hi = mid;
        else lo = mid;
    }
    return {std::move(lo), std::move(hi)};
}

}  // namespace littlewood
