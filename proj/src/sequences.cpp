#include "littlewood/sequences.hpp"

namespace littlewood {

namespace {

FragmentFn deviation_of(const FnPtr& term, const FnPtr& limit) {
    return FragmentFn::abs_diff(FragmentFn::of(*term), FragmentFn::of(*limit));
}

}  // namespace

PointwiseSequence PointwiseSequence::from_monotone(TermGen terms, FnPtr limit, int check_depth) {
    if (!limit) throw InputError("from_monotone needs a limit");
    if (!FragmentFn::representable(*limit))
        throw DomainMismatch("from_monotone needs a step or piecewise-linear limit");
    IntervalSet domain = limit->domain();
    std::optional<FragmentFn> prev;
    for (int k = 1; k <= check_depth; ++k) {
        FnPtr f = terms(k);
        if (!(f->domain() == domain)) throw DomainMismatch("sequence term domain differs from limit");
        if (!FragmentFn::representable(*f))
            throw DomainMismatch("from_monotone needs step or piecewise-linear terms");
        FragmentFn dev = deviation_of(f, limit);
        if (prev && !FragmentFn::pointwise_ge(*prev, dev))
            throw MonotonicityViolation("|f_" + std::to_string(k - 1) + " - f| < |f_" +
                                        std::to_string(k) + " - f| somewhere");
        prev = std::move(dev);
    }
    FnPtr lim = limit;
    TermGen gen = terms;
    TailFn tail = [gen, lim](int n, const Rational& t) {
        FnPtr f = gen(n);
        if (f.get() == lim.get()) return lim->domain();
        return deviation_of(f, lim).sublevel_lt(t);
    };
    return PointwiseSequence(std::move(terms), std::move(lim), std::move(tail), std::move(domain),
                             Mode::exact, true, true);
}

PointwiseSequence PointwiseSequence::from_envelope(TermGen terms, FnPtr limit, TermGen envelopes) {
    if (!limit) throw InputError("from_envelope needs a limit");
    IntervalSet domain = limit->domain();
    {
        FnPtr e1 = envelopes(1);
        if (!(e1->domain() == domain)) throw DomainMismatch("envelope domain differs from limit");
        if (!FragmentFn::representable(*e1))
            throw DomainMismatch("envelopes must be step or piecewise-linear");
        if (!FragmentFn::of(*e1).nonneg()) throw InputError("envelopes must be non-negative");
    }
    TermGen env = envelopes;
    TailFn tail = [env](int n, const Rational& t) {
        return FragmentFn::of(*env(n)).sublevel_lt(t);
    };
    bool frag = FragmentFn::representable(*limit);
    return PointwiseSequence(std::move(terms), std::move(limit), std::move(tail), std::move(domain),
                             Mode::envelope, false, frag);
}

PointwiseSequence PointwiseSequence::constant(FnPtr f) {
    if (!f) throw InputError("constant sequence needs a function");
    IntervalSet domain = f->domain();
    FnPtr fn = f;
    TermGen gen = [fn](int) { return fn; };
    TailFn tail = [domain](int, const Rational&) { return domain; };
    bool frag = FragmentFn::representable(*f);
    return PointwiseSequence(std::move(gen), std::move(f), std::move(tail), std::move(domain),
                             Mode::exact, true, frag);
}

PointwiseSequence PointwiseSequence::dyadic_tower(FnPtr f, int materialize_cap) {
    if (!f) throw InputError("dyadic_tower needs a function");
    if (!fn_nonneg(*f)) throw NegativeFunction("dyadic_tower needs f >= 0 on its domain");
    IntervalSet domain = f->domain();
    FnPtr base = f;
    TermGen gen = [base, materialize_cap](int n) -> FnPtr {
        if (n < 1) throw InputError("sequence index must be positive");
        if (n > materialize_cap)
            throw IterationCapExceeded("dyadic approximation s_" + std::to_string(n) +
                                       " is past the materialization cap");
        return std::make_shared<StepFunction>(dyadic_simple_approx(*base, n));
    };
    TailFn tail = [base, gen](int n, const Rational& t) {
        if (t <= 0) return IntervalSet::empty(base->domain().universe());
        // On {f < n} the dyadic error stays below 2^-n, so for t > 2^-n the
        // tail is the plain level set {f < n + t}.
        if (t > pow2_inv(n))
            return set_difference(base->domain(), base->level_ge(Rational(n) + t));
        FnPtr s = gen(n);
        const auto* step = dynamic_cast<const StepFunction*>(s.get());
        std::vector<Interval> comps;
        for (const StepPiece& p : step->pieces()) {
            IntervalSet ok = set_intersect(
                p.carrier, set_difference(base->domain(), base->level_ge(p.value.value() + t)));
            comps.insert(comps.end(), ok.components().begin(), ok.components().end());
        }
        return IntervalSet::normalize(std::move(comps), base->domain().universe());
    };
    EvalFn eval = [base](int n, const Rational& x) -> ExtendedRational {
        ExtendedRational v = base->eval(x);
        Rational cap(n);
        if (!v.is_finite()) return ExtendedRational(cap);  // min(n, ...) caps infinities
        Rational quantized = Rational(rat_floor(v.value() * pow2(n))) * pow2_inv(n);
        return ExtendedRational(quantized < cap ? quantized : cap);
    };
    bool frag = FragmentFn::representable(*f);
    return PointwiseSequence(std::move(gen), std::move(f), std::move(tail), std::move(domain),
                             Mode::exact, true, frag, std::move(eval));
}

ExtendedRational PointwiseSequence::term_eval(int n, const Rational& x) const {
    if (n < 1) throw InputError("sequence index must be positive");
    if (eval_) return eval_(n, x);
    return term(n)->eval(x);
}

FnPtr PointwiseSequence::term(int n) const {
    if (n < 1) throw InputError("sequence index must be positive");
    FnPtr f = term_(n);
    if (!f) throw InputError("sequence term generator returned nothing");
    return f;
}

IntervalSet PointwiseSequence::tail_lt(int n, const Rational& t) const {
    if (n < 1) throw InputError("sequence index must be positive");
    if (t <= 0) return IntervalSet::empty(domain_.universe());
    return tail_(n, t);
}

FragmentFn PointwiseSequence::deviation(int n) const {
    if (!fragmentable_)
        throw NotExactMode("deviations are not piecewise-affine representable for this sequence");
    FnPtr f = term(n);
    if (f.get() == limit_.get()) {
        std::vector<Fragment> zero;
        for (const Interval& c : domain_.components()) zero.push_back({c, 0, Rational(0), Rational(0)});
        return FragmentFn(std::move(zero), domain_);
    }
    return deviation_of(f, limit_);
}

// --- families ---

namespace {

PointwiseSequence ramp_spike(const Interval& universe) {
    Interval dom = Interval::closed(0, 1);
    IntervalSet domset = IntervalSet::single(dom, universe);
    // limit: indicator of {1}
    FnPtr limit = std::make_shared<StepFunction>(
        StepFunction::indicator(IntervalSet::single(Interval::point(1), universe), domset));
    TermGen terms = [universe](int k) -> FnPtr {
        // f_k(x) = max(0, 1 - k(1-x)): flat 0 up to 1 - 1/k, then rising to 1
        Rational knee = Rational(1) - Rational(1, k);
        std::vector<LinearPiece> pieces;
        pieces.push_back({Interval{Rational(0), knee, true, true}, Rational(0), Rational(0)});
        pieces.push_back({Interval{knee, Rational(1), false, true}, Rational(k), Rational(1 - k)});
        return std::make_shared<PiecewiseLinear>(std::move(pieces), universe);
    };
    return PointwiseSequence::from_monotone(std::move(terms), std::move(limit));
}

PointwiseSequence x_over_n(const Interval& universe) {
    IntervalSet domset = IntervalSet::single(Interval::closed(0, 1), universe);
    FnPtr limit = std::make_shared<PiecewiseLinear>(PiecewiseLinear::constant(domset, Rational(0)));
    TermGen terms = [universe](int k) -> FnPtr {
        return std::make_shared<PiecewiseLinear>(
            PiecewiseLinear::line(Interval::closed(0, 1), Rational(1, k), Rational(0), universe));
    };
    return PointwiseSequence::from_monotone(std::move(terms), std::move(limit));
}

PointwiseSequence step_decay(const Interval& universe) {
    IntervalSet domset = IntervalSet::single(Interval::closed(0, 1), universe);
    FnPtr limit = std::make_shared<StepFunction>(StepFunction::constant(domset, ExtendedRational(0)));
    TermGen terms = [domset](int k) -> FnPtr {
        return std::make_shared<StepFunction>(StepFunction::constant(domset, ExtendedRational(Rational(1, k))));
    };
    return PointwiseSequence::from_monotone(std::move(terms), std::move(limit));
}

PointwiseSequence shrinking_indicator(const Interval& universe) {
    IntervalSet domset = IntervalSet::single(Interval::closed(0, 1), universe);
    FnPtr limit = std::make_shared<StepFunction>(
        StepFunction::indicator(IntervalSet::single(Interval::point(0), universe), domset));
    TermGen terms = [universe, domset](int k) -> FnPtr {
        IntervalSet carrier = IntervalSet::single(Interval{Rational(0), Rational(1, k), true, false}, universe);
        return std::make_shared<StepFunction>(StepFunction::indicator(carrier, domset));
    };
    // e_n = indicator of (0, 1/n): the exact tail sup of |f_k - limit| over k >= n
    TermGen envelopes = [universe, domset](int n) -> FnPtr {
        IntervalSet carrier = IntervalSet::single(Interval{Rational(0), Rational(1, n), false, false}, universe);
        return std::make_shared<StepFunction>(StepFunction::indicator(carrier, domset));
    };
    return PointwiseSequence::from_envelope(std::move(terms), std::move(limit), std::move(envelopes));
}

}  // namespace

PointwiseSequence make_family(const std::string& name, const Interval& universe) {
    if (name == "ramp_spike") return ramp_spike(universe);
    if (name == "x_over_n") return x_over_n(universe);
    if (name == "step_decay") return step_decay(universe);
    if (name == "shrinking_indicator") return shrinking_indicator(universe);
    throw InputError("unknown sequence family '" + name + "'");
}

}  // namespace littlewood
