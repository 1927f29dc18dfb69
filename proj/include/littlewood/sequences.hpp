#pragma once

#include <functional>

#include "littlewood/fragments.hpp"

namespace littlewood {

// An indexed family of measurable functions converging pointwise to a limit,
// together with a sound tail oracle: tail_lt(n, t) under-approximates (and in
// exact mode equals) the set where sup_{k>=n} |f_k - f| stays below t.
class PointwiseSequence {
public:
    enum class Mode { exact, envelope };
    using TermGen = std::function<FnPtr(int)>;

    // Exact mode for |term(k) - limit| pointwise non-increasing in k. The
    // monotone contract is verified exactly up to check_depth and declared by
    // the caller beyond it.
    static PointwiseSequence from_monotone(TermGen terms, FnPtr limit, int check_depth = 64);

    // Envelope mode: e_n >= |term(k) - limit| for all k >= n (caller contract)
    // and e_n -> 0 pointwise; tail_lt(n, t) = {e_n < t}.
    static PointwiseSequence from_envelope(TermGen terms, FnPtr limit, TermGen envelopes);

    static PointwiseSequence constant(FnPtr f);

    // The increasing dyadic approximations s_n of a non-negative f, with their
    // exact tails computed through the level sets of f alone. Terms above
    // materialize_cap cannot be materialized (their piece count explodes), but
    // tails with t > 2^-n never need them.
    static PointwiseSequence dyadic_tower(FnPtr f, int materialize_cap = 14);

    FnPtr term(int n) const;
    const FnPtr& limit() const { return limit_; }
    const IntervalSet& domain() const { return domain_; }
    Mode mode() const { return mode_; }
    bool monotone() const { return monotone_; }
    bool fragmentable() const { return fragmentable_; }

    IntervalSet tail_lt(int n, const Rational& t) const;

    // term(n) evaluated at a point; works for every n even when the term
    // itself cannot be materialized (dyadic towers past the cap).
    ExtendedRational term_eval(int n, const Rational& x) const;

    // |term(n) - limit| as fragments; needs fragmentable().
    FragmentFn deviation(int n) const;

private:
    using TailFn = std::function<IntervalSet(int, const Rational&)>;
    using EvalFn = std::function<ExtendedRational(int, const Rational&)>;

    PointwiseSequence(TermGen term, FnPtr limit, TailFn tail, IntervalSet domain, Mode mode,
                      bool monotone, bool fragmentable, EvalFn eval = nullptr)
        : term_(std::move(term)), limit_(std::move(limit)), tail_(std::move(tail)),
          domain_(std::move(domain)), mode_(mode), monotone_(monotone), fragmentable_(fragmentable),
          eval_(std::move(eval)) {}

    TermGen term_;
    FnPtr limit_;
    TailFn tail_;
    IntervalSet domain_;
    Mode mode_;
    bool monotone_;
    bool fragmentable_;
    EvalFn eval_;
};

// Named sequence families for scenario files and the built-in corpus.
// All live on the universe [0,1] unless stated otherwise:
//   ramp_spike          f_k(x) = max(0, 1 - k(1-x)), limit = indicator of {1}
//   x_over_n            f_k(x) = x/k, limit = 0
//   step_decay          f_k = (1/k) on [0,1], limit = 0
//   shrinking_indicator f_k = indicator of [0,1/k), limit = indicator of {0},
//                       envelope mode with e_n = indicator of (0,1/n)
PointwiseSequence make_family(const std::string& name, const Interval& universe);

}  // namespace littlewood
