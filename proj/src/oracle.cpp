#include "littlewood/oracle.hpp"

#include <algorithm>

namespace littlewood {

Rational default_grid_density(const Interval& universe) {
    Rational len = universe.length();
    return len == 0 ? Rational(1) : len * pow2_inv(12);
}

Grid make_grid(const Interval& universe, const Rational& density,
               const std::vector<const MeasurableFn*>& fns,
               const std::vector<const IntervalSet*>& sets) {
    if (density <= 0) throw InputError("grid density must be positive");
    Rational len = universe.length();
    if (len / density > 1'000'000) throw InputError("grid density too fine for this universe");
    std::vector<Rational> pts;
    for (Rational x = universe.lo; x <= universe.hi; x += density) pts.push_back(x);
    pts.push_back(universe.hi);
    Rational half = density / 2;
    auto near_point = [&](const Rational& x) {
        pts.push_back(x);
        if (x - half >= universe.lo) pts.push_back(x - half);
        if (x + half <= universe.hi) pts.push_back(x + half);
    };
    for (const MeasurableFn* f : fns)
        for (const Rational& b : f->breakpoints()) near_point(b);
    for (const IntervalSet* s : sets)
        for (const Interval& c : s->components()) {
            near_point(c.lo);
            near_point(c.hi);
            pts.push_back((c.lo + c.hi) / 2);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return Grid{std::move(pts), density};
}

std::vector<Rational> grid_restrict(const Grid& grid, const IntervalSet& set) {
    std::vector<Rational> out;
    for (const Rational& x : grid.points)
        if (set.contains(x)) out.push_back(x);
    return out;
}

bool VerificationReport::verdict() const {
    for (const CheckResult& c : structural)
        if (!c.pass) return false;
    for (const CheckResult& c : sampled)
        if (!c.pass) return false;
    return true;
}

namespace {

void add(std::vector<CheckResult>& list, std::string name, bool pass, std::string detail = "") {
    list.push_back({std::move(name), pass, std::move(detail)});
}

Rational resolve_density(const VerifyOptions& opts, const Interval& universe) {
    return opts.grid_density ? *opts.grid_density : default_grid_density(universe);
}

void check_kf(VerificationReport& report, const IntervalSet& k, const IntervalSet& domain,
              const Rational& loss, const Rational& eps) {
    add(report.structural, "K_closed", k.is_closed());
    add(report.structural, "K_inside_domain", k.subset_of(domain));
    Rational actual = domain.measure() - k.measure();
    add(report.structural, "loss_recomputed", actual == loss,
        "stated " + rat_to_string(loss) + ", recomputed " + rat_to_string(actual));
    add(report.structural, "loss_below_epsilon", loss < eps,
        rat_to_string(loss) + " vs " + rat_to_string(eps));
}

std::string point_detail(const Rational& x, const ExtendedRational& v) {
    return "worst at x = " + rat_to_string(x) + ", value " + v.to_string();
}

}  // namespace

VerificationReport verify_decomposition(const DecompositionCert& cert, const IntervalSet& set,
                                        const VerifyOptions& opts) {
    VerificationReport report{"decomposition", {}, {}};
    add(report.structural, "K_closed", cert.K.is_closed());
    add(report.structural, "K_inside_E", cert.K.subset_of(set));
    add(report.structural, "union_is_E", set_union(cert.K, cert.F) == set);
    Rational fm = cert.F.measure();
    add(report.structural, "loss_recomputed", fm == cert.loss,
        "stated " + rat_to_string(cert.loss) + ", recomputed " + rat_to_string(fm));
    add(report.structural, "loss_below_epsilon", cert.loss < cert.epsilon);
    Grid grid = make_grid(set.universe(), resolve_density(opts, set.universe()), {},
                          {&set, &cert.K, &cert.F});
    bool agree = true;
    std::string witness;
    for (const Rational& x : grid.points) {
        bool in_e = set.contains(x);
        bool in_parts = cert.K.contains(x) || cert.F.contains(x);
        if (in_e != in_parts) {
            agree = false;
            witness = "membership mismatch at x = " + rat_to_string(x);
            break;
        }
    }
    add(report.sampled, "membership_agreement", agree, witness);
    return report;
}

VerificationReport verify_boundedness(const BoundednessCert& cert, const MeasurableFn& f,
                                      const VerifyOptions& opts) {
    VerificationReport report{"boundedness", {}, {}};
    check_kf(report, cert.K, f.domain(), cert.loss, cert.epsilon);
    IntervalSet over = set_intersect(abs_level_gt(f, cert.bound), cert.K);
    add(report.structural, "level_set_clear", over.empty(),
        over.empty() ? "" : "points above the bound: " + over.to_string());
    Grid grid = make_grid(f.domain().universe(), resolve_density(opts, f.domain().universe()), {&f},
                          {&cert.K});
    bool ok = true;
    std::string witness;
    ExtendedRational bound{cert.bound};
    for (const Rational& x : grid_restrict(grid, cert.K)) {
        ExtendedRational v = f.eval(x).abs();
        if (v > bound) {
            ok = false;
            witness = point_detail(x, v);
            break;
        }
    }
    add(report.sampled, "abs_bounded_on_grid", ok, witness);
    return report;
}

VerificationReport verify_egoroff(const EgoroffCert& cert, const PointwiseSequence& seq,
                                  const VerifyOptions& opts) {
    VerificationReport report{"egoroff", {}, {}};
    const IntervalSet& domain = seq.domain();
    check_kf(report, cert.K, domain, cert.loss, cert.epsilon);
    add(report.structural, "ladder_size",
        cert.index_table.size() == static_cast<size_t>(cert.ladder));
    if (cert.index_table.size() != static_cast<size_t>(cert.ladder)) return report;
    for (int m = 1; m <= cert.ladder; ++m) {
        int nu = cert.index_table[m - 1];
        IntervalSet tail = seq.tail_lt(nu, Rational(1, m));
        add(report.structural, "K_inside_tail_m" + std::to_string(m),
            set_difference(cert.K, tail).empty());
        if (cert.path == EgoroffPath::classical) {
            Rational slack = domain.measure() - tail.measure();
            Rational budget = cert.epsilon * pow2_inv(m + 1);
            add(report.structural, "tail_budget_m" + std::to_string(m), slack < budget,
                rat_to_string(slack) + " vs " + rat_to_string(budget));
        }
    }
    FnPtr limit = seq.limit();
    Grid grid = make_grid(domain.universe(), resolve_density(opts, domain.universe()),
                          {limit.get()}, {&cert.K, &domain});
    std::vector<Rational> pts = grid_restrict(grid, cert.K);
    for (int m = 1; m <= cert.ladder; ++m) {
        int nu = cert.index_table[m - 1];
        Rational target(1, m);
        bool ok = true;
        std::string witness;
        for (int n = nu; n <= nu + opts.depth && ok; ++n) {
            for (const Rational& x : pts) {
                ExtendedRational d = (seq.term_eval(n, x) - limit->eval(x)).abs();
                if (!(d < ExtendedRational(target))) {
                    ok = false;
                    witness = "n = " + std::to_string(n) + ", " + point_detail(x, d);
                    break;
                }
            }
        }
        add(report.sampled, "uniform_bound_m" + std::to_string(m), ok, witness);
    }
    return report;
}

namespace {

// Recompute the adjacent distinct-value gaps of a step function on K.
std::optional<std::vector<Rational>> step_gaps(const StepFunction& f, const IntervalSet& k) {
    if (!FragmentFn::of(f).continuous_on(k)) return std::nullopt;
    std::vector<Rational> gaps;
    const auto& comps = k.components();
    for (size_t i = 0; i + 1 < comps.size(); ++i) {
        if (f.eval(comps[i].lo) == f.eval(comps[i + 1].lo)) continue;
        gaps.push_back(comps[i + 1].lo - comps[i].hi);
    }
    return gaps;
}

// The two reproducible bound derivations behind a finite-accuracy witness.
std::vector<BigInt> witness_bound_candidates(const FnPtr& f, const Rational& eps, int cap) {
    std::vector<BigInt> out;
    Rational threshold = eps / 2;
    for (int n = 1; n <= cap; ++n)
        if (abs_level_gt(*f, Rational(n)).measure() < threshold) {
            out.push_back(BigInt(n));
            break;
        }
    try {
        PointwiseSequence tower = PointwiseSequence::dyadic_tower(f);
        EgoroffCert core = egoroff_classical(tower, eps / 2, 1, cap);
        BigInt b = BigInt(core.index_table.front()) + 1;
        if (out.empty() || out.front() != b) out.push_back(b);
    } catch (const Error&) {
        // the classical derivation may be unavailable; the primary one remains
    }
    return out;
}

}  // namespace

VerificationReport verify_lusin(const LusinCert& cert, const FnPtr& f, const VerifyOptions& opts) {
    VerificationReport report{"lusin", {}, {}};
    check_kf(report, cert.K, f->domain(), cert.loss, cert.epsilon);
    Grid grid = make_grid(f->domain().universe(), resolve_density(opts, f->domain().universe()),
                          {f.get()}, {&cert.K});
    if (cert.exact_witness()) {
        const auto& w = std::get<LusinWitnessExact>(cert.witness);
        switch (f->kind()) {
            case FnKind::step: {
                auto gaps = step_gaps(dynamic_cast<const StepFunction&>(*f), cert.K);
                add(report.structural, "restriction_continuous", gaps.has_value());
                bool positive = gaps.has_value();
                if (gaps)
                    for (const Rational& g : *gaps) positive = positive && g > 0;
                add(report.structural, "gaps_positive", positive);
                add(report.structural, "gaps_match", gaps.has_value() && *gaps == w.gaps);
                break;
            }
            case FnKind::piecewise_linear: {
                const auto& pf = dynamic_cast<const PiecewiseLinear&>(*f);
                add(report.structural, "lipschitz_valid",
                    w.lipschitz.has_value() && *w.lipschitz >= pf.max_abs_slope());
                break;
            }
            case FnKind::reciprocal_ramp: {
                const auto& rf = dynamic_cast<const ReciprocalRamp&>(*f);
                if (cert.K.empty()) {
                    add(report.structural, "lipschitz_valid", w.lipschitz.has_value());
                    break;
                }
                Rational margin = cert.K.components().front().lo - rf.pole();
                add(report.structural, "pole_margin_positive", margin > 0);
                add(report.structural, "lipschitz_valid",
                    margin > 0 && w.lipschitz.has_value() &&
                        *w.lipschitz >= rf.coef() / (margin * margin));
                break;
            }
            default:
                add(report.structural, "witness_kind_supported", false,
                    "exact witness on an opaque function kind");
        }
        if (w.lipschitz) {
            // modulus spot check on consecutive grid points inside one component
            bool ok = true;
            std::string witness;
            std::vector<Rational> pts = grid_restrict(grid, cert.K);
            for (size_t i = 0; ok && i + 1 < pts.size(); ++i) {
                const Rational &x = pts[i], &y = pts[i + 1];
                bool same_comp = false;
                for (const Interval& c : cert.K.components())
                    if (c.contains(x) && c.contains(y)) { same_comp = true; break; }
                if (!same_comp) continue;
                ExtendedRational dv = (f->eval(y) - f->eval(x)).abs();
                if (!(dv <= ExtendedRational(*w.lipschitz * (y - x)))) {
                    ok = false;
                    witness = "pair (" + rat_to_string(x) + ", " + rat_to_string(y) + ")";
                }
            }
            add(report.sampled, "modulus_on_grid", ok, witness);
        }
    } else {
        const auto& w = std::get<LusinWitnessApprox>(cert.witness);
        add(report.structural, "oscillation_bound_matches",
            w.accuracy >= 1 && w.oscillation_bound == Rational(2) * pow2_inv(w.accuracy));
        add(report.structural, "function_nonneg", fn_nonneg(*f),
            "finite-accuracy witnesses are emitted for non-negative oracles");
        bool found = false;
        std::string detail;
        if (fn_nonneg(*f) && w.accuracy >= 1) {
            std::vector<Rational> pts = grid_restrict(grid, cert.K);
            for (const BigInt& bound : witness_bound_candidates(f, cert.epsilon, kDefaultCap)) {
                StepFunction s = quantize_below(*f, bound, w.accuracy);
                if (!FragmentFn::of(s).continuous_on(cert.K)) continue;
                bool close = true;
                for (const Rational& x : pts) {
                    ExtendedRational d = (f->eval(x) - s.eval(x)).abs();
                    if (!(d <= ExtendedRational(w.oscillation_bound))) { close = false; break; }
                }
                if (close) {
                    found = true;
                    detail = "cap " + bound.str() + ", mesh 2^-" + std::to_string(w.accuracy);
                    break;
                }
            }
        }
        add(report.sampled, "continuous_approximant_found", found, detail);
    }
    return report;
}

VerificationReport verify_dini(const DiniCert& cert, const PointwiseSequence::TermGen& terms,
                               const FnPtr& limit, const VerifyOptions& opts) {
    VerificationReport report{"dini", {}, {}};
    add(report.structural, "K_closed", cert.K.is_closed());
    add(report.structural, "index_positive", cert.index >= 1);
    FragmentFn lim = FragmentFn::of(*limit);
    auto dev = [&](int n) { return FragmentFn::abs_diff(FragmentFn::of(*terms(n)), lim); };
    ExtendedRational at_index = dev(cert.index).sup_on(cert.K);
    add(report.structural, "sup_below_eps", at_index < ExtendedRational(cert.epsilon),
        "sup = " + at_index.to_string());
    if (cert.index > 1) {
        ExtendedRational before = dev(cert.index - 1).sup_on(cert.K);
        add(report.structural, "index_minimal", !(before < ExtendedRational(cert.epsilon)),
            "sup at index-1 = " + before.to_string());
    }
    if (cert.cover_trace) {
        const auto& trace = *cert.cover_trace;
        bool ok = trace.size() == static_cast<size_t>(cert.index);
        for (size_t i = 0; ok && i < trace.size(); ++i) {
            IntervalSet expect = set_intersect(dev(static_cast<int>(i) + 1).sublevel_lt(cert.epsilon),
                                               cert.K);
            ok = trace[i] == expect;
            if (i + 1 == trace.size()) ok = ok && trace[i] == cert.K;
        }
        add(report.structural, "cover_trace_consistent", ok);
    }
    Grid grid = make_grid(limit->domain().universe(),
                          resolve_density(opts, limit->domain().universe()),
                          {limit.get(), terms(cert.index).get()}, {&cert.K});
    bool ok = true;
    std::string witness;
    FnPtr at = terms(cert.index);
    for (const Rational& x : grid_restrict(grid, cert.K)) {
        ExtendedRational d = (at->eval(x) - limit->eval(x)).abs();
        if (!(d < ExtendedRational(cert.epsilon))) {
            ok = false;
            witness = point_detail(x, d);
            break;
        }
    }
    add(report.sampled, "pointwise_below_eps_on_grid", ok, witness);
    return report;
}

int brute_force_min_index(const PointwiseSequence::TermGen& terms, const FnPtr& limit,
                          const IntervalSet& k, const Rational& eps, int n_max,
                          const std::optional<Rational>& grid_density) {
    const Interval& universe = limit->domain().universe();
    Rational density = grid_density ? *grid_density : default_grid_density(universe);
    Grid base = make_grid(universe, density, {limit.get()}, {&k});
    ExtendedRational bound{eps};
    for (int n = 1; n <= n_max; ++n) {
        FnPtr f = terms(n);
        Grid grid = make_grid(universe, density, {limit.get(), f.get()}, {&k});
        bool ok = true;
        for (const Rational& x : grid_restrict(grid, k)) {
            if (!((f->eval(x) - limit->eval(x)).abs() < bound)) {
                ok = false;
                break;
            }
        }
        if (ok) return n;
    }
    throw NotFound("no index below " + std::to_string(n_max) + " on the verification grid");
}

// --- mutation catalogue ---

namespace {

// A closed chunk strictly inside the largest component of domain \ k.
std::optional<IntervalSet> closed_chunk_outside(const IntervalSet& k, const IntervalSet& domain) {
    IntervalSet rest = set_difference(domain, k);
    if (rest.empty()) return std::nullopt;
    const Interval* best = &rest.components().front();
    for (const Interval& c : rest.components())
        if (c.length() > best->length()) best = &c;
    IntervalSet single = IntervalSet::single(*best, domain.universe());
    if (best->length() == 0) return single;  // an isolated closed point
    return closed_subset_within(single, best->length() / 2);
}

}  // namespace

std::vector<MutationOutcome> mutation_suite(const DecompositionCert& cert, const IntervalSet& set,
                                            const VerifyOptions& opts) {
    std::vector<MutationOutcome> out;
    {
        DecompositionCert swapped{cert.F, cert.K, cert.epsilon, cert.K.measure()};
        VerificationReport r = verify_decomposition(swapped, set, opts);
        out.push_back({"swap_k_f", !r.verdict(), std::move(r)});
    }
    if (!cert.F.empty()) {
        std::vector<Interval> comps = cert.F.components();
        size_t drop = 0;
        for (size_t i = 1; i < comps.size(); ++i)
            if (comps[i].length() > comps[drop].length()) drop = i;
        comps.erase(comps.begin() + static_cast<long>(drop));
        IntervalSet f2 = IntervalSet::normalize(std::move(comps), cert.F.universe());
        DecompositionCert cut{cert.K, f2, cert.epsilon, f2.measure()};
        VerificationReport r = verify_decomposition(cut, set, opts);
        out.push_back({"drop_f_component", !r.verdict(), std::move(r)});
    }
    return out;
}

std::vector<MutationOutcome> mutation_suite(const BoundednessCert& cert, const MeasurableFn& f,
                                            const VerifyOptions& opts) {
    std::vector<MutationOutcome> out;
    if (cert.bound >= 1) {
        BoundednessCert low{cert.K, cert.bound - 1, cert.epsilon, cert.loss};
        VerificationReport r = verify_boundedness(low, f, opts);
        out.push_back({"decrement_bound", !r.verdict(), std::move(r)});
    }
    if (auto chunk = closed_chunk_outside(cert.K, f.domain())) {
        IntervalSet grown = set_union(cert.K, *chunk);
        BoundednessCert big{grown, cert.bound, cert.epsilon, f.domain().measure() - grown.measure()};
        VerificationReport r = verify_boundedness(big, f, opts);
        out.push_back({"grow_k", !r.verdict(), std::move(r)});
    }
    return out;
}

std::vector<MutationOutcome> mutation_suite(const EgoroffCert& cert, const PointwiseSequence& seq,
                                            const VerifyOptions& opts) {
    std::vector<MutationOutcome> out;
    if (auto chunk = closed_chunk_outside(cert.K, seq.domain())) {
        EgoroffCert big = cert;
        big.K = set_union(cert.K, *chunk);
        big.loss = seq.domain().measure() - big.K.measure();
        VerificationReport r = verify_egoroff(big, seq, opts);
        out.push_back({"grow_k", !r.verdict(), std::move(r)});
    }
    for (int m = cert.ladder; m >= 1; --m) {
        if (cert.index_table[m - 1] <= 1) continue;
        EgoroffCert early = cert;
        early.index_table[m - 1] -= 1;
        VerificationReport r = verify_egoroff(early, seq, opts);
        out.push_back({"decrement_nu_m" + std::to_string(m), !r.verdict(), std::move(r)});
        break;
    }
    {
        EgoroffCert claim = cert;
        claim.ladder += 1;
        claim.index_table.push_back(cert.index_table.back());
        VerificationReport r = verify_egoroff(claim, seq, opts);
        out.push_back({"raise_accuracy_claim", !r.verdict(), std::move(r)});
    }
    return out;
}

std::vector<MutationOutcome> mutation_suite(const LusinCert& cert, const FnPtr& f,
                                            const VerifyOptions& opts) {
    std::vector<MutationOutcome> out;
    if (cert.exact_witness()) {
        const auto& w = std::get<LusinWitnessExact>(cert.witness);
        if (!w.gaps.empty()) {
            // close the first recorded gap: extend a component to touch its neighbor
            const auto& comps = cert.K.components();
            const auto* sf = dynamic_cast<const StepFunction*>(f.get());
            for (size_t i = 0; sf && i + 1 < comps.size(); ++i) {
                if (sf->eval(comps[i].lo) == sf->eval(comps[i + 1].lo)) continue;
                std::vector<Interval> mutated = comps;
                mutated[i].hi = comps[i + 1].lo;
                mutated[i].hi_closed = true;
                LusinCert merged = cert;
                merged.K = IntervalSet::normalize(std::move(mutated), cert.K.universe());
                merged.loss = f->domain().measure() - merged.K.measure();
                VerificationReport r = verify_lusin(merged, f, opts);
                out.push_back({"merge_gap", !r.verdict(), std::move(r)});
                break;
            }
            LusinCert dropped = cert;
            auto& wd = std::get<LusinWitnessExact>(dropped.witness);
            wd.gaps.pop_back();
            VerificationReport r = verify_lusin(dropped, f, opts);
            out.push_back({"drop_gap", !r.verdict(), std::move(r)});
        }
        if (w.lipschitz && *w.lipschitz > 0) {
            LusinCert tight = cert;
            std::get<LusinWitnessExact>(tight.witness).lipschitz = *w.lipschitz / 2;
            VerificationReport r = verify_lusin(tight, f, opts);
            out.push_back({"shrink_lipschitz", !r.verdict(), std::move(r)});
        }
        if (f->kind() == FnKind::reciprocal_ramp) {
            if (auto chunk = closed_chunk_outside(cert.K, f->domain())) {
                LusinCert big = cert;
                big.K = set_union(cert.K, *chunk);
                big.loss = f->domain().measure() - big.K.measure();
                VerificationReport r = verify_lusin(big, f, opts);
                out.push_back({"grow_k", !r.verdict(), std::move(r)});
            }
        }
    } else {
        LusinCert tight = cert;
        auto& w = std::get<LusinWitnessApprox>(tight.witness);
        w.oscillation_bound = w.oscillation_bound / 2;
        VerificationReport r = verify_lusin(tight, f, opts);
        out.push_back({"tighten_oscillation", !r.verdict(), std::move(r)});
    }
    return out;
}

std::vector<MutationOutcome> mutation_suite(const DiniCert& cert,
                                            const PointwiseSequence::TermGen& terms,
                                            const FnPtr& limit, const VerifyOptions& opts) {
    std::vector<MutationOutcome> out;
    if (cert.index > 1) {
        DiniCert early = cert;
        early.index -= 1;
        early.cover_trace.reset();
        VerificationReport r = verify_dini(early, terms, limit, opts);
        out.push_back({"decrement_index", !r.verdict(), std::move(r)});
    }
    return out;
}

}  // namespace littlewood
