#include "littlewood/principles.hpp"

#include <algorithm>

namespace littlewood {

namespace {

void require_positive_eps(const Rational& eps) {
    if (eps <= 0) throw InputError("epsilon must be positive");
}

void require_finite_ae(const MeasurableFn& f) {
    auto [finite, bad] = is_finite_ae(f);
    if (!finite)
        throw NotFiniteAE("function is infinite on a set of measure " + rat_to_string(bad));
}

// Least n with measure{|f| > n} < threshold.
int scan_level_bound(const MeasurableFn& f, const Rational& threshold, int cap) {
    for (int n = 1; n <= cap; ++n)
        if (abs_level_gt(f, Rational(n)).measure() < threshold) return n;
    throw IterationCapExceeded("no level bound below the iteration cap");
}

}  // namespace

BoundednessCert fourth_principle(const MeasurableFn& f, const Rational& eps, int cap) {
    require_positive_eps(eps);
    require_finite_ae(f);
    int bound = scan_level_bound(f, eps / 2, cap);
    IntervalSet tall = abs_level_gt(f, Rational(bound));
    IntervalSet k = closed_subset_within(set_difference(f.domain(), tall), eps / 2);
    Rational loss = f.domain().measure() - k.measure();
    return BoundednessCert{std::move(k), Rational(bound), eps, std::move(loss)};
}

LusinCert lusin_step(const StepFunction& s, const Rational& eps) {
    require_positive_eps(eps);
    if (!s.simple()) throw NotSimple("lusin_step needs a simple function (all values finite)");
    const long n = static_cast<long>(s.pieces().size());
    Rational budget = eps / Rational(n);
    struct Tagged { Interval comp; size_t piece; };
    std::vector<Tagged> parts;
    std::vector<Interval> comps;
    for (size_t j = 0; j < s.pieces().size(); ++j) {
        IntervalSet kj = closed_subset_within(s.pieces()[j].carrier, budget);
        for (const Interval& c : kj.components()) {
            parts.push_back({c, j});
            comps.push_back(c);
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const Tagged& a, const Tagged& b) { return a.comp.lo < b.comp.lo; });
    std::vector<Rational> gaps;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i].piece == parts[i + 1].piece) continue;
        Rational gap = parts[i + 1].comp.lo - parts[i].comp.hi;
        if (gap <= 0) throw Error("lusin_step produced touching distinct-value components");
        gaps.push_back(std::move(gap));
    }
    IntervalSet k = IntervalSet::normalize(std::move(comps), s.domain().universe());
    Rational loss = s.domain().measure() - k.measure();
    return LusinCert{std::move(k), eps, std::move(loss), LusinWitnessExact{std::move(gaps), std::nullopt}};
}

namespace {

bool is_identically_zero(const MeasurableFn& f) {
    return FragmentFn::representable(f) && fn_nonneg(f) &&
           f.sup_on(f.domain()) == ExtendedRational(0);
}

// Non-negative parts to process separately: {f} when f >= 0, else f+ and f-.
std::vector<FnPtr> lusin_parts(const FnPtr& f) {
    if (fn_nonneg(*f)) return {f};
    auto [fp, fm] = pos_neg_decompose(f);
    std::vector<FnPtr> parts;
    if (!is_identically_zero(*fp)) parts.push_back(fp);
    if (!is_identically_zero(*fm)) parts.push_back(fm);
    if (parts.empty()) parts.push_back(f);
    return parts;
}

bool step_equals(const StepFunction& a, const MeasurableFn& f) {
    const auto* b = dynamic_cast<const StepFunction*>(&f);
    if (!b) return false;
    if (a.pieces().size() != b->pieces().size()) return false;
    for (size_t i = 0; i < a.pieces().size(); ++i)
        if (!(a.pieces()[i].value == b->pieces()[i].value &&
              a.pieces()[i].carrier == b->pieces()[i].carrier))
            return false;
    return true;
}

// Shared tail of both Lusin constructions: K0 is a closed set on which the
// part is bounded by cap_bound; shrink a ladder of quantized approximations
// until mesh 2^-accuracy and intersect everything.
IntervalSet lusin_part_core(const FnPtr& part, const BigInt& cap_bound, const IntervalSet& k0,
                            const Rational& ladder_budget, int accuracy) {
    IntervalSet k = k0;
    if (FragmentFn::representable(*part)) {
        // exact separation of the part's own jump points
        IntervalSet ksep = FragmentFn::of(*part).nearly_continuous_subset(ladder_budget / 2);
        k = set_intersect(k, ksep);
    }
    Rational spent(0);
    for (int n = 1; n <= accuracy; ++n) {
        StepFunction sn = quantize_below(*part, cap_bound, n);
        Rational round_budget = ladder_budget * pow2_inv(n + 2);
        k = set_intersect(k, lusin_step(sn, round_budget).K);
        if (step_equals(sn, *part)) break;  // the quantizer is already exact
    }
    return k;
}

std::variant<LusinWitnessExact, LusinWitnessApprox> lusin_witness(const MeasurableFn& f,
                                                                  const IntervalSet& k, int accuracy) {
    switch (f.kind()) {
        case FnKind::step: {
            const auto& sf = dynamic_cast<const StepFunction&>(f);
            struct Tagged { Interval comp; ExtendedRational value; };
            std::vector<Tagged> tagged;
            for (const Interval& c : k.components()) tagged.push_back({c, sf.eval(c.lo)});
            std::vector<Rational> gaps;
            for (size_t i = 0; i + 1 < tagged.size(); ++i) {
                if (tagged[i].value == tagged[i + 1].value) continue;
                Rational gap = tagged[i + 1].comp.lo - tagged[i].comp.hi;
                if (gap <= 0) throw Error("lusin produced touching distinct-value components");
                gaps.push_back(std::move(gap));
            }
            return LusinWitnessExact{std::move(gaps), std::nullopt};
        }
        case FnKind::piecewise_linear: {
            const auto& pf = dynamic_cast<const PiecewiseLinear&>(f);
            return LusinWitnessExact{{}, pf.max_abs_slope()};
        }
        case FnKind::reciprocal_ramp: {
            const auto& rf = dynamic_cast<const ReciprocalRamp&>(f);
            if (k.empty()) return LusinWitnessExact{{}, Rational(0)};
            Rational margin = k.components().front().lo - rf.pole();
            if (margin <= 0) throw Error("lusin kept points at the ramp pole");
            return LusinWitnessExact{{}, rf.coef() / (margin * margin)};
        }
        default:
            return LusinWitnessApprox{accuracy, Rational(2) * pow2_inv(accuracy)};
    }
}

}  // namespace

LusinCert lusin(const FnPtr& f, const Rational& eps, int accuracy, int cap) {
    require_positive_eps(eps);
    if (accuracy < 1) throw InputError("lusin needs accuracy >= 1");
    require_finite_ae(*f);
    std::vector<FnPtr> parts = lusin_parts(f);
    Rational beta = eps / Rational(static_cast<long>(parts.size()));
    std::optional<IntervalSet> k;
    for (const FnPtr& part : parts) {
        // Theorem 5 shape with the full part budget: level cut at beta/2,
        // closed extraction from the rest, ladder within beta/4.
        int bound = scan_level_bound(*part, beta / 2, cap);
        IntervalSet tall = abs_level_gt(*part, Rational(bound));
        IntervalSet k0 = closed_subset_within(set_difference(part->domain(), tall), beta / 8);
        IntervalSet kp = lusin_part_core(part, BigInt(bound), k0, beta / 4, accuracy);
        k = k ? set_intersect(*k, kp) : std::move(kp);
    }
    Rational loss = f->domain().measure() - k->measure();
    if (!(loss < eps)) throw Error("lusin budget accounting failed");
    auto witness = lusin_witness(*f, *k, accuracy);
    return LusinCert{std::move(*k), eps, std::move(loss), std::move(witness)};
}

LusinCert lusin_classical(const FnPtr& f, const Rational& eps, int accuracy, int cap) {
    require_positive_eps(eps);
    if (accuracy < 1) throw InputError("lusin_classical needs accuracy >= 1");
    require_finite_ae(*f);
    std::vector<FnPtr> parts = lusin_parts(f);
    Rational beta = eps / Rational(static_cast<long>(parts.size()));
    std::optional<IntervalSet> k;
    for (const FnPtr& part : parts) {
        // Uniform convergence of the dyadic tower on a closed core via the
        // classical Egoroff construction; s_nu <= nu and |part - s_nu| < 1
        // bound the part by nu + 1 there.
        PointwiseSequence tower = PointwiseSequence::dyadic_tower(part);
        EgoroffCert core = egoroff_classical(tower, beta / 2, 1, cap);
        BigInt bound = BigInt(core.index_table.front()) + 1;
        IntervalSet kp = lusin_part_core(part, bound, core.K, beta / 4, accuracy);
        k = k ? set_intersect(*k, kp) : std::move(kp);
    }
    Rational loss = f->domain().measure() - k->measure();
    if (!(loss < eps)) throw Error("lusin_classical budget accounting failed");
    auto witness = lusin_witness(*f, *k, accuracy);
    return LusinCert{std::move(*k), eps, std::move(loss), std::move(witness)};
}

EgoroffCert egoroff_classical(const PointwiseSequence& seq, const Rational& eps, int ladder, int cap) {
    require_positive_eps(eps);
    if (ladder < 1) throw InputError("egoroff needs ladder >= 1");
    require_finite_ae(*seq.limit());
    const IntervalSet& domain = seq.domain();
    Rational total = domain.measure();
    IntervalSet bad = IntervalSet::empty(domain.universe());
    std::vector<int> table;
    int n = 1;
    for (int m = 1; m <= ladder; ++m) {
        Rational budget = eps * pow2_inv(m + 1);
        Rational target(1, m);
        for (;; ++n) {
            if (n > cap)
                throw IterationCapExceeded("nu(" + std::to_string(m) + ") not found below cap " +
                                           std::to_string(cap));
            IntervalSet tail = seq.tail_lt(n, target);
            if (total - tail.measure() < budget) {
                table.push_back(n);
                bad = set_union(bad, set_difference(domain, tail));
                break;
            }
        }
    }
    IntervalSet k = closed_subset_within(set_difference(domain, bad), eps / 2);
    Rational loss = total - k.measure();
    if (!(loss < eps)) throw Error("egoroff budget accounting failed");
    return EgoroffCert{std::move(k), eps, ladder, std::move(table), EgoroffPath::classical,
                       std::move(loss)};
}

EgoroffCert egoroff_refine(const EgoroffCert& cert, const PointwiseSequence& seq, int new_ladder,
                           int cap) {
    if (cert.path != EgoroffPath::classical)
        throw InputError("refinement is defined for classical certificates");
    if (new_ladder <= cert.ladder) throw InputError("refinement needs a larger ladder");
    EgoroffCert fresh = egoroff_classical(seq, cert.epsilon, new_ladder, cap);
    for (int m = 0; m < cert.ladder; ++m)
        if (fresh.index_table[m] != cert.index_table[m])
            throw Error("refinement changed an existing ladder entry");
    fresh.K = set_intersect(fresh.K, cert.K);
    fresh.loss = seq.domain().measure() - fresh.K.measure();
    if (!(fresh.loss < cert.epsilon)) throw Error("refinement budget accounting failed");
    return fresh;
}

EgoroffCert egoroff_dini(const PointwiseSequence& seq, const Rational& eps, int ladder, int cap) {
    require_positive_eps(eps);
    if (ladder < 1) throw InputError("egoroff needs ladder >= 1");
    if (seq.mode() != PointwiseSequence::Mode::exact)
        throw NotExactMode("the Dini path needs an exact-mode sequence");
    if (!seq.monotone()) throw NonMonotoneSequence("the Dini path needs a monotone sequence");
    if (!seq.fragmentable())
        throw NotExactMode("the Dini path needs piecewise-affine deviations");
    require_finite_ae(*seq.limit());
    const IntervalSet& domain = seq.domain();
    Rational total = domain.measure();

    // step 1: nu with measure{g_nu >= 1} < eps/4, then a closed core inside
    // {g_nu < 1}; the g_n are bounded by 1 there from nu on
    int start = 1;
    IntervalSet base = domain;
    for (;; ++start) {
        if (start > cap) throw IterationCapExceeded("no nearly-bounded tail index below cap");
        IntervalSet tail = seq.tail_lt(start, Rational(1));
        if (total - tail.measure() < eps / 4) {
            base = closed_subset_within(tail, eps / 4);
            break;
        }
    }

    // step 2 + 3: shrink round by round to keep each g_n nearly continuous,
    // scanning Dini indices for the ladder targets along the way
    IntervalSet k = std::move(base);
    std::vector<int> table;
    int m = 1;
    for (int n = start; m <= ladder; ++n) {
        if (n - start > cap) throw IterationCapExceeded("Dini index scan passed the cap");
        FragmentFn dev = seq.deviation(n);
        IntervalSet kn = dev.nearly_continuous_subset(eps * pow2_inv(n - start + 2));
        k = set_intersect(k, kn);
        while (m <= ladder && dev.sup_on(k) < ExtendedRational(Rational(1, m))) {
            table.push_back(n);
            ++m;
        }
    }
    // the scan used intermediate supersets of K; recheck the table on the
    // final set, exactly
    for (int j = 1; j <= ladder; ++j)
        if (!set_difference(k, seq.tail_lt(table[j - 1], Rational(1, j))).empty())
            throw Error("Dini-path ladder recheck failed");
    Rational loss = total - k.measure();
    if (!(loss < eps)) throw Error("egoroff_dini budget accounting failed");
    return EgoroffCert{std::move(k), eps, ladder, std::move(table), EgoroffPath::dini, std::move(loss)};
}

DiniCert dini_index(const PointwiseSequence::TermGen& terms, const FnPtr& limit, const IntervalSet& k,
                    const Rational& eps, DiniAlgorithm algorithm, int cap, bool record_trace) {
    require_positive_eps(eps);
    if (!k.is_closed()) throw InputError("dini_index needs a closed set");
    if (!limit || limit->kind() != FnKind::piecewise_linear)
        throw NotContinuousKind("dini_index needs a piecewise-linear limit");
    if (!k.subset_of(limit->domain())) throw DomainMismatch("K must lie inside the limit domain");
    FragmentFn lim = FragmentFn::of(*limit);
    std::optional<FragmentFn> prev;
    std::vector<IntervalSet> trace;
    for (int n = 1; n <= cap; ++n) {
        FnPtr f = terms(n);
        if (f->kind() != FnKind::piecewise_linear)
            throw NotContinuousKind("dini_index needs piecewise-linear terms");
        FragmentFn dev = FragmentFn::abs_diff(FragmentFn::of(*f), lim);
        if (prev && !FragmentFn::pointwise_ge(*prev, dev))
            throw NonMonotoneSequence("|f - f_n| increased at step " + std::to_string(n));
        bool hit;
        if (algorithm == DiniAlgorithm::sup) {
            hit = dev.sup_on(k) < ExtendedRational(eps);
        } else {
            IntervalSet cover = set_intersect(dev.sublevel_lt(eps), k);
            if (record_trace) trace.push_back(cover);
            hit = cover == k;
        }
        if (hit)
            return DiniCert{k, eps, n,
                            record_trace ? std::optional(std::move(trace)) : std::nullopt};
        prev = std::move(dev);
    }
    throw IterationCapExceeded("no Dini index below cap " + std::to_string(cap));
}

Rational egoroff_converse_check(const IntervalSet& domain,
                                const std::vector<std::pair<IntervalSet, bool>>& family) {
    if (family.empty()) throw InputError("egoroff_converse_check needs a nonempty family");
    IntervalSet covered = IntervalSet::empty(domain.universe());
    for (size_t i = 0; i < family.size(); ++i) {
        const IntervalSet& km = family[i].first;
        long m = static_cast<long>(i) + 1;
        if (!km.is_closed()) throw InputError("K_" + std::to_string(m) + " is not closed");
        if (!km.subset_of(domain)) throw InputMismatch("K_" + std::to_string(m) + " is not inside E");
        Rational slack = domain.measure() - km.measure();
        if (slack > Rational(1, m))
            throw BudgetViolated("measure(E \\ K_" + std::to_string(m) + ") = " +
                                 rat_to_string(slack) + " exceeds 1/" + std::to_string(m));
        covered = set_union(covered, km);
    }
    return set_difference(domain, covered).measure();
}

LusinConverseReport lusin_converse_check(const MeasurableFn& f, const LusinCert& cert,
                                         const std::vector<Rational>& thresholds) {
    if (!cert.exact_witness())
        throw WitnessMissing("lusin_converse_check needs an exact continuity witness");
    Rational outside = set_difference(f.domain(), cert.K).measure();
    LusinConverseReport report;
    for (const Rational& t : thresholds) {
        IntervalSet level = f.level_ge(t);
        LusinConverseRow row{t, set_intersect(level, cert.K).is_closed(),
                             set_difference(level, cert.K).measure() <= outside};
        report.pass = report.pass && row.level_closed && row.bound_holds;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace littlewood
