#include "littlewood/fragments.hpp"

#include <algorithm>

namespace littlewood {

ExtendedRational Fragment::at(const Rational& x) const {
    if (inf_sign > 0) return ExtendedRational::plus_inf();
    if (inf_sign < 0) return ExtendedRational::minus_inf();
    return ExtendedRational(slope * x + offset);
}

FragmentFn::FragmentFn(std::vector<Fragment> fragments, IntervalSet domain)
    : fragments_(std::move(fragments)), domain_(std::move(domain)) {
    std::sort(fragments_.begin(), fragments_.end(),
              [](const Fragment& a, const Fragment& b) { return a.span.lo < b.span.lo; });
}

bool FragmentFn::representable(const MeasurableFn& f) {
    return f.kind() == FnKind::step || f.kind() == FnKind::piecewise_linear;
}

FragmentFn FragmentFn::of(const MeasurableFn& f) {
    std::vector<Fragment> frags;
    if (const auto* s = dynamic_cast<const StepFunction*>(&f)) {
        for (const StepPiece& p : s->pieces())
            for (const Interval& c : p.carrier.components()) {
                if (p.value.is_finite())
                    frags.push_back({c, 0, Rational(0), p.value.value()});
                else
                    frags.push_back({c, p.value.is_plus_inf() ? 1 : -1, Rational(0), Rational(0)});
            }
    } else if (const auto* l = dynamic_cast<const PiecewiseLinear*>(&f)) {
        for (const LinearPiece& p : l->pieces()) frags.push_back({p.span, 0, p.slope, p.offset});
    } else {
        throw DomainMismatch("function is not piecewise-affine representable");
    }
    return FragmentFn(std::move(frags), f.domain());
}

FragmentFn FragmentFn::diff(const FragmentFn& a, const FragmentFn& b) {
    if (!(a.domain_ == b.domain_)) throw DomainMismatch("fragment difference needs identical domains");
    std::vector<Fragment> out;
    size_t i = 0, j = 0;
    const auto& fa = a.fragments_;
    const auto& fb = b.fragments_;
    while (i < fa.size() && j < fb.size()) {
        if (auto atom = interval_intersect(fa[i].span, fb[j].span)) {
            const Fragment& x = fa[i];
            const Fragment& y = fb[j];
            if (x.inf_sign != 0 || y.inf_sign != 0) {
                int sign = x.inf_sign != 0 ? x.inf_sign : -y.inf_sign;
                if (x.inf_sign != 0 && y.inf_sign != 0 && x.inf_sign == y.inf_sign)
                    throw UndefinedInfinityArithmetic("inf - inf in fragment difference");
                out.push_back({*atom, sign, Rational(0), Rational(0)});
            } else {
                out.push_back({*atom, 0, x.slope - y.slope, x.offset - y.offset});
            }
        }
        if (interval_ends_before(fa[i].span, fb[j].span)) ++i;
        else if (interval_ends_before(fb[j].span, fa[i].span)) ++j;
        else { ++i; ++j; }
    }
    return FragmentFn(std::move(out), a.domain_);
}

FragmentFn FragmentFn::abs() const {
    std::vector<Fragment> out;
    for (const Fragment& f : fragments_) {
        if (f.inf_sign != 0) {
            out.push_back({f.span, 1, Rational(0), Rational(0)});
            continue;
        }
        if (f.slope == 0) {
            out.push_back({f.span, 0, Rational(0), f.offset < 0 ? -f.offset : f.offset});
            continue;
        }
        Rational root = -f.offset / f.slope;
        if (f.span.lo < root && root < f.span.hi) {
            Interval left{f.span.lo, root, f.span.lo_closed, true};
            Interval right{root, f.span.hi, false, f.span.hi_closed};
            bool left_neg = f.slope > 0;  // increasing line is negative left of its root
            out.push_back({left, 0, left_neg ? -f.slope : f.slope, left_neg ? -f.offset : f.offset});
            out.push_back({right, 0, left_neg ? f.slope : -f.slope, left_neg ? f.offset : -f.offset});
        } else {
            Rational probe = f.span.is_singleton() ? f.span.lo : (f.span.lo + f.span.hi) / 2;
            bool neg = f.slope * probe + f.offset < 0;
            out.push_back({f.span, 0, neg ? -f.slope : f.slope, neg ? -f.offset : f.offset});
        }
    }
    return FragmentFn(std::move(out), domain_);
}

FragmentFn FragmentFn::abs_diff(const FragmentFn& a, const FragmentFn& b) { return diff(a, b).abs(); }

bool FragmentFn::pointwise_ge(const FragmentFn& a, const FragmentFn& b) {
    FragmentFn d = diff(a, b);
    for (const Fragment& f : d.fragments_) {
        if (f.inf_sign > 0) continue;
        if (f.inf_sign < 0) return false;
        // an affine function on a bounded span is bounded by its endpoint values
        if (f.slope * f.span.lo + f.offset < 0) return false;
        if (f.slope * f.span.hi + f.offset < 0) return false;
    }
    return true;
}

IntervalSet FragmentFn::sublevel_lt(const Rational& t) const {
    std::vector<Interval> comps;
    for (const Fragment& f : fragments_) {
        if (f.inf_sign > 0) continue;
        if (f.inf_sign < 0) { comps.push_back(f.span); continue; }
        if (f.slope == 0) {
            if (f.offset < t) comps.push_back(f.span);
            continue;
        }
        Rational root = (t - f.offset) / f.slope;
        auto piece = f.slope > 0 ? interval_clip_lt(f.span, root) : interval_clip_gt(f.span, root);
        if (piece) comps.push_back(std::move(*piece));
    }
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

IntervalSet FragmentFn::sublevel_le(const Rational& t) const {
    std::vector<Interval> comps;
    for (const Fragment& f : fragments_) {
        if (f.inf_sign > 0) continue;
        if (f.inf_sign < 0) { comps.push_back(f.span); continue; }
        if (f.slope == 0) {
            if (f.offset <= t) comps.push_back(f.span);
            continue;
        }
        Rational root = (t - f.offset) / f.slope;
        auto piece = f.slope > 0 ? interval_clip_le(f.span, root) : interval_clip_ge(f.span, root);
        if (piece) comps.push_back(std::move(*piece));
    }
    return IntervalSet::normalize(std::move(comps), domain_.universe());
}

ExtendedRational FragmentFn::sup_on(const IntervalSet& k) const {
    ExtendedRational best = ExtendedRational::minus_inf();
    size_t i = 0, j = 0;
    const auto& kc = k.components();
    while (i < fragments_.size() && j < kc.size()) {
        if (auto iv = interval_intersect(fragments_[i].span, kc[j])) {
            const Fragment& f = fragments_[i];
            if (f.inf_sign > 0) return ExtendedRational::plus_inf();
            if (f.inf_sign == 0) {
                best = er_max(best, ExtendedRational(f.slope * iv->lo + f.offset));
                best = er_max(best, ExtendedRational(f.slope * iv->hi + f.offset));
            }
        }
        if (interval_ends_before(fragments_[i].span, kc[j])) ++i;
        else ++j;
    }
    return best;
}

ExtendedRational FragmentFn::eval(const Rational& x) const {
    auto it = std::upper_bound(fragments_.begin(), fragments_.end(), x,
                               [](const Rational& v, const Fragment& f) { return v < f.span.lo; });
    for (int back = 0; back < 2 && it != fragments_.begin(); ++back) {
        --it;
        if (it->span.contains(x)) return it->at(x);
    }
    throw PointOutsideDomain("point " + rat_to_string(x) + " outside fragment domain");
}

bool FragmentFn::nonneg() const {
    for (const Fragment& f : fragments_) {
        if (f.inf_sign > 0) continue;
        if (f.inf_sign < 0) return false;
        if (f.slope * f.span.lo + f.offset < 0) return false;
        if (f.slope * f.span.hi + f.offset < 0) return false;
    }
    return true;
}

bool FragmentFn::continuous_on(const IntervalSet& k) const {
    for (size_t i = 0; i < fragments_.size(); ++i) {
        const Fragment& f = fragments_[i];
        if (f.inf_sign != 0 && !set_intersect(IntervalSet::single(f.span, domain_.universe()), k).empty())
            return false;
        if (i + 1 == fragments_.size()) continue;
        const Fragment& g = fragments_[i + 1];
        if (f.span.hi != g.span.lo) continue;  // positive gap: separate components
        const Rational& b = f.span.hi;
        // a junction matters only when K approaches it from both sides, which
        // for a canonical set means b is interior to one of its components
        const auto& kc = k.components();
        auto it = std::upper_bound(kc.begin(), kc.end(), b,
                                   [](const Rational& v, const Interval& c) { return v < c.lo; });
        bool interior = it != kc.begin() && std::prev(it)->lo < b && b < std::prev(it)->hi;
        if (!interior) continue;
        if (f.inf_sign != 0 || g.inf_sign != 0) return false;
        if (f.at(b) != g.at(b)) return false;
    }
    return true;
}

IntervalSet FragmentFn::nearly_continuous_subset(const Rational& budget) const {
    if (budget <= 0) throw InputError("nearly_continuous_subset needs budget > 0");
    if (fragments_.empty()) return IntervalSet::empty(domain_.universe());
    // junction i/i+1 is safe when the two affine values agree there
    std::vector<bool> safe_after(fragments_.size(), false);
    for (size_t i = 0; i + 1 < fragments_.size(); ++i) {
        const Fragment& f = fragments_[i];
        const Fragment& g = fragments_[i + 1];
        safe_after[i] = f.span.hi == g.span.lo && f.inf_sign == 0 && g.inf_sign == 0 &&
                        f.at(f.span.hi) == g.at(f.span.hi);
    }
    Rational delta = budget / Rational(4 * static_cast<long>(fragments_.size()));
    std::vector<Interval> out;
    for (size_t i = 0; i < fragments_.size(); ++i) {
        const Fragment& f = fragments_[i];
        if (f.inf_sign != 0) {
            if (f.span.length() > 0)
                throw NotFiniteAE("infinite fragment of positive measure");
            continue;  // drop measure-zero infinities
        }
        bool lo_safe = f.span.lo_closed || (i > 0 && safe_after[i - 1]);
        bool hi_safe = f.span.hi_closed || (i + 1 < fragments_.size() && safe_after[i]);
        if (lo_safe && hi_safe) {
            out.push_back(Interval::closed(f.span.lo, f.span.hi));
            continue;
        }
        if (f.span.length() <= 2 * delta) {
            out.push_back(Interval::point((f.span.lo + f.span.hi) / 2));
            continue;
        }
        Rational lo = lo_safe ? f.span.lo : f.span.lo + delta;
        Rational hi = hi_safe ? f.span.hi : f.span.hi - delta;
        out.push_back(Interval::closed(std::move(lo), std::move(hi)));
    }
    return IntervalSet::normalize(std::move(out), domain_.universe());
}

}  // namespace littlewood
