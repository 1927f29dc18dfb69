#include "littlewood/interval_set.hpp"

#include <algorithm>

namespace littlewood {

Interval Interval::make(Rational lo, bool lo_closed, Rational hi, bool hi_closed) {
    if (lo > hi) throw InputError("interval with lo > hi: " + rat_to_string(lo) + " > " + rat_to_string(hi));
    if (lo == hi && !(lo_closed && hi_closed))
        throw InputError("degenerate interval must be closed: " + rat_to_string(lo));
    return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

Interval Interval::point(Rational x) {
    Rational y = x;
    return Interval{std::move(x), std::move(y), true, true};
}

bool Interval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string Interval::to_string() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += rat_to_string(lo);
    s += ',';
    s += rat_to_string(hi);
    s += hi_closed ? ']' : ')';
    return s;
}

Interval Interval::parse(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw ParseError("empty interval literal");
    std::string_view s = text.substr(a, b - a + 1);
    if (s.size() < 5) throw ParseError("invalid interval literal: '" + std::string(text) + "'");
    char open = s.front(), close = s.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
        throw ParseError("invalid interval delimiters in '" + std::string(text) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("missing comma in '" + std::string(text) + "'");
    return make(rat_parse(body.substr(0, comma)), open == '[',
                rat_parse(body.substr(comma + 1)), close == ']');
}

// --- interval set ---

namespace {

// Build an interval from boundary data, or nothing if the combination is empty.
std::optional<Interval> try_interval(const Rational& lo, bool lo_closed, const Rational& hi, bool hi_closed) {
    if (lo > hi) return std::nullopt;
    if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
    return Interval{lo, hi, lo_closed, hi_closed};
}

bool within(const Interval& comp, const Interval& universe) {
    return comp.lo >= universe.lo && comp.hi <= universe.hi;
}

}  // namespace

std::optional<Interval> interval_intersect(const Interval& a, const Interval& b) {
    Rational lo;
    bool lo_closed;
    if (a.lo > b.lo) { lo = a.lo; lo_closed = a.lo_closed; }
    else if (b.lo > a.lo) { lo = b.lo; lo_closed = b.lo_closed; }
    else { lo = a.lo; lo_closed = a.lo_closed && b.lo_closed; }
    Rational hi;
    bool hi_closed;
    if (a.hi < b.hi) { hi = a.hi; hi_closed = a.hi_closed; }
    else if (b.hi < a.hi) { hi = b.hi; hi_closed = b.hi_closed; }
    else { hi = a.hi; hi_closed = a.hi_closed && b.hi_closed; }
    return try_interval(lo, lo_closed, hi, hi_closed);
}

std::optional<Interval> interval_clip_gt(const Interval& i, const Rational& x) {
    if (x < i.lo) return i;
    if (x >= i.hi) return std::nullopt;
    return Interval{x, i.hi, false, i.hi_closed};
}

std::optional<Interval> interval_clip_ge(const Interval& i, const Rational& x) {
    if (x <= i.lo) return i;
    if (x > i.hi) return std::nullopt;
    if (x == i.hi) return i.hi_closed ? std::optional<Interval>(Interval::point(x)) : std::nullopt;
    return Interval{x, i.hi, true, i.hi_closed};
}

std::optional<Interval> interval_clip_lt(const Interval& i, const Rational& x) {
    if (x > i.hi) return i;
    if (x <= i.lo) return std::nullopt;
    return Interval{i.lo, x, i.lo_closed, false};
}

std::optional<Interval> interval_clip_le(const Interval& i, const Rational& x) {
    if (x >= i.hi) return i;
    if (x < i.lo) return std::nullopt;
    if (x == i.lo) return i.lo_closed ? std::optional<Interval>(Interval::point(x)) : std::nullopt;
    return Interval{i.lo, x, i.lo_closed, false};
}

bool interval_ends_before(const Interval& a, const Interval& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return !a.hi_closed && b.hi_closed;
}

IntervalSet IntervalSet::empty(const Interval& universe) { return IntervalSet(universe, {}); }

IntervalSet IntervalSet::whole(const Interval& universe) { return IntervalSet(universe, {universe}); }

IntervalSet IntervalSet::single(const Interval& component, const Interval& universe) {
    return normalize({component}, universe);
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw, const Interval& universe) {
    if (!universe.lo_closed || !universe.hi_closed)
        throw InputError("universe must be a closed interval");
    for (const Interval& c : raw)
        if (!within(c, universe))
            throw ComponentOutsideUniverse("component " + c.to_string() + " outside universe " +
                                           universe.to_string());
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> out;
    for (Interval& c : raw) {
        if (!out.empty()) {
            Interval& last = out.back();
            bool overlaps = c.lo < last.hi || (c.lo == last.hi && (last.hi_closed || c.lo_closed));
            if (overlaps) {
                if (c.hi > last.hi) {
                    last.hi = c.hi;
                    last.hi_closed = c.hi_closed;
                } else if (c.hi == last.hi) {
                    last.hi_closed = last.hi_closed || c.hi_closed;
                }
                continue;
            }
        }
        out.push_back(std::move(c));
    }
    return IntervalSet(universe, std::move(out));
}

bool IntervalSet::contains(const Rational& x) const {
    // components are sorted by lo; find the first with lo-boundary past x
    auto it = std::upper_bound(components_.begin(), components_.end(), x,
                               [](const Rational& v, const Interval& c) { return v < c.lo; });
    if (it == components_.begin()) return false;
    return std::prev(it)->contains(x);
}

Rational IntervalSet::measure() const {
    Rational total(0);
    for (const Interval& c : components_) total += c.length();
    return total;
}

bool IntervalSet::is_closed() const {
    for (const Interval& c : components_)
        if (!c.lo_closed || !c.hi_closed) return false;
    return true;
}

bool IntervalSet::is_open_rel() const {
    for (const Interval& c : components_) {
        if (c.lo_closed && c.lo != universe_.lo) return false;
        if (c.hi_closed && c.hi != universe_.hi) return false;
    }
    return true;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    return set_difference(*this, other).empty();
}

std::string IntervalSet::to_string() const {
    if (components_.empty()) return "empty";
    std::string s;
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i) s += " u ";
        s += components_[i].to_string();
    }
    return s;
}

IntervalSet IntervalSet::parse(std::string_view text, const Interval& universe) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw ParseError("empty interval-set literal");
    std::string_view s = text.substr(a, b - a + 1);
    if (s == "empty") return empty(universe);
    std::vector<Interval> comps;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t sep = s.find(" u ", pos);
        std::string_view piece = sep == std::string_view::npos ? s.substr(pos) : s.substr(pos, sep - pos);
        comps.push_back(Interval::parse(piece));
        if (sep == std::string_view::npos) break;
        pos = sep + 3;
    }
    return normalize(std::move(comps), universe);
}

namespace {

void require_same_universe(const IntervalSet& a, const IntervalSet& b) {
    if (!(a.universe() == b.universe()))
        throw UniverseMismatch("operands live in different universes: " + a.universe().to_string() +
                               " vs " + b.universe().to_string());
}

}  // namespace

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    require_same_universe(a, b);
    std::vector<Interval> comps = a.components();
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    return IntervalSet::normalize(std::move(comps), a.universe());
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    require_same_universe(a, b);
    std::vector<Interval> comps;
    const auto& ca = a.components();
    const auto& cb = b.components();
    size_t i = 0, j = 0;
    while (i < ca.size() && j < cb.size()) {
        if (auto piece = interval_intersect(ca[i], cb[j])) comps.push_back(std::move(*piece));
        // advance the component that ends first
        if (ca[i].hi < cb[j].hi || (ca[i].hi == cb[j].hi && !ca[i].hi_closed))
            ++i;
        else
            ++j;
    }
    return IntervalSet::normalize(std::move(comps), a.universe());
}

IntervalSet set_complement(const IntervalSet& a) {
    const Interval& u = a.universe();
    std::vector<Interval> comps;
    Rational cursor = u.lo;
    bool cursor_in = true;  // universe is closed
    for (const Interval& c : a.components()) {
        if (auto gap = try_interval(cursor, cursor_in, c.lo, !c.lo_closed)) comps.push_back(std::move(*gap));
        cursor = c.hi;
        cursor_in = !c.hi_closed;
    }
    if (auto gap = try_interval(cursor, cursor_in, u.hi, true)) comps.push_back(std::move(*gap));
    return IntervalSet::normalize(std::move(comps), u);
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    return set_intersect(a, set_complement(b));
}

IntervalSet closed_subset_within(const IntervalSet& set, const Rational& eps) {
    if (eps <= 0) throw InputError("closed_subset_within needs eps > 0");
    long shrinkable = 0;
    for (const Interval& c : set.components())
        if (!c.lo_closed || !c.hi_closed) ++shrinkable;
    if (shrinkable == 0) return set;
    Rational delta = eps / Rational(4 * shrinkable);
    std::vector<Interval> comps;
    comps.reserve(set.size());
    for (const Interval& c : set.components()) {
        if (c.lo_closed && c.hi_closed) {
            comps.push_back(c);
            continue;
        }
        if (c.length() <= 2 * delta) {
            comps.push_back(Interval::point((c.lo + c.hi) / 2));
            continue;
        }
        Rational lo = c.lo_closed ? c.lo : c.lo + delta;
        Rational hi = c.hi_closed ? c.hi : c.hi - delta;
        comps.push_back(Interval::closed(std::move(lo), std::move(hi)));
    }
    return IntervalSet::normalize(std::move(comps), set.universe());
}

DecompositionCert principle1_decompose(const IntervalSet& set, const Rational& eps) {
    if (eps <= 0) throw InputError("principle1_decompose needs eps > 0");
    IntervalSet k = closed_subset_within(set, eps);
    IntervalSet f = set_difference(set, k);
    Rational loss = f.measure();
    return DecompositionCert{std::move(k), std::move(f), eps, std::move(loss)};
}

}  // namespace littlewood
