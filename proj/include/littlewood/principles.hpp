#pragma once

#include <optional>
#include <variant>

#include "littlewood/sequences.hpp"

namespace littlewood {

inline constexpr int kDefaultCap = 200000;

// Closed K with small complement on which |f| <= bound.
struct BoundednessCert {
    IntervalSet K;
    Rational bound;  // the n_eps of the level scan
    Rational epsilon;
    Rational loss;  // measure(domain \ K)
};

enum class EgoroffPath { classical, dini };

// Closed K with small complement carrying a uniform-convergence ladder:
// for every m <= ladder and n >= index_table[m-1], |f_n - f| < 1/m on K.
struct EgoroffCert {
    IntervalSet K;
    Rational epsilon;
    int ladder = 0;
    std::vector<int> index_table;  // nu(1..ladder)
    EgoroffPath path = EgoroffPath::classical;
    Rational loss;
};

struct LusinWitnessExact {
    // separation gaps between adjacent constant pieces (step functions), in
    // left-to-right order; Lipschitz modulus for linear/ramp kinds
    std::vector<Rational> gaps;
    std::optional<Rational> lipschitz;
};

struct LusinWitnessApprox {
    int accuracy = 0;            // N
    Rational oscillation_bound;  // 2 * 2^-N
};

struct LusinCert {
    IntervalSet K;
    Rational epsilon;
    Rational loss;
    std::variant<LusinWitnessExact, LusinWitnessApprox> witness;

    bool exact_witness() const { return std::holds_alternative<LusinWitnessExact>(witness); }
};

enum class DiniAlgorithm { sup, cover };

struct DiniCert {
    IntervalSet K;
    Rational epsilon;
    int index = 0;
    std::optional<std::vector<IntervalSet>> cover_trace;
};

// Theorem 5 shape: scan |f| levels for measure(L(|f|,n)) < eps/2, then pull a
// closed K out of the complement with the other eps/2.
BoundednessCert fourth_principle(const MeasurableFn& f, const Rational& eps, int cap = kDefaultCap);

// Simple functions are nearly continuous: per-piece closed extraction with
// budget eps/n; distinct-value components end up separated by positive gaps.
LusinCert lusin_step(const StepFunction& s, const Rational& eps);

// Boundedness-first construction (the primary path): per non-negative part,
// level cut at budget/2, closed extraction, then a ladder of quantized
// approximations made nearly continuous. accuracy N pins the approximation
// mesh 2^-N and the finite-accuracy oscillation bound 2*2^-N.
LusinCert lusin(const FnPtr& f, const Rational& eps, int accuracy = 8, int cap = kDefaultCap);

// Same shape, but the bounded closed core comes from Egoroff applied to the
// increasing dyadic approximations.
LusinCert lusin_classical(const FnPtr& f, const Rational& eps, int accuracy = 8, int cap = kDefaultCap);

EgoroffCert egoroff_classical(const PointwiseSequence& seq, const Rational& eps, int ladder,
                              int cap = kDefaultCap);

// Extends the ladder of a classical certificate; K never grows.
EgoroffCert egoroff_refine(const EgoroffCert& cert, const PointwiseSequence& seq, int new_ladder,
                           int cap = kDefaultCap);

// Alternative proof path: make g_n = |f_n - f| nearly bounded, then nearly
// continuous round by round, and fill the index table by Dini scans on K.
EgoroffCert egoroff_dini(const PointwiseSequence& seq, const Rational& eps, int ladder,
                         int cap = kDefaultCap);

// Least index with sup_K |f - f_m| < eps for a monotone sequence of continuous
// piecewise-linear functions on closed K; sup- and cover-based algorithms.
DiniCert dini_index(const PointwiseSequence::TermGen& terms, const FnPtr& limit, const IntervalSet& k,
                    const Rational& eps, DiniAlgorithm algorithm, int cap = kDefaultCap,
                    bool record_trace = false);

// Finite slice of the Egoroff converse: given closed K_m with
// measure(domain \ K_m) <= 1/m, returns measure(domain \ union K_m).
Rational egoroff_converse_check(const IntervalSet& domain,
                                const std::vector<std::pair<IntervalSet, bool>>& family);

struct LusinConverseRow {
    Rational threshold;
    bool level_closed;  // level_ge(t) intersected with K is closed
    bool bound_holds;   // measure(level_ge(t) \ K) <= measure(domain \ K)
};

struct LusinConverseReport {
    std::vector<LusinConverseRow> rows;
    bool pass = true;
};

LusinConverseReport lusin_converse_check(const MeasurableFn& f, const LusinCert& cert,
                                         const std::vector<Rational>& thresholds);

}  // namespace littlewood
