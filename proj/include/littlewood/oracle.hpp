#pragma once

#include "littlewood/principles.hpp"

namespace littlewood {

// Brute-force verification machinery. Everything here re-derives measures and
// level sets from the raw inputs; certificates contribute nothing beyond
// their stated fields.

struct Grid {
    std::vector<Rational> points;  // sorted, deduplicated
    Rational density;
};

Rational default_grid_density(const Interval& universe);  // measure(universe) / 2^12

// Lattice at the requested density plus every breakpoint/endpoint of the
// given objects, component midpoints, and endpoint-adjacent interior points.
Grid make_grid(const Interval& universe, const Rational& density,
               const std::vector<const MeasurableFn*>& fns,
               const std::vector<const IntervalSet*>& sets);

std::vector<Rational> grid_restrict(const Grid& grid, const IntervalSet& set);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::string cert_kind;
    std::vector<CheckResult> structural;
    std::vector<CheckResult> sampled;

    bool verdict() const;
};

struct VerifyOptions {
    std::optional<Rational> grid_density;  // defaults to measure(universe)/2^12
    int depth = 16;                        // tail samples past each ladder index
};

VerificationReport verify_decomposition(const DecompositionCert& cert, const IntervalSet& set,
                                        const VerifyOptions& opts = {});
VerificationReport verify_boundedness(const BoundednessCert& cert, const MeasurableFn& f,
                                      const VerifyOptions& opts = {});
VerificationReport verify_egoroff(const EgoroffCert& cert, const PointwiseSequence& seq,
                                  const VerifyOptions& opts = {});
VerificationReport verify_lusin(const LusinCert& cert, const FnPtr& f,
                                const VerifyOptions& opts = {});
VerificationReport verify_dini(const DiniCert& cert, const PointwiseSequence::TermGen& terms,
                               const FnPtr& limit, const VerifyOptions& opts = {});

// Least n <= n_max with max over grid-points-in-K of |term(n) - limit| < eps.
// Throws NotFound past n_max.
int brute_force_min_index(const PointwiseSequence::TermGen& terms, const FnPtr& limit,
                          const IntervalSet& k, const Rational& eps, int n_max,
                          const std::optional<Rational>& grid_density = std::nullopt);

struct MutationOutcome {
    std::string name;
    bool caught;  // the verifier rejected the mutated certificate
    VerificationReport report;
};

// Fixed catalogue of certificate mutations; a sound verifier rejects each.
std::vector<MutationOutcome> mutation_suite(const DecompositionCert& cert, const IntervalSet& set,
                                            const VerifyOptions& opts = {});
std::vector<MutationOutcome> mutation_suite(const BoundednessCert& cert, const MeasurableFn& f,
                                            const VerifyOptions& opts = {});
std::vector<MutationOutcome> mutation_suite(const EgoroffCert& cert, const PointwiseSequence& seq,
                                            const VerifyOptions& opts = {});
std::vector<MutationOutcome> mutation_suite(const LusinCert& cert, const FnPtr& f,
                                            const VerifyOptions& opts = {});
std::vector<MutationOutcome> mutation_suite(const DiniCert& cert,
                                            const PointwiseSequence::TermGen& terms,
                                            const FnPtr& limit, const VerifyOptions& opts = {});

}  // namespace littlewood
