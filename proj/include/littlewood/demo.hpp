#pragma once

#include <iosfwd>

#include "littlewood/oracle.hpp"

namespace littlewood {

// Built-in corpus, one run per theorem: boundedness of 1/x, Egoroff on the
// ramp-spike family along both proof paths, Lusin on a two-piece step
// function, and the Dini index of x/n. Prints one summary line per run and
// returns 0 iff every certificate verifies. inject_mutation deliberately
// corrupts one certificate first (a verifier self-test hook).
int run_demo(const VerifyOptions& opts, bool inject_mutation, std::ostream& os);

}  // namespace littlewood
