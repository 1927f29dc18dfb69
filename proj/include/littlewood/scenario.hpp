#pragma once

#include <map>

#include "littlewood/certificates.hpp"

namespace littlewood {

// A scenario file names the objects and the task to run on them:
// {
//   "universe": "[0,1]",
//   "sets": {"E": "(0,1)"},
//   "functions": {"f": {"kind":"recip","pole":"0","coef":"1","domain":"(0,1]"}},
//   "sequences": {"s": {"family":"ramp_spike"}},
//   "task": "bound", "target": "f", "epsilon": "1/10",
//   "ladder": 4, "accuracy": 8, "cap": 200000, "algorithm": "sup", "set": "K"
// }
struct Scenario {
    Interval universe = Interval::closed(0, 1);
    std::map<std::string, IntervalSet> sets;
    std::map<std::string, FnPtr> functions;
    std::map<std::string, PointwiseSequence> sequences;
    std::string task;
    std::string target;
    std::optional<std::string> set_name;  // the K of a dini task
    Rational epsilon;
    int ladder = 4;
    int accuracy = 8;
    int cap = kDefaultCap;
    std::string algorithm = "sup";
};

FnPtr parse_function(const Json& descriptor, const Interval& universe);
Scenario parse_scenario(const Json& doc);

struct RunFlags {
    std::optional<Rational> epsilon;
    std::optional<int> ladder, accuracy, cap, depth;
    std::optional<Rational> grid_density;
    bool verify = false;
    bool want_csv = false;
};

// Exit codes shared by the CLI and the bindings.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIterationCap = 3;

struct RunResult {
    int exit_code = kExitOk;
    std::string diagnostic;            // one line, empty on success
    Json document;                     // {"run_id", "tool_version", "certificate"}
    std::optional<Json> report;        // when verification ran
    std::string csv_kind;              // "sup_decay" or "measure_decay" when rows exist
    std::vector<std::pair<int, Rational>> csv_rows;
    long long timing_ms = 0;
};

RunResult run_scenario(const Json& scenario_doc, const RunFlags& flags);

// Re-verify a previously emitted certificate document against its scenario.
VerificationReport verify_document(const Json& scenario_doc, const Json& cert_document,
                                   const VerifyOptions& opts);

std::string csv_text(const RunResult& result);

}  // namespace littlewood
