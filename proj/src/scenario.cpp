#include "littlewood/scenario.hpp"

#include <chrono>

#include "littlewood/version.hpp"

namespace littlewood {

FnPtr parse_function(const Json& descriptor, const Interval& universe) {
    if (!descriptor.contains("kind")) throw ParseError("function descriptor is missing 'kind'");
    std::string kind = descriptor.at("kind").get<std::string>();
    if (kind == "step") {
        std::vector<StepPiece> pieces;
        for (const Json& row : descriptor.at("pieces")) {
            if (!row.is_array() || row.size() != 2)
                throw ParseError("step piece must be [carrier, value]");
            pieces.push_back({IntervalSet::parse(row.at(0).get<std::string>(), universe),
                              ExtendedRational::parse(row.at(1).get<std::string>())});
        }
        return std::make_shared<StepFunction>(std::move(pieces));
    }
    if (kind == "pl") {
        std::vector<LinearPiece> pieces;
        for (const Json& row : descriptor.at("pieces")) {
            if (!row.is_array() || row.size() != 3)
                throw ParseError("pl piece must be [span, slope, offset]");
            pieces.push_back({Interval::parse(row.at(0).get<std::string>()),
                              rat_parse(row.at(1).get<std::string>()),
                              rat_parse(row.at(2).get<std::string>())});
        }
        return std::make_shared<PiecewiseLinear>(std::move(pieces), universe);
    }
    if (kind == "recip") {
        return std::make_shared<ReciprocalRamp>(rat_parse(descriptor.at("pole").get<std::string>()),
                                                rat_parse(descriptor.at("coef").get<std::string>()),
                                                Interval::parse(descriptor.at("domain").get<std::string>()),
                                                universe);
    }
    throw ParseError("unknown function kind '" + kind + "'");
}

Scenario parse_scenario(const Json& doc) {
    Scenario s;
    if (!doc.contains("universe")) throw ParseError("scenario is missing 'universe'");
    s.universe = Interval::parse(doc.at("universe").get<std::string>());
    if (doc.contains("sets"))
        for (const auto& [name, literal] : doc.at("sets").items())
            s.sets.emplace(name, IntervalSet::parse(literal.get<std::string>(), s.universe));
    if (doc.contains("functions"))
        for (const auto& [name, descriptor] : doc.at("functions").items())
            s.functions.emplace(name, parse_function(descriptor, s.universe));
    if (doc.contains("sequences"))
        for (const auto& [name, descriptor] : doc.at("sequences").items()) {
            if (!descriptor.contains("family"))
                throw ParseError("sequence descriptor needs a 'family'");
            s.sequences.emplace(name,
                                make_family(descriptor.at("family").get<std::string>(), s.universe));
        }
    if (!doc.contains("task")) throw ParseError("scenario is missing 'task'");
    s.task = doc.at("task").get<std::string>();
    if (!doc.contains("target")) throw ParseError("scenario is missing 'target'");
    s.target = doc.at("target").get<std::string>();
    if (doc.contains("set")) s.set_name = doc.at("set").get<std::string>();
    if (!doc.contains("epsilon")) throw ParseError("scenario is missing 'epsilon'");
    s.epsilon = rat_parse(doc.at("epsilon").get<std::string>());
    if (s.epsilon <= 0) throw ParseError("scenario epsilon must be positive");
    if (doc.contains("ladder")) s.ladder = doc.at("ladder").get<int>();
    if (doc.contains("accuracy")) s.accuracy = doc.at("accuracy").get<int>();
    if (doc.contains("cap")) s.cap = doc.at("cap").get<int>();
    if (doc.contains("algorithm")) s.algorithm = doc.at("algorithm").get<std::string>();
    return s;
}

namespace {

const IntervalSet& named_set(const Scenario& s, const std::string& name) {
    auto it = s.sets.find(name);
    if (it == s.sets.end()) throw InputError("scenario has no set named '" + name + "'");
    return it->second;
}

const FnPtr& named_function(const Scenario& s, const std::string& name) {
    auto it = s.functions.find(name);
    if (it == s.functions.end()) throw InputError("scenario has no function named '" + name + "'");
    return it->second;
}

const PointwiseSequence& named_sequence(const Scenario& s, const std::string& name) {
    auto it = s.sequences.find(name);
    if (it == s.sequences.end()) throw InputError("scenario has no sequence named '" + name + "'");
    return it->second;
}

IntervalSet dini_set(const Scenario& s, const PointwiseSequence& seq) {
    if (s.set_name) return named_set(s, *s.set_name);
    if (!seq.domain().is_closed())
        throw InputError("dini task needs a closed 'set' when the domain is not closed");
    return seq.domain();
}

struct TaskOutput {
    AnyCert cert;
    std::optional<VerificationReport> report;
};

TaskOutput run_task(const Scenario& s, const RunFlags& flags, const VerifyOptions& opts) {
    Rational eps = flags.epsilon.value_or(s.epsilon);
    int ladder = flags.ladder.value_or(s.ladder);
    int accuracy = flags.accuracy.value_or(s.accuracy);
    int cap = flags.cap.value_or(s.cap);
    TaskOutput out{DecompositionCert{IntervalSet::empty(s.universe), IntervalSet::empty(s.universe),
                                     Rational(1), Rational(0)},
                   std::nullopt};
    if (s.task == "decompose") {
        const IntervalSet& e = named_set(s, s.target);
        DecompositionCert cert = principle1_decompose(e, eps);
        if (flags.verify) out.report = verify_decomposition(cert, e, opts);
        out.cert = std::move(cert);
    } else if (s.task == "bound") {
        const FnPtr& f = named_function(s, s.target);
        BoundednessCert cert = fourth_principle(*f, eps, cap);
        if (flags.verify) out.report = verify_boundedness(cert, *f, opts);
        out.cert = std::move(cert);
    } else if (s.task == "lusin" || s.task == "lusin_classical") {
        const FnPtr& f = named_function(s, s.target);
        LusinCert cert = s.task == "lusin" ? lusin(f, eps, accuracy, cap)
                                           : lusin_classical(f, eps, accuracy, cap);
        if (flags.verify) out.report = verify_lusin(cert, f, opts);
        out.cert = std::move(cert);
    } else if (s.task == "egoroff" || s.task == "egoroff_dini") {
        const PointwiseSequence& seq = named_sequence(s, s.target);
        EgoroffCert cert = s.task == "egoroff" ? egoroff_classical(seq, eps, ladder, cap)
                                               : egoroff_dini(seq, eps, ladder, cap);
        if (flags.verify) out.report = verify_egoroff(cert, seq, opts);
        out.cert = std::move(cert);
    } else if (s.task == "dini") {
        const PointwiseSequence& seq = named_sequence(s, s.target);
        IntervalSet k = dini_set(s, seq);
        DiniAlgorithm algo = s.algorithm == "cover" ? DiniAlgorithm::cover : DiniAlgorithm::sup;
        auto terms = [&seq](int n) { return seq.term(n); };
        DiniCert cert = dini_index(terms, seq.limit(), k, eps, algo, cap,
                                   algo == DiniAlgorithm::cover);
        if (flags.verify) out.report = verify_dini(cert, terms, seq.limit(), opts);
        out.cert = std::move(cert);
    } else {
        throw InputError("unknown task '" + s.task + "'");
    }
    return out;
}

void fill_csv(RunResult& result, const Scenario& s, const RunFlags& flags, const AnyCert& cert) {
    int depth = flags.depth.value_or(16);
    if (const auto* eg = std::get_if<EgoroffCert>(&cert)) {
        const PointwiseSequence& seq = named_sequence(s, s.target);
        Rational total = seq.domain().measure();
        Rational target(1, eg->ladder);
        result.csv_kind = "measure_decay";
        int last = eg->index_table.back() + depth;
        for (int n = 1; n <= last; ++n)
            result.csv_rows.emplace_back(n, total - seq.tail_lt(n, target).measure());
        return;
    }
    if (const auto* di = std::get_if<DiniCert>(&cert)) {
        const PointwiseSequence& seq = named_sequence(s, s.target);
        FragmentFn lim = FragmentFn::of(*seq.limit());
        result.csv_kind = "sup_decay";
        for (int n = 1; n <= di->index + depth; ++n) {
            FragmentFn dev = FragmentFn::abs_diff(FragmentFn::of(*seq.term(n)), lim);
            ExtendedRational sup = dev.sup_on(di->K);
            result.csv_rows.emplace_back(n, sup.is_finite() ? sup.value() : Rational(0));
        }
        return;
    }
    throw InputError("decay curves exist only for egoroff and dini tasks");
}

}  // namespace

RunResult run_scenario(const Json& scenario_doc, const RunFlags& flags) {
    RunResult result;
    auto started = std::chrono::steady_clock::now();
    try {
        Scenario s = parse_scenario(scenario_doc);
        VerifyOptions opts;
        opts.grid_density = flags.grid_density;
        if (flags.depth) opts.depth = *flags.depth;
        TaskOutput out = run_task(s, flags, opts);

        std::string stamp = scenario_doc.dump();
        if (flags.epsilon) stamp += "|eps=" + rat_to_string(*flags.epsilon);
        if (flags.ladder) stamp += "|ladder=" + std::to_string(*flags.ladder);
        if (flags.accuracy) stamp += "|accuracy=" + std::to_string(*flags.accuracy);
        if (flags.cap) stamp += "|cap=" + std::to_string(*flags.cap);
        std::string run_id = fingerprint(stamp);

        result.document["run_id"] = run_id;
        result.document["tool_version"] = kVersion;
        result.document["certificate"] = cert_to_json(out.cert);
        if (out.report) {
            Json rep = report_to_json(*out.report);
            rep["run_id"] = run_id;
            result.report = std::move(rep);
            if (!out.report->verdict()) {
                result.exit_code = kExitVerifyFailed;
                result.diagnostic = "verification failed";
            }
        }
        if (flags.want_csv) fill_csv(result, s, flags, out.cert);
    } catch (const IterationCapExceeded& e) {
        result.exit_code = kExitIterationCap;
        result.diagnostic = e.what();
    } catch (const Error& e) {
        result.exit_code = kExitInputError;
        result.diagnostic = e.what();
    } catch (const Json::exception& e) {
        result.exit_code = kExitInputError;
        result.diagnostic = e.what();
    }
    auto ended = std::chrono::steady_clock::now();
    result.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(ended - started).count();
    return result;
}

VerificationReport verify_document(const Json& scenario_doc, const Json& cert_document,
                                   const VerifyOptions& opts) {
    Scenario s = parse_scenario(scenario_doc);
    const Json& body = cert_document.contains("certificate") ? cert_document.at("certificate")
                                                             : cert_document;
    AnyCert cert = parse_certificate(body);
    if (const auto* c = std::get_if<DecompositionCert>(&cert))
        return verify_decomposition(*c, named_set(s, s.target), opts);
    if (const auto* c = std::get_if<BoundednessCert>(&cert))
        return verify_boundedness(*c, *named_function(s, s.target), opts);
    if (const auto* c = std::get_if<LusinCert>(&cert))
        return verify_lusin(*c, named_function(s, s.target), opts);
    if (const auto* c = std::get_if<EgoroffCert>(&cert))
        return verify_egoroff(*c, named_sequence(s, s.target), opts);
    const auto& c = std::get<DiniCert>(cert);
    const PointwiseSequence& seq = named_sequence(s, s.target);
    auto terms = [&seq](int n) { return seq.term(n); };
    return verify_dini(c, terms, seq.limit(), opts);
}

std::string csv_text(const RunResult& result) {
    std::string out = "n,value\n";
    for (const auto& [n, value] : result.csv_rows)
        out += std::to_string(n) + "," + rat_to_string(value) + "\n";
    return out;
}

}  // namespace littlewood
