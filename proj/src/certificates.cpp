#include "littlewood/certificates.hpp"

namespace littlewood {

namespace {

Json set_literal(const IntervalSet& s) { return s.to_string(); }

Interval universe_of(const Json& doc) {
    if (!doc.contains("universe")) throw ParseError("certificate is missing its universe");
    return Interval::parse(doc.at("universe").get<std::string>());
}

IntervalSet set_field(const Json& doc, const char* key, const Interval& universe) {
    if (!doc.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");
    return IntervalSet::parse(doc.at(key).get<std::string>(), universe);
}

Rational rat_field(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");
    return rat_parse(doc.at(key).get<std::string>());
}

}  // namespace

Json cert_to_json(const DecompositionCert& cert) {
    Json doc;
    doc["type"] = "decomposition";
    doc["universe"] = cert.K.universe().to_string();
    doc["K"] = set_literal(cert.K);
    doc["F"] = set_literal(cert.F);
    doc["epsilon"] = rat_to_string(cert.epsilon);
    doc["loss"] = rat_to_string(cert.loss);
    return doc;
}

Json cert_to_json(const BoundednessCert& cert) {
    Json doc;
    doc["type"] = "boundedness";
    doc["universe"] = cert.K.universe().to_string();
    doc["K"] = set_literal(cert.K);
    doc["bound"] = rat_to_string(cert.bound);
    doc["epsilon"] = rat_to_string(cert.epsilon);
    doc["loss"] = rat_to_string(cert.loss);
    return doc;
}

Json cert_to_json(const EgoroffCert& cert) {
    Json doc;
    doc["type"] = "egoroff";
    doc["universe"] = cert.K.universe().to_string();
    doc["K"] = set_literal(cert.K);
    doc["epsilon"] = rat_to_string(cert.epsilon);
    doc["ladder"] = cert.ladder;
    doc["index_table"] = cert.index_table;
    doc["proof_path"] = cert.path == EgoroffPath::classical ? "classical" : "dini";
    doc["loss"] = rat_to_string(cert.loss);
    return doc;
}

Json cert_to_json(const LusinCert& cert) {
    Json doc;
    doc["type"] = "lusin";
    doc["universe"] = cert.K.universe().to_string();
    doc["K"] = set_literal(cert.K);
    doc["epsilon"] = rat_to_string(cert.epsilon);
    doc["loss"] = rat_to_string(cert.loss);
    Json witness;
    if (cert.exact_witness()) {
        const auto& w = std::get<LusinWitnessExact>(cert.witness);
        witness["kind"] = "exact";
        Json gaps = Json::array();
        for (const Rational& g : w.gaps) gaps.push_back(rat_to_string(g));
        witness["gaps"] = std::move(gaps);
        witness["lipschitz"] = w.lipschitz ? Json(rat_to_string(*w.lipschitz)) : Json(nullptr);
    } else {
        const auto& w = std::get<LusinWitnessApprox>(cert.witness);
        witness["kind"] = "finite_accuracy";
        witness["accuracy"] = w.accuracy;
        witness["oscillation_bound"] = rat_to_string(w.oscillation_bound);
    }
    doc["witness"] = std::move(witness);
    return doc;
}

Json cert_to_json(const DiniCert& cert) {
    Json doc;
    doc["type"] = "dini";
    doc["universe"] = cert.K.universe().to_string();
    doc["K"] = set_literal(cert.K);
    doc["epsilon"] = rat_to_string(cert.epsilon);
    doc["index"] = cert.index;
    if (cert.cover_trace) {
        Json trace = Json::array();
        for (const IntervalSet& a : *cert.cover_trace) trace.push_back(a.to_string());
        doc["cover_trace"] = std::move(trace);
    } else {
        doc["cover_trace"] = nullptr;
    }
    return doc;
}

Json cert_to_json(const AnyCert& cert) {
    return std::visit([](const auto& c) { return cert_to_json(c); }, cert);
}

std::string cert_type(const AnyCert& cert) {
    return cert_to_json(cert).at("type").get<std::string>();
}

AnyCert parse_certificate(const Json& doc) {
    if (!doc.contains("type")) throw ParseError("certificate is missing 'type'");
    std::string type = doc.at("type").get<std::string>();
    Interval universe = universe_of(doc);
    if (type == "decomposition") {
        return DecompositionCert{set_field(doc, "K", universe), set_field(doc, "F", universe),
                                 rat_field(doc, "epsilon"), rat_field(doc, "loss")};
    }
    if (type == "boundedness") {
        return BoundednessCert{set_field(doc, "K", universe), rat_field(doc, "bound"),
                               rat_field(doc, "epsilon"), rat_field(doc, "loss")};
    }
    if (type == "egoroff") {
        EgoroffCert cert{set_field(doc, "K", universe), rat_field(doc, "epsilon"),
                         doc.at("ladder").get<int>(), doc.at("index_table").get<std::vector<int>>(),
                         doc.at("proof_path").get<std::string>() == "dini" ? EgoroffPath::dini
                                                                           : EgoroffPath::classical,
                         rat_field(doc, "loss")};
        return cert;
    }
    if (type == "lusin") {
        LusinCert cert{set_field(doc, "K", universe), rat_field(doc, "epsilon"),
                       rat_field(doc, "loss"), LusinWitnessExact{}};
        const Json& w = doc.at("witness");
        if (w.at("kind").get<std::string>() == "exact") {
            LusinWitnessExact exact;
            for (const Json& g : w.at("gaps")) exact.gaps.push_back(rat_parse(g.get<std::string>()));
            if (!w.at("lipschitz").is_null())
                exact.lipschitz = rat_parse(w.at("lipschitz").get<std::string>());
            cert.witness = std::move(exact);
        } else {
            cert.witness = LusinWitnessApprox{w.at("accuracy").get<int>(),
                                              rat_parse(w.at("oscillation_bound").get<std::string>())};
        }
        return cert;
    }
    if (type == "dini") {
        DiniCert cert{set_field(doc, "K", universe), rat_field(doc, "epsilon"),
                      doc.at("index").get<int>(), std::nullopt};
        if (doc.contains("cover_trace") && !doc.at("cover_trace").is_null()) {
            std::vector<IntervalSet> trace;
            for (const Json& a : doc.at("cover_trace"))
                trace.push_back(IntervalSet::parse(a.get<std::string>(), universe));
            cert.cover_trace = std::move(trace);
        }
        return cert;
    }
    throw ParseError("unknown certificate type '" + type + "'");
}

Json report_to_json(const VerificationReport& report) {
    Json doc;
    doc["cert_kind"] = report.cert_kind;
    doc["verdict"] = report.verdict() ? "pass" : "fail";
    auto rows = [](const std::vector<CheckResult>& list) {
        Json arr = Json::array();
        for (const CheckResult& c : list) {
            Json row;
            row["name"] = c.name;
            row["pass"] = c.pass;
            if (!c.detail.empty()) row["detail"] = c.detail;
            arr.push_back(std::move(row));
        }
        return arr;
    };
    doc["structural"] = rows(report.structural);
    doc["sampled"] = rows(report.sampled);
    return doc;
}

std::string fingerprint(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace littlewood
