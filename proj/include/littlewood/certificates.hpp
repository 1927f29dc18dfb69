#pragma once

#include <json.hpp>

#include "littlewood/oracle.hpp"

namespace littlewood {

// Insertion-ordered JSON keeps emitted documents byte-deterministic.
using Json = nlohmann::ordered_json;

using AnyCert = std::variant<DecompositionCert, BoundednessCert, EgoroffCert, LusinCert, DiniCert>;

Json cert_to_json(const DecompositionCert& cert);
Json cert_to_json(const BoundednessCert& cert);
Json cert_to_json(const EgoroffCert& cert);
Json cert_to_json(const LusinCert& cert);
Json cert_to_json(const DiniCert& cert);
Json cert_to_json(const AnyCert& cert);

AnyCert parse_certificate(const Json& doc);
std::string cert_type(const AnyCert& cert);

Json report_to_json(const VerificationReport& report);

// FNV-1a over the serialized bytes; used for run ids.
std::string fingerprint(const std::string& bytes);

}  // namespace littlewood
