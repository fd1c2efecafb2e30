#pragma once

#include "leala/semidefinite.hpp"

#include <string>

namespace leala {

/// "leala-algebra v1" interchange. Serialization is deterministic (keys
/// sorted, entries in table order) and scalars use the exact textual
/// encoding, so save/load round-trips are bit-exact.
std::string algebra_to_json(const GradedAlgebra& a);

/// Throws AlgebraError on malformed input (bad JSON, wrong format tag,
/// unparsable scalars, unknown identifiers).
GradedAlgebra algebra_from_json(const std::string& text);

std::string report_to_json(const CheckReport& r);

std::string psd_certificate_to_json(const PsdCertificate& c);

std::string radical_report_to_json(const RadicalReport& r);

/// Exact CSV, one row per line, entries in scalar textual encoding.
std::string gram_csv(const ScalarMatrix& m);
std::string gram_csv(const RationalMatrix& m);

} // namespace leala
