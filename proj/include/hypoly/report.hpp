#pragma once

#include <string>

#include "hypoly/invariance.hpp"
#include "hypoly/specfile.hpp"

namespace hypoly {

/// Machine-readable verification report; field order is stable.
Json verification_report_json(const Polyhedron& p, const SidePairing& phi,
                              const VerificationReport& rep, const std::string& input,
                              double timing_ms);

std::string verification_report_text(const Polyhedron& p, const VerificationReport& rep,
                                     const std::string& input);

Json invariance_report_json(const Polyhedron& p, const InvarianceCase& c,
                            const InvarianceReport& rep, const std::string& input,
                            double timing_ms);

std::string invariance_report_text(const Polyhedron& p, const InvarianceCase& c,
                                   const InvarianceReport& rep, const std::string& input);

}  // namespace hypoly
