#pragma once

#include <string>
#include <string_view>

#include "upinv/invariants.hpp"
#include "upinv/verdict.hpp"

namespace upinv {

// Machine-readable reports: one JSON object each, tagged by "kind".
//
// hilbert_function   {"kind", "dims": [..]}
// hsop_certificate   {"kind", "p", "status": "Certified"|"Unknown", "polys": [..],
//                     "degrees": [d1,d2,d3], "power_exponents": [N|null x3],
//                     "n_max", "group_order", "degree_product_ok"}
// falsifier_report   {"kind", "group_order", "max_degree", "hilbert_function": [..],
//                     "candidates": [{"degrees", "first_mismatch": d|null, "survives"}],
//                     "verdict": "NonPolynomialCertified"|"Inconclusive"}
// verdict            {"kind", "outcome", "rule", "reason", "preconditions": {..},
//                     "evidence_consistent", "falsifier": {..}|null,
//                     "certificate": {..}|null}
//
// The parse_* functions invert to_record exactly and throw Error(ParseError).

std::string to_record(const HilbertFunction& hf);
std::string to_record(const HsopCertificate& cert, PrimeModulus p);
std::string to_record(const FalsifierReport& report);
std::string to_record(const PolynomialityVerdict& verdict, PrimeModulus p);

HilbertFunction parse_hilbert_record(std::string_view text);
HsopCertificate parse_hsop_record(std::string_view text);
FalsifierReport parse_falsifier_record(std::string_view text);
PolynomialityVerdict parse_verdict_record(std::string_view text);

}  // namespace upinv
