#pragma once

#include "mfv/cases.h"

#include <iosfwd>

namespace mfv {

std::string status_name(CheckStatus s);

/// Single certificate as a JSON object, key order fixed:
/// {"case": ..., "checks": [{"id", "paper_ref", "status", "detail",
/// "elapsed_ms"}, ...], "overall": "pass"|"fail"}.
std::string certificate_json(const Certificate& cert, int indent = 2);

/// Several certificates as a JSON array in the given order.
std::string certificate_json(const std::vector<Certificate>& certs, int indent = 2);

/// Human-readable report: one "[PASS|FAIL|SKIP] id  ref  detail" line per
/// check plus a summary line per certificate.
void print_certificate(std::ostream& os, const Certificate& cert);

}  // namespace mfv
