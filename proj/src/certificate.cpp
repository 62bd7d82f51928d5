#include "mfv/certificate.h"

#include <ostream>

#include "json.hpp"

namespace mfv {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skipped";
  }
  throw DomainError("unknown check status");
}

namespace {

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  if (!cert.case_id.empty()) j["case"] = cert.case_id;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : cert.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["paper_ref"] = c.paper_ref;
    jc["status"] = status_name(c.status);
    jc["detail"] = c.detail;
    jc["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(jc));
  }
  j["overall"] = cert.overall_pass() ? "pass" : "fail";
  return j;
}

}  // namespace

std::string certificate_json(const Certificate& cert, int indent) {
  return to_json(cert).dump(indent) + "\n";
}

std::string certificate_json(const std::vector<Certificate>& certs, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Certificate& c : certs) arr.push_back(to_json(c));
  return arr.dump(indent) + "\n";
}

void print_certificate(std::ostream& os, const Certificate& cert) {
  os << "case " << cert.case_id << "\n";
  for (const CheckResult& c : cert.checks) {
    const char* tag = c.status == CheckStatus::Pass   ? "[PASS]"
                      : c.status == CheckStatus::Fail ? "[FAIL]"
                                                      : "[SKIP]";
    os << tag << " " << c.id << " — " << c.paper_ref;
    if (!c.detail.empty()) os << "\n       " << c.detail;
    os << "\n";
  }
  os << "overall: " << (cert.overall_pass() ? "pass" : "fail") << "\n";
}

}  // namespace mfv
