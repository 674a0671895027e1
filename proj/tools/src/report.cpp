#include "twistzhu/cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace twistzhu::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

void Report::add(CheckRecord record) {
  if (record.status == Status::skipped && record.reason.empty())
    throw std::logic_error("skipped check " + record.id + " carries no reason");
  records_.push_back(std::move(record));
}

int Report::count(Status s) const {
  int n = 0;
  for (const auto& r : records_) n += r.status == s;
  return n;
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& r : records_) {
    Json j;
    j["id"] = r.id;
    j["description"] = r.description;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["details"] = r.details;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.reason.empty()) j["reason"] = r.reason;
    checks.push_back(std::move(j));
  }
  Json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", "twistzhu"}, {"version", kToolVersion}};
  doc["config"] = config_;
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"total", records_.size()},
                    {"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"skipped", count(Status::skipped)}};
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "twistzhu " << kToolVersion << " verify " << config_.dump() << '\n';
  for (const auto& r : records_) {
    os << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "SKIP ")
       << r.id << "  " << r.description;
    if (!r.reason.empty()) os << "  [" << r.reason << ']';
    os << '\n';
    for (const auto& n : r.notes) os << "      note: " << n << '\n';
  }
  os << "summary: " << count(Status::pass) << " passed, " << count(Status::fail) << " failed, "
     << count(Status::skipped) << " skipped, " << records_.size() << " total\n";
  return os.str();
}

}  // namespace twistzhu::cli
