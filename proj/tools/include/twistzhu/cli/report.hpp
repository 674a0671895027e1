#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace twistzhu::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "twistzhu.report/1";
inline constexpr const char* kToolVersion = "0.3.0";

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  std::string description;
  std::string anchor;
  Status status = Status::pass;
  Json details = Json::object();
  /// Convention notes attached to the check (possibly empty).
  std::vector<std::string> notes;
  /// Required when status is skipped; optional hint for failures.
  std::string reason;
};

/// One run of `verify`. Records keep insertion order, which the suites fix
/// independently of evaluation order.
class Report {
 public:
  explicit Report(Json config) : config_(std::move(config)) {}

  void add(CheckRecord record);
  const std::vector<CheckRecord>& records() const { return records_; }

  int count(Status s) const;
  bool any_failed() const { return count(Status::fail) > 0; }

  Json to_json() const;
  std::string to_text() const;

 private:
  Json config_;
  std::vector<CheckRecord> records_;
};

}  // namespace twistzhu::cli
