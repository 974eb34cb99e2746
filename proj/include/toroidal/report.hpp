#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace toroidal {

enum class Status { Pass, Fail, Warn, Info };

std::string to_string(Status s);

struct ReportEntry {
  std::string clause;
  Status status = Status::Pass;
  std::string message;
  nlohmann::json witness;  // null when there is nothing to show
};

/// Ordered list of validator outcomes. Validators append; they never throw on a
/// mathematical violation.
class Report {
 public:
  void pass(std::string clause, std::string message = {}, nlohmann::json witness = nullptr);
  void fail(std::string clause, std::string message, nlohmann::json witness = nullptr);
  void warn(std::string clause, std::string message, nlohmann::json witness = nullptr);
  void info(std::string clause, std::string message, nlohmann::json witness = nullptr);
  void append(const Report& other, const std::string& prefix = {});

  bool ok() const;
  bool has_failure(const std::string& clause) const;
  const std::vector<ReportEntry>& entries() const { return entries_; }
  const ReportEntry* find(const std::string& clause) const;

  nlohmann::json to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace toroidal
