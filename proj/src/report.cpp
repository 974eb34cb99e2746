#include "toroidal/report.hpp"

namespace toroidal {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
    case Status::Info: return "info";
  }
  return "unknown";
}

void Report::pass(std::string clause, std::string message, nlohmann::json witness) {
  entries_.push_back({std::move(clause), Status::Pass, std::move(message), std::move(witness)});
}

void Report::fail(std::string clause, std::string message, nlohmann::json witness) {
  entries_.push_back({std::move(clause), Status::Fail, std::move(message), std::move(witness)});
}

void Report::warn(std::string clause, std::string message, nlohmann::json witness) {
  entries_.push_back({std::move(clause), Status::Warn, std::move(message), std::move(witness)});
}

void Report::info(std::string clause, std::string message, nlohmann::json witness) {
  entries_.push_back({std::move(clause), Status::Info, std::move(message), std::move(witness)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    if (!prefix.empty()) e.clause = prefix + "." + e.clause;
    entries_.push_back(std::move(e));
  }
}

bool Report::ok() const {
  for (const auto& e : entries_)
    if (e.status == Status::Fail) return false;
  return true;
}

bool Report::has_failure(const std::string& clause) const {
  for (const auto& e : entries_)
    if (e.clause == clause && e.status == Status::Fail) return true;
  return false;
}

const ReportEntry* Report::find(const std::string& clause) const {
  for (const auto& e : entries_)
    if (e.clause == clause) return &e;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j = {{"clause", e.clause}, {"status", to_string(e.status)}, {"witness", e.witness}};
    if (!e.message.empty()) j["message"] = e.message;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace toroidal
