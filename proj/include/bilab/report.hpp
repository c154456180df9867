#pragma once

// Verification reports shared by every checker.
//
// A report is a flat list of entries. Entries marked `required = false`
// record statements that are known not to hold (variants of an
// identity that the checker adjudicated against); they never make a
// report fail.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bilab {

using Json = nlohmann::ordered_json;

struct ReportEntry {
  std::string relation;
  long long degree = 0;  // monomial degree, basis index or slice, per checker
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool required = true;
  std::optional<double> residual;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

  void add(ReportEntry e) { entries_.push_back(std::move(e)); }

  void add_exact(std::string relation, long long degree, std::string lhs, std::string rhs) {
    bool pass = lhs == rhs;
    add({std::move(relation), degree, std::move(lhs), std::move(rhs), pass, true, std::nullopt});
  }

  /// Records `pass` with lhs/rhs kept only on failure.
  void add_result(std::string relation, long long degree, bool pass, std::string lhs = {},
                  std::string rhs = {}, bool required = true) {
    if (pass) {
      lhs.clear();
      rhs.clear();
    }
    add({std::move(relation), degree, std::move(lhs), std::move(rhs), pass, required, std::nullopt});
  }

  void add_residual(std::string relation, long long degree, double residual, double tolerance) {
    bool pass = residual <= tolerance;
    add({std::move(relation), degree, {}, "<= " + fmt_double(tolerance), pass, true, residual});
  }

  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

  void merge(const VerificationReport& other) {
    for (const auto& e : other.entries_) entries_.push_back(e);
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  std::size_t checked() const { return entries_.size(); }
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
      if (e.required && !e.pass) ++n;
    return n;
  }
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
      if (e.pass) ++n;
    return n;
  }
  bool ok() const { return failed() == 0; }

  double max_residual(const std::string& relation_prefix = {}) const {
    double m = 0;
    for (const auto& e : entries_)
      if (e.residual && e.relation.rfind(relation_prefix, 0) == 0) m = std::max(m, *e.residual);
    return m;
  }

  /// Full JSON; with `failures_only` passing entries are dropped.
  Json to_json(bool failures_only = false) const {
    Json out;
    out["name"] = name_;
    Json items = Json::array();
    for (const auto& e : entries_) {
      if (failures_only && e.pass && e.required) continue;
      Json j;
      j["relation"] = e.relation;
      j["degree"] = e.degree;
      j["lhs"] = e.lhs;
      j["rhs"] = e.rhs;
      j["pass"] = e.pass;
      if (!e.required) j["required"] = false;
      if (e.residual) j["residual"] = fmt_double(*e.residual);
      items.push_back(std::move(j));
    }
    out["entries"] = std::move(items);
    if (!notes_.empty()) {
      Json n = Json::object();
      for (const auto& [k, v] : notes_) n[k] = v;
      out["notes"] = std::move(n);
    }
    out["summary"] = {{"checked", checked()}, {"passed", passed()}, {"failed", failed()}, {"ok", ok()}};
    return out;
  }

  static std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
  }

 private:
  std::string name_;
  std::vector<ReportEntry> entries_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace bilab
