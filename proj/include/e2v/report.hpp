#pragma once

// Check records and reports.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace e2v {

enum class Status { pass, fail, discrepancy };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy: return "discrepancy";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  std::string witness;
  std::string note;

  bool passed() const { return status == Status::pass; }
};

inline CheckRecord make_record(std::string id, bool ok, std::string lhs = {}, std::string rhs = {},
                               std::string witness = {}) {
  CheckRecord r;
  r.id = std::move(id);
  r.status = ok ? Status::pass : Status::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.witness = std::move(witness);
  return r;
}

struct CheckReport {
  std::string suite;
  std::vector<CheckRecord> records;
  std::map<std::string, std::string> preset_digests;
  std::string tool_version;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
  }
  bool all_pass() const { return count(Status::pass) == records.size(); }

  /// 0 all pass, 1 any fail, 2 discrepancies but no failure.
  int exit_code() const {
    if (count(Status::fail) > 0) return 1;
    if (count(Status::discrepancy) > 0) return 2;
    return 0;
  }

  void sort_records() {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["tool_version"] = tool_version;
    j["preset_digests"] = preset_digests;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) {
      nlohmann::json x;
      x["id"] = r.id;
      x["anchor"] = r.anchor;
      x["status"] = status_str(r.status);
      x["lhs_canonical"] = r.lhs;
      x["rhs_canonical"] = r.rhs;
      x["witness"] = r.witness;
      if (!r.note.empty()) x["note"] = r.note;
      recs.push_back(std::move(x));
    }
    j["checks"] = std::move(recs);
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"discrepancy", count(Status::discrepancy)},
                    {"total", records.size()}};
    return j;
  }

  std::string to_text() const {
    std::size_t w = 2;
    for (const auto& r : records) w = std::max(w, r.id.size());
    std::string out = "suite: " + suite + "\n";
    for (const auto& r : records) {
      std::string line = r.id;
      line.resize(w + 2, ' ');
      std::string st = status_str(r.status);
      st.resize(12, ' ');
      line += st;
      if (!r.anchor.empty()) line += "[" + r.anchor + "] ";
      if (!r.lhs.empty() || !r.rhs.empty()) line += r.lhs + "  vs  " + r.rhs;
      if (!r.witness.empty()) line += "  witness: " + r.witness;
      if (!r.note.empty()) line += "  (" + r.note + ")";
      out += line + "\n";
    }
    out += "pass " + std::to_string(count(Status::pass)) + ", fail " + std::to_string(count(Status::fail)) +
           ", discrepancy " + std::to_string(count(Status::discrepancy)) + "\n";
    return out;
  }
};

}  // namespace e2v
