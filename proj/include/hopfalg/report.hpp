#pragma once

#include "field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfalg {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "";
}

using Witness = std::optional<std::vector<size_t>>;

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::vector<size_t> witness;
  std::string note;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  Check& add(std::string name, bool ok, std::vector<size_t> witness = {}, std::string note = {}) {
    checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness), std::move(note)});
    return checks.back();
  }
  Check& add(std::string name, const Witness& w, std::string note = {}) {
    return add(std::move(name), !w, w.value_or(std::vector<size_t>{}), std::move(note));
  }
  void skip(std::string name, std::string why) { checks.push_back({std::move(name), Status::Skipped, {}, std::move(why)}); }

  void append(const Report& o, const std::string& prefix = "") {
    for (auto c : o.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }

  bool ok() const { return !first_failure(); }
  const Check* first_failure() const {
    for (auto& c : checks)
      if (c.status == Status::Fail) return &c;
    return nullptr;
  }
  const Check* find(const std::string& name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  json to_json() const {
    json j;
    j["title"] = title;
    j["ok"] = ok();
    json arr = json::array();
    for (auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["status"] = status_name(c.status);
      if (!c.witness.empty()) e["witness"] = c.witness;
      if (!c.note.empty()) e["note"] = c.note;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
  }
};

// Lexicographically first index tuple where pred fails.
template <class P>
Witness scan1(size_t n, P pred) {
  for (size_t i = 0; i < n; ++i)
    if (!pred(i)) return std::vector<size_t>{i};
  return std::nullopt;
}
template <class P>
Witness scan2(size_t n, size_t m, P pred) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      if (!pred(i, j)) return std::vector<size_t>{i, j};
  return std::nullopt;
}
template <class P>
Witness scan3(size_t n, size_t m, size_t l, P pred) {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < l; ++k)
        if (!pred(i, j, k)) return std::vector<size_t>{i, j, k};
  return std::nullopt;
}

}  // namespace hopfalg
