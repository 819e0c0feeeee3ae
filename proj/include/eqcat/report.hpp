#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqcat/matrix.hpp"

namespace eqcat {

using json = nlohmann::json;

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

struct CheckItem {
  std::string id;       // "family:detail", e.g. "eq-morphism:N_x[K=..]"
  bool ok = true;
  std::string message;
  json witness;         // populated on failure
};

/// Family of a check id: the text before the first ':', or for ids nested under task
/// prefixes ("suite/context/.../name:detail") the suite and the innermost name.
inline std::string check_family(const std::string& id) {
  const auto colon = id.find(':');
  const auto slash = id.find('/');
  if (slash == std::string::npos || slash > colon) return id.substr(0, colon);
  const auto last = id.rfind('/', colon == std::string::npos ? std::string::npos : colon);
  const auto end = colon == std::string::npos ? id.size() : colon;
  return id.substr(0, slash) + "/" + id.substr(last + 1, end - last - 1);
}

/// Outcome of a batch of exact checks. Items keep their insertion order.
class CheckReport {
 public:
  void add(std::string id, bool ok, std::string message = {}, json witness = nullptr) {
    items_.push_back({std::move(id), ok, std::move(message), std::move(witness)});
  }
  void pass(std::string id) { add(std::move(id), true); }
  void fail(std::string id, std::string message, json witness = nullptr) {
    add(std::move(id), false, std::move(message), std::move(witness));
  }
  /// Appends the other report's items, prefixing their ids.
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& it : other.items_) items_.push_back({prefix + it.id, it.ok, it.message, it.witness});
  }

  bool ok() const {
    for (const auto& it : items_)
      if (!it.ok) return false;
    return true;
  }
  std::size_t size() const { return items_.size(); }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& it : items_) n += !it.ok;
    return n;
  }
  const std::vector<CheckItem>& items() const { return items_; }
  const CheckItem* first_failure() const {
    for (const auto& it : items_)
      if (!it.ok) return &it;
    return nullptr;
  }

  /// Summary grouped by id family (see check_family), plus the first
  /// `max_failures` failures in full.
  json to_json(std::size_t max_failures = 20) const {
    std::map<std::string, std::pair<std::size_t, std::size_t>> fam;
    json fails = json::array();
    for (const auto& it : items_) {
      auto& c = fam[check_family(it.id)];
      if (it.ok) {
        ++c.first;
      } else {
        ++c.second;
        if (fails.size() < max_failures)
          fails.push_back({{"id", it.id}, {"message", it.message}, {"witness", it.witness}});
      }
    }
    json summary = json::object();
    for (const auto& [k, v] : fam) summary[k] = {{"passed", v.first}, {"failed", v.second}};
    return {{"ok", ok()}, {"total", items_.size()}, {"failed", failures()}, {"summary", summary}, {"failures", fails}};
  }

 private:
  std::vector<CheckItem> items_;
};

}  // namespace eqcat
