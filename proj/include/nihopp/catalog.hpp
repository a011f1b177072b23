#pragma once

// Machine-checked table of known parameters i, per m.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "nihopp/exponents.hpp"
#include "nihopp/permcheck.hpp"

namespace nihopp {

inline constexpr int kMaxVerifiedM = kMaxExhaustiveDegree / 2;
inline constexpr int kMaxCatalogM = 20;

struct TableEntry {
  u64 i = 0;
  u64 j = 0;
  u64 s = 0;
  std::optional<u64> residue;  // 1 or 2^k mod (2^m+1); absent for external rows
  bool verified = false;
};

struct TableRow {
  int m = 0;
  std::string family;
  std::string condition;
  std::optional<int> k;
  std::string source;  // "congruence" or "external"
  std::string delta_policy;
  std::vector<TableEntry> entries;

  bool verified() const {
    for (const auto& e : entries) {
      if (!e.verified) return false;
    }
    return !entries.empty();
  }
};

class VerificationCache {
 public:
  bool verified(int m, u64 i, const DeltaPolicy& policy) {
    const auto key = std::make_pair(m, i);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const bool ok = verify_construction(field(m), m, i, policy).all_pass();
    cache_.emplace(key, ok);
    return ok;
  }

 private:
  const Field& field(int m) {
    auto it = fields_.find(m);
    if (it == fields_.end()) it = fields_.emplace(m, Field::make(2 * m)).first;
    return it->second;
  }

  std::map<std::pair<int, u64>, bool> cache_;
  std::map<int, Field> fields_;
};

// Rows for every m in [m_min, m_max]. Entries with m <= 8 are verified under
// the default delta policy; larger m are emitted with verified = false.
inline std::vector<TableRow> build_table(int m_min, int m_max, bool verify = true) {
  if (m_min < 2 || m_max < m_min || m_max > kMaxCatalogM) {
    throw std::invalid_argument(fmt::format("table: need 2 <= m_min <= m_max <= {}", kMaxCatalogM));
  }
  VerificationCache cache;
  std::vector<TableRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    const bool check = verify && m <= kMaxVerifiedM;
    const DeltaPolicy policy = DeltaPolicy::default_for(m);
    const auto witnesses = corollary_catalog(m);
    for (const auto& cf : closed_form_rows(m)) {
      TableRow row;
      row.m = m;
      row.family = cf.family;
      row.condition = cf.condition;
      row.k = cf.k;
      row.source = cf.k ? "congruence" : "external";
      row.delta_policy = check ? policy.label() : "none";
      for (const auto& w : witnesses) {
        if (w.family != cf.family) continue;
        TableEntry e;
        e.i = w.i;
        e.j = w.j;
        e.s = w.s;
        if (w.params) e.residue = w.params->residue();
        e.verified = check && cache.verified(m, w.i, policy);
        row.entries.push_back(e);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
inline std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

// Columns: m,k,class,i,j,s,source,delta_policy,verified
inline std::string emit_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "m,k,class,i,j,s,source,delta_policy,verified\n";
  for (const auto& r : rows) {
    for (const auto& e : r.entries) {
      out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.m, opt_str(r.k), opt_str(e.residue), e.i, e.j, e.s,
                         r.source, r.delta_policy, e.verified ? "true" : "false");
    }
  }
  return out.str();
}

}  // namespace nihopp
