#pragma once

// Exhaustive permutation testing of f(x) = (conj(x) + x + delta)^s + x over
// GF(2^(2m)).

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "nihopp/exponents.hpp"
#include "nihopp/field.hpp"
#include "nihopp/parallel.hpp"

namespace nihopp {

inline constexpr int kMaxExhaustiveDegree = 16;
inline constexpr int kMaxAllDeltaDegree = 12;

class FieldTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// SplitMix64 (Steele, Lea, Flood 2014), the seeding generator of xoshiro.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct PPInstance {
  int m = 0;
  Field field;
  Element delta;
  u64 s = 1;
  std::optional<u64> i;  // set when s is a normalized Niho exponent

  PPInstance(Field f, int m_, Element d, u64 s_, std::optional<u64> i_ = std::nullopt)
      : m(m_), field(std::move(f)), delta(d), s(s_), i(i_) {
    if (field.degree() != 2 * m) {
      throw std::invalid_argument(fmt::format("instance: field degree {} is not 2m = {}", field.degree(), 2 * m));
    }
    if (!field.contains(delta)) throw std::invalid_argument("instance: delta outside the field");
    if (s < 1) throw std::invalid_argument("instance: exponent s must be >= 1");
  }

  static PPInstance niho(const Field& f, int m, u64 i, Element delta) {
    return PPInstance(f, m, delta, niho_exponent(m, i).s, i);
  }
};

struct PermutationReport {
  int m = 0;
  std::uint64_t modulus = 0;
  Element delta;
  std::optional<u64> i;
  u64 s = 0;
  bool is_permutation = false;
  std::optional<std::pair<Element, Element>> counterexample;
  std::uint64_t evaluations = 0;
  double elapsed_ms = 0.0;
};

inline Element evaluate_f(const PPInstance& inst, Element x) {
  const Field& F = inst.field;
  const Element w = F.conjugate(x, inst.m) + x + inst.delta;
  return F.pow(w, inst.s) + x;
}

namespace detail {

// Table-driven evaluator with the exponent reduced once per instance.
class FastEvaluator {
 public:
  explicit FastEvaluator(const PPInstance& inst)
      : inst_(inst),
        log_(inst.field.log_table()),
        antilog_(inst.field.antilog_table()),
        order_(inst.field.order()),
        s_red_(inst.s % inst.field.order()),
        delta_(inst.delta.bits) {}

  std::uint32_t operator()(std::uint32_t x) const {
    if (log_ == nullptr) return evaluate_f(inst_, Element(x)).bits;
    const std::uint32_t w = inst_.field.conjugate(Element(x), inst_.m).bits ^ x ^ delta_;
    if (w == 0) return x;  // s >= 1
    return (*antilog_)[(static_cast<std::uint64_t>((*log_)[w]) * s_red_) % order_] ^ x;
  }

 private:
  const PPInstance& inst_;
  const std::vector<std::uint32_t>* log_;
  const std::vector<std::uint32_t>* antilog_;
  std::uint64_t order_;
  std::uint64_t s_red_;
  std::uint32_t delta_;
};

}  // namespace detail

inline PermutationReport is_permutation_exhaustive(const PPInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  const Field& F = inst.field;
  if (F.degree() > kMaxExhaustiveDegree) {
    throw FieldTooLarge(fmt::format("exhaustive check needs 2m <= {}, got {}", kMaxExhaustiveDegree, F.degree()));
  }
  PermutationReport rep;
  rep.m = inst.m;
  rep.modulus = F.modulus();
  rep.delta = inst.delta;
  rep.i = inst.i;
  rep.s = inst.s;

  const detail::FastEvaluator f(inst);
  const std::uint32_t q = static_cast<std::uint32_t>(F.size());
  std::vector<std::uint64_t> seen((q + 63) / 64, 0);
  bool collision = false;
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t y = f(x);
    ++rep.evaluations;
    std::uint64_t& word = seen[y >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (y & 63);
    if (word & bit) {
      collision = true;
      break;
    }
    word |= bit;
  }

  rep.is_permutation = !collision;
  if (collision) {
    // Lexicographically smallest (x1, x2), x1 < x2, with f(x1) = f(x2).
    std::vector<std::uint32_t> image(q);
    std::vector<std::uint8_t> hits(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      image[x] = f(x);
      if (hits[image[x]] < 2) ++hits[image[x]];
    }
    rep.evaluations += q;
    for (std::uint32_t x1 = 0; x1 < q && !rep.counterexample; ++x1) {
      if (hits[image[x1]] < 2) continue;
      for (std::uint32_t x2 = x1 + 1; x2 < q; ++x2) {
        if (image[x2] == image[x1]) {
          rep.counterexample = std::make_pair(Element(x1), Element(x2));
          break;
        }
      }
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// True iff Tr_m^{2m}(delta) = 0, i.e. delta lies in GF(2^m); then f permutes for every s.
inline bool trace_zero_shortcut(const Field& F, int m, Element delta) {
  return F.rel_trace(delta, m).is_zero();
}

struct DeltaPolicy {
  enum class Kind { All, Sample };
  Kind kind = Kind::All;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static DeltaPolicy all() { return {Kind::All, 0, 0}; }
  static DeltaPolicy sample(std::size_t count, std::uint64_t seed) { return {Kind::Sample, count, seed}; }

  // ALL for 2m <= 12, SAMPLE(64, seed 1) above.
  static DeltaPolicy default_for(int m) { return 2 * m <= kMaxAllDeltaDegree ? all() : sample(64, 1); }

  std::string label() const {
    return kind == Kind::All ? std::string("all") : fmt::format("sample({},{})", count, seed);
  }
};

// Ascending list of deltas selected by the policy. SAMPLE always contains 0
// and the smallest delta with nonzero relative trace, then draws from
// SplitMix64(seed) (low 2m bits) until `count` distinct values are collected.
inline std::vector<Element> select_deltas(const Field& F, int m, const DeltaPolicy& policy) {
  if (policy.kind == DeltaPolicy::Kind::All) {
    if (F.degree() > kMaxAllDeltaDegree) {
      throw FieldTooLarge(fmt::format("ALL-delta sweep needs 2m <= {}, got {}", kMaxAllDeltaDegree, F.degree()));
    }
    return F.elements();
  }
  const std::size_t target = std::min<std::uint64_t>(policy.count, F.size());
  std::set<Element> chosen;
  if (target >= 1) chosen.insert(kZero);
  if (target >= 2) {
    for (std::uint64_t v = 1; v < F.size(); ++v) {
      const Element d(static_cast<std::uint32_t>(v));
      if (!trace_zero_shortcut(F, m, d)) {
        chosen.insert(d);
        break;
      }
    }
  }
  SplitMix64 rng(policy.seed);
  const std::uint64_t mask = F.size() - 1;
  while (chosen.size() < target) chosen.insert(Element(static_cast<std::uint32_t>(rng.next() & mask)));
  return {chosen.begin(), chosen.end()};
}

struct VerificationSummary {
  int m = 0;
  u64 i = 0;
  u64 s = 0;
  DeltaPolicy policy;
  std::vector<PermutationReport> reports;  // ascending delta

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.is_permutation ? 1 : 0;
    return n;
  }
  bool all_pass() const { return passed() == reports.size(); }
};

inline VerificationSummary verify_exponent(const Field& F, int m, u64 s, std::optional<u64> i,
                                           const DeltaPolicy& policy) {
  if (F.degree() > kMaxExhaustiveDegree) {
    throw FieldTooLarge(fmt::format("exhaustive check needs 2m <= {}, got {}", kMaxExhaustiveDegree, F.degree()));
  }
  const auto deltas = select_deltas(F, m, policy);
  VerificationSummary sum;
  sum.m = m;
  sum.i = i.value_or(0);
  sum.s = s;
  sum.policy = policy;
  sum.reports.resize(deltas.size());
  parallel_for(deltas.size(), [&](std::size_t idx) {
    sum.reports[idx] = is_permutation_exhaustive(PPInstance(F, m, deltas[idx], s, i));
  });
  return sum;
}

inline VerificationSummary verify_construction(const Field& F, int m, u64 i, const DeltaPolicy& policy) {
  return verify_exponent(F, m, niho_exponent(m, i).s, i, policy);
}

inline VerificationSummary verify_construction(int m, u64 i, const DeltaPolicy& policy) {
  if (2 * m > kMaxExhaustiveDegree) {
    throw FieldTooLarge(fmt::format("exhaustive check needs 2m <= {}, got {}", kMaxExhaustiveDegree, 2 * m));
  }
  return verify_construction(Field::make(2 * m), m, i, policy);
}

}  // namespace nihopp
