#pragma once

// Numerical checks of the lemmas and proof devices behind the construction:
// the affine equation conj(x) + a x + b = 0, the Moebius parametrization of the
// unit circle, the power-sum identity, the U1/U2 split of U, the lambda
// equation and its z-substitution, the unit-pair trace, and the Case II
// solution formula.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "nihopp/exponents.hpp"
#include "nihopp/field.hpp"
#include "nihopp/permcheck.hpp"

namespace nihopp {

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// --- affine equation conj(x) + a x + b = 0 ---

struct AffineSolutionClass {
  enum class Kind { Unique, SubfieldMany, None };
  Kind kind = Kind::None;
  std::optional<Element> solution;
  std::uint64_t count = 0;
};

inline const char* to_string(AffineSolutionClass::Kind k) {
  switch (k) {
    case AffineSolutionClass::Kind::Unique: return "unique";
    case AffineSolutionClass::Kind::SubfieldMany: return "subfield-many";
    case AffineSolutionClass::Kind::None: return "none";
  }
  return "?";
}

inline AffineSolutionClass affine_solutions(const Field& F, Element a, Element b, int m) {
  const Element abar = F.conjugate(a, m);
  const Element bbar = F.conjugate(b, m);
  const Element norm_plus_one = F.mul(a, abar) + kOne;
  const Element numer = F.mul(abar, b) + bbar;
  if (!norm_plus_one.is_zero()) return {AffineSolutionClass::Kind::Unique, F.div(numer, norm_plus_one), 1};
  if (numer.is_zero()) return {AffineSolutionClass::Kind::SubfieldMany, std::nullopt, pow2(m)};
  return {AffineSolutionClass::Kind::None, std::nullopt, 0};
}

inline Element affine_residual(const Field& F, Element a, Element b, Element x, int m) {
  return F.conjugate(x, m) + F.mul(a, x) + b;
}

inline std::uint64_t count_affine_roots(const Field& F, Element a, Element b, int m) {
  std::uint64_t n = 0;
  for (std::uint64_t v = 0; v < F.size(); ++v) {
    n += affine_residual(F, a, b, Element(static_cast<std::uint32_t>(v)), m).is_zero() ? 1 : 0;
  }
  return n;
}

// --- Moebius map z -> (conj(theta) + z) / (theta + z) ---

inline Element mobius_map(const Field& F, Element theta, Element z, int m) {
  if (F.in_subfield(theta, m)) throw PreconditionViolation("mobius_map: theta lies in GF(2^m)");
  if (!F.in_subfield(z, m)) throw PreconditionViolation("mobius_map: z must lie in GF(2^m)");
  return F.div(F.conjugate(theta, m) + z, theta + z);
}

// --- power-sum identity ---
// x^(2^k+1) + y^(2^k+1) = (x+y)^(2^k+1) + sum_{l<k} (xy)^(2^l) (x+y)^(2^k - 2^(l+1) + 1)

inline bool power_sum_identity_check(const Field& F, Element x, Element y, int k) {
  if (k < 1 || k > 62) throw std::out_of_range("power_sum_identity_check: k must be in [1, 62]");
  const u64 e = pow2(k) + 1;
  const Element lhs = F.pow(x, e) + F.pow(y, e);
  const Element sum = x + y;
  const Element prod = F.mul(x, y);
  Element rhs = F.pow(sum, e);
  for (int l = 0; l < k; ++l) {
    rhs += F.mul(F.pow(prod, pow2(l)), F.pow(sum, pow2(k) - pow2(l + 1) + 1));
  }
  return lhs == rhs;
}

// --- U1 / U2 split ---

struct UnitCirclePartition {
  std::vector<Element> u1;  // (1 + conj(l))(1 + l) = 1
  std::vector<Element> u2;
};

inline bool in_u1(const Field& F, Element lambda, int m) {
  return F.mul(kOne + F.conjugate(lambda, m), kOne + lambda) == kOne;
}

inline UnitCirclePartition partition_unit_circle(const Field& F, int m) {
  UnitCirclePartition p;
  for (Element l : F.unit_circle(m)) (in_u1(F, l, m) ? p.u1 : p.u2).push_back(l);
  return p;
}

// --- case context ---

struct CaseContext {
  int m = 0;
  int k = 0;
  Element delta;
  Element gamma;
  Element theta;  // delta + gamma + conj(gamma)
};

inline CaseContext make_case_context(const Field& F, int m, int k, Element delta, Element gamma) {
  if (k < 1) throw std::out_of_range("case context: k must be >= 1");
  return {m, k, delta, gamma, delta + F.rel_trace(gamma, m)};
}

// theta^2 + theta conj(theta) + conj(theta)^2 = 0
inline bool is_case_one(const Field& F, const CaseContext& ctx) {
  const Element th = ctx.theta;
  const Element tb = F.conjugate(th, ctx.m);
  return (F.square(th) + F.mul(th, tb) + F.square(tb)).is_zero();
}

inline void require_nonzero_trace(const Field& F, const CaseContext& ctx, const char* what) {
  if (F.rel_trace(ctx.delta, ctx.m).is_zero()) {
    throw PreconditionViolation(fmt::format("{}: delta has zero relative trace", what));
  }
}

// conj(th) l^(2^k+1) + (th + conj(th)) l^(2^k) + (th + conj(th)) l + th
inline Element lambda_equation_value(const Field& F, const CaseContext& ctx, Element lambda) {
  const Element th = ctx.theta;
  const Element tb = F.conjugate(th, ctx.m);
  const Element tr = th + tb;
  const Element l2k = F.frobenius(lambda, ctx.k);
  return F.mul(tb, F.mul(l2k, lambda)) + F.mul(tr, l2k) + F.mul(tr, lambda) + th;
}

// All roots of the lambda equation on U, in unit-circle order.
inline std::vector<Element> lambda_equation_roots(const Field& F, const CaseContext& ctx,
                                                  const std::vector<Element>& circle) {
  require_nonzero_trace(F, ctx, "lambda_equation_roots");
  std::vector<Element> roots;
  for (Element l : circle) {
    if (lambda_equation_value(F, ctx, l).is_zero()) roots.push_back(l);
  }
  return roots;
}

inline std::vector<Element> lambda_equation_roots(const Field& F, const CaseContext& ctx) {
  return lambda_equation_roots(F, ctx, F.unit_circle(ctx.m));
}

// (th + conj(th)) z^(2^k+1) + (th^(2^k) conj(th) + conj(th)^(2^k) th) z
//   + (th^(2^k) + conj(th)^(2^k)) (th^2 + th conj(th) + conj(th)^2)
struct ZEquation {
  Element lead;
  Element linear;
  Element constant;
};

inline ZEquation z_equation(const Field& F, const CaseContext& ctx) {
  const Element th = ctx.theta;
  const Element tb = F.conjugate(th, ctx.m);
  const Element th2k = F.frobenius(th, ctx.k);
  const Element tb2k = F.frobenius(tb, ctx.k);
  return {th + tb, F.mul(th2k, tb) + F.mul(tb2k, th),
          F.mul(th2k + tb2k, F.square(th) + F.mul(th, tb) + F.square(tb))};
}

inline Element z_equation_value(const Field& F, const ZEquation& eq, int k, Element z) {
  return F.mul(eq.lead, F.mul(F.frobenius(z, k), z)) + F.mul(eq.linear, z) + eq.constant;
}

// z in GF(2^m) solves the z-equation iff mobius_map(theta, z) solves the lambda equation.
inline bool z_substitution_check(const Field& F, const CaseContext& ctx, const std::vector<Element>& subfield) {
  require_nonzero_trace(F, ctx, "z_substitution_check");
  const ZEquation eq = z_equation(F, ctx);
  for (Element z : subfield) {
    const bool z_root = z_equation_value(F, eq, ctx.k, z).is_zero();
    const bool l_root = lambda_equation_value(F, ctx, mobius_map(F, ctx.theta, z, ctx.m)).is_zero();
    if (z_root != l_root) return false;
  }
  return true;
}

inline bool z_substitution_check(const Field& F, const CaseContext& ctx) {
  return z_substitution_check(F, ctx, F.subfield_elements(ctx.m));
}

// Tr_1^m(l1 l2 / (l1 + l2)^2) for distinct l1, l2 on U.
inline int unit_pair_trace(const Field& F, Element l1, Element l2, int m) {
  if (l1 == l2) throw PreconditionViolation("unit_pair_trace: inputs must differ");
  if (!F.on_unit_circle(l1, m) || !F.on_unit_circle(l2, m)) {
    throw PreconditionViolation("unit_pair_trace: inputs must lie on the unit circle");
  }
  const Element arg = F.div(F.mul(l1, l2), F.square(l1 + l2));
  if (!F.in_subfield(arg, m)) throw std::logic_error("unit_pair_trace: argument escaped GF(2^m)");
  return F.subfield_trace(arg, m);
}

// x = ((1+conj(l))(delta + l gamma) + conj(delta) + conj(l) conj(gamma)) / ((1+conj(l))(1+l) + 1)
inline Element case2_solution(const Field& F, Element lambda, const CaseContext& ctx) {
  const int m = ctx.m;
  const Element lb = F.conjugate(lambda, m);
  const Element denom = F.mul(kOne + lb, kOne + lambda) + kOne;
  if (denom.is_zero()) throw PreconditionViolation("case2_solution: lambda lies in U1");
  const Element numer = F.mul(kOne + lb, ctx.delta + F.mul(lambda, ctx.gamma)) + F.conjugate(ctx.delta, m) +
                        F.mul(lb, F.conjugate(ctx.gamma, m));
  return F.div(numer, denom);
}

// conj(x) + (1 + l) x + delta + l gamma
inline Element case2_residual(const Field& F, Element lambda, const CaseContext& ctx, Element x) {
  return F.conjugate(x, ctx.m) + F.mul(kOne + lambda, x) + ctx.delta + F.mul(lambda, ctx.gamma);
}

// (th + conj(th) + conj(l) th) / (1 + l + conj(l)), the closed form of x + gamma.
inline Element case2_shifted_closed_form(const Field& F, Element lambda, const CaseContext& ctx) {
  const Element th = ctx.theta;
  const Element tb = F.conjugate(th, ctx.m);
  const Element lb = F.conjugate(lambda, ctx.m);
  return F.div(th + tb + F.mul(lb, th), kOne + lambda + lb);
}

// For a point x with gamma = f(x): lambda = w / (x + gamma), w = conj(x) + x + delta,
// returns l^(1-2i) (conj(x) + conj(gamma))^i + (x + gamma)^i. The negative
// exponent is reduced mod 2^(2m) - 1, which is valid since l != 0.
inline Element lambda_power_residual(const Field& F, int m, u64 i, Element delta, Element x) {
  const u64 s = niho_exponent(m, i).s;
  const Element w = F.conjugate(x, m) + x + delta;
  const Element shift = F.pow(w, s);  // x + gamma
  if (shift.is_zero()) throw PreconditionViolation("lambda_power_residual: x equals gamma");
  const Element lambda = F.div(w, shift);
  const u64 ord = F.order();
  const u64 e = (1 + ord - (2 * i) % ord) % ord;
  return F.mul(F.pow(lambda, e), F.pow(F.conjugate(shift, m), i)) + F.pow(shift, i);
}

// --- suites ---

struct SuiteSummary {
  std::string suite;
  int m = 0;
  std::optional<int> k;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> first_violation;

  void fail(std::string what) {
    ++violations;
    if (!first_violation) first_violation = std::move(what);
  }
  bool ok() const { return violations == 0 && cases > 0; }
};

inline SuiteSummary start_suite(std::string name, int m) {
  SuiteSummary s;
  s.suite = std::move(name);
  s.m = m;
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma22", "lemma23", "lemma24", "partition", "eq309",
                                              "eq315",   "trace-pair", "case2", "eq305"};
  return names;
}

// k values covered by a sufficient condition: opposite parity, or both even with k | m, m/k even.
inline std::vector<int> admissible_ks(int m) {
  std::vector<int> ks;
  for (int k = 1; k <= m - 1; ++k) {
    if (classify_parameters(m, k).first != Provenance::Unproven) ks.push_back(k);
  }
  return ks;
}

// All gamma for 2m <= 12, otherwise 256 seeded draws.
inline std::vector<Element> gamma_sweep(const Field& F, int m) {
  if (2 * m <= kMaxAllDeltaDegree) return F.elements();
  return select_deltas(F, m, DeltaPolicy::sample(256, 1));
}

inline SuiteSummary run_affine_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("lemma22", m);
  for (Element a : F.elements()) {
    for (Element b : F.elements()) {
      ++s.cases;
      const auto cls = affine_solutions(F, a, b, m);
      const std::uint64_t brute = count_affine_roots(F, a, b, m);
      bool good = brute == cls.count;
      if (good && cls.solution) good = affine_residual(F, a, b, *cls.solution, m).is_zero();
      if (!good) {
        s.fail(fmt::format("a={} b={}: class {} count {} vs brute force {}", to_hex(a), to_hex(b),
                           to_string(cls.kind), cls.count, brute));
      }
    }
  }
  return s;
}

inline SuiteSummary run_mobius_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("lemma23", m);
  const auto sub = F.subfield_elements(m);
  std::vector<Element> expected;
  for (Element l : F.unit_circle(m)) {
    if (l != kOne) expected.push_back(l);
  }
  std::sort(expected.begin(), expected.end());
  for (Element theta : F.elements()) {
    if (F.in_subfield(theta, m)) continue;
    ++s.cases;
    std::vector<Element> image;
    image.reserve(sub.size());
    for (Element z : sub) image.push_back(mobius_map(F, theta, z, m));
    std::sort(image.begin(), image.end());
    if (image != expected) s.fail(fmt::format("theta={}: image is not U \\ {{1}}", to_hex(theta)));
  }
  return s;
}

// Over GF(2^n) with exponents 2^k + 1, 1 <= k <= k_max.
inline SuiteSummary run_power_sum_suite(const Field& F, int k_max) {
  SuiteSummary s = start_suite("lemma24", F.degree() / 2);
  for (int k = 1; k <= k_max; ++k) {
    for (Element x : F.elements()) {
      for (Element y : F.elements()) {
        ++s.cases;
        if (!power_sum_identity_check(F, x, y, k)) {
          s.fail(fmt::format("n={} k={} x={} y={}", F.degree(), k, to_hex(x), to_hex(y)));
        }
      }
    }
  }
  return s;
}

inline SuiteSummary run_partition_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("partition", m);
  const auto circle = F.unit_circle(m);
  const auto part = partition_unit_circle(F, m);
  ++s.cases;
  if (part.u1.size() + part.u2.size() != circle.size()) s.fail("U1 and U2 do not cover U");
  ++s.cases;
  if (circle.size() != pow2(m) + 1) s.fail("|U| != 2^m + 1");
  for (Element l : circle) {
    ++s.cases;
    if (!F.on_unit_circle(l, m)) s.fail(fmt::format("{} is not on the unit circle", to_hex(l)));
    const bool cube_root = (F.square(l) + l + kOne).is_zero() && l != kOne;
    if (in_u1(F, l, m) != cube_root) {
      s.fail(fmt::format("lambda={}: U1 membership disagrees with l^2+l+1=0", to_hex(l)));
    }
  }
  ++s.cases;
  const bool expect_empty = m % 2 == 0;
  if (part.u1.empty() != expect_empty || (!expect_empty && part.u1.size() != 2)) {
    s.fail(fmt::format("|U1| = {} for m = {}", part.u1.size(), m));
  }
  for (Element l : part.u1) {
    ++s.cases;
    if (F.pow(l, 3) != kOne || l == kOne) s.fail(fmt::format("U1 element {} is not a primitive cube root", to_hex(l)));
  }
  return s;
}

// At most one root of the lambda equation in U2, and lambda = 1 is never a root.
inline SuiteSummary run_lambda_root_suite(const Field& F, int m, const std::vector<int>& ks) {
  SuiteSummary s = start_suite("eq309", m);
  if (ks.size() == 1) s.k = ks.front();
  const auto circle = F.unit_circle(m);
  const auto gammas = gamma_sweep(F, m);
  for (int k : ks) {
    for (Element delta : F.elements()) {
      if (trace_zero_shortcut(F, m, delta)) continue;
      for (Element gamma : gammas) {
        const auto ctx = make_case_context(F, m, k, delta, gamma);
        ++s.cases;
        const auto roots = lambda_equation_roots(F, ctx, circle);
        std::size_t in_u2 = 0;
        for (Element l : roots) {
          if (l == kOne) s.fail(fmt::format("k={} delta={} gamma={}: lambda=1 is a root", k, to_hex(delta), to_hex(gamma)));
          if (!in_u1(F, l, m)) ++in_u2;
        }
        if (in_u2 > 1) {
          s.fail(fmt::format("k={} delta={} gamma={}: {} roots in U2", k, to_hex(delta), to_hex(gamma), in_u2));
        }
      }
    }
  }
  return s;
}

inline SuiteSummary run_z_substitution_suite(const Field& F, int m, const std::vector<int>& ks) {
  SuiteSummary s = start_suite("eq315", m);
  if (ks.size() == 1) s.k = ks.front();
  const auto sub = F.subfield_elements(m);
  const auto gammas = gamma_sweep(F, m);
  for (int k : ks) {
    for (Element delta : F.elements()) {
      if (trace_zero_shortcut(F, m, delta)) continue;
      for (Element gamma : gammas) {
        const auto ctx = make_case_context(F, m, k, delta, gamma);
        ++s.cases;
        if (!z_substitution_check(F, ctx, sub)) {
          s.fail(fmt::format("k={} delta={} gamma={}: root sets differ", k, to_hex(delta), to_hex(gamma)));
        }
        if (is_case_one(F, ctx)) {
          ++s.cases;
          const ZEquation eq = z_equation(F, ctx);
          const Element l0 = mobius_map(F, ctx.theta, kZero, m);
          if (!eq.constant.is_zero() || !in_u1(F, l0, m)) {
            s.fail(fmt::format("k={} delta={} gamma={}: Case I context without z=0 root in U1", k, to_hex(delta),
                               to_hex(gamma)));
          }
        }
      }
    }
  }
  return s;
}

inline SuiteSummary run_unit_pair_trace_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("trace-pair", m);
  const auto circle = F.unit_circle(m);
  for (std::size_t a = 0; a < circle.size(); ++a) {
    for (std::size_t b = a + 1; b < circle.size(); ++b) {
      ++s.cases;
      const int t = unit_pair_trace(F, circle[a], circle[b], m);
      if (t != 1 || unit_pair_trace(F, circle[b], circle[a], m) != t) {
        s.fail(fmt::format("l1={} l2={}: trace {}", to_hex(circle[a]), to_hex(circle[b]), t));
      }
    }
  }
  return s;
}

inline SuiteSummary run_case2_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("case2", m);
  const auto u2 = partition_unit_circle(F, m).u2;
  const auto gammas = gamma_sweep(F, m);
  for (Element lambda : u2) {
    for (Element delta : F.elements()) {
      for (Element gamma : gammas) {
        ++s.cases;
        const auto ctx = make_case_context(F, m, 1, delta, gamma);
        const Element x = case2_solution(F, lambda, ctx);
        if (!case2_residual(F, lambda, ctx, x).is_zero() || x + gamma != case2_shifted_closed_form(F, lambda, ctx)) {
          s.fail(fmt::format("lambda={} delta={} gamma={}", to_hex(lambda), to_hex(delta), to_hex(gamma)));
        }
      }
    }
  }
  return s;
}

// Every x of every nonzero-trace delta, every i in [0, 2^m].
inline SuiteSummary run_lambda_power_suite(const Field& F, int m) {
  SuiteSummary s = start_suite("eq305", m);
  for (u64 i = 0; i <= pow2(m); ++i) {
    for (Element delta : F.elements()) {
      if (trace_zero_shortcut(F, m, delta)) continue;
      for (Element x : F.elements()) {
        ++s.cases;
        if (!lambda_power_residual(F, m, i, delta, x).is_zero()) {
          s.fail(fmt::format("i={} delta={} x={}", i, to_hex(delta), to_hex(x)));
        }
      }
    }
  }
  return s;
}

// Dispatch by suite name. k, when given, restricts the k-dependent suites
// (lemma24 uses it as the largest k; default 8).
inline SuiteSummary run_suite(const std::string& name, int m, std::optional<int> k) {
  if (m < 1 || 2 * m > kMaxExhaustiveDegree) {
    throw std::out_of_range(fmt::format("prooflab: m = {} outside [1, {}]", m, kMaxExhaustiveDegree / 2));
  }
  const Field F = Field::make(2 * m);
  auto ks = [&] {
    if (k) return std::vector<int>{*k};
    return admissible_ks(m);
  };
  SuiteSummary out;
  if (name == "lemma22") {
    out = run_affine_suite(F, m);
  } else if (name == "lemma23") {
    out = run_mobius_suite(F, m);
  } else if (name == "lemma24") {
    out = run_power_sum_suite(F, k.value_or(8));
    out.m = m;
  } else if (name == "partition") {
    out = run_partition_suite(F, m);
  } else if (name == "eq309") {
    out = run_lambda_root_suite(F, m, ks());
  } else if (name == "eq315") {
    std::vector<int> all;
    for (int kk = 1; kk <= m - 1; ++kk) all.push_back(kk);
    out = run_z_substitution_suite(F, m, k ? std::vector<int>{*k} : all);
  } else if (name == "trace-pair") {
    out = run_unit_pair_trace_suite(F, m);
  } else if (name == "case2") {
    out = run_case2_suite(F, m);
  } else if (name == "eq305") {
    out = run_lambda_power_suite(F, m);
  } else {
    throw std::invalid_argument("unknown prooflab suite: " + name);
  }
  if (k) out.k = k;
  return out;
}

}  // namespace nihopp
