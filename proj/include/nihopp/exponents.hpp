#pragma once

// Integer side of the construction: solving (2^k+1) i = c (mod 2^m+1), the
// duality i <-> 1-i (mod 2^m+1), normalized Niho exponents, and the closed-form
// families of known parameters i.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace nihopp {

using u64 = std::uint64_t;
using i128 = __int128;

class NoSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Consistency failure between two independent routes to the same integer.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr u64 pow2(int e) { return u64{1} << e; }

struct EuclidResult {
  i128 gcd;
  i128 x;  // a*x + b*y = gcd
  i128 y;
};

inline EuclidResult extended_euclid(i128 a, i128 b) {
  i128 old_r = a, r = b;
  i128 old_s = 1, s = 0;
  i128 old_t = 0, t = 1;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Unique i in [0, modulus) with t*i = c (mod modulus). Throws NoSolution when
// gcd(t, modulus) > 1.
inline u64 solve_unit_congruence(u64 t, u64 modulus, u64 c) {
  if (modulus < 2) throw std::invalid_argument("solve_unit_congruence: modulus must be >= 2");
  if (c >= modulus) throw std::invalid_argument("solve_unit_congruence: residue out of range");
  if (t == 0) throw std::invalid_argument("solve_unit_congruence: t must be positive");
  const auto eu = extended_euclid(static_cast<i128>(t % modulus), static_cast<i128>(modulus));
  if (eu.gcd != 1) {
    throw NoSolution(fmt::format("{}*i = {} (mod {}) has no unique solution: gcd = {}", t, c, modulus,
                                 gcd_u64(t, modulus)));
  }
  const i128 m = static_cast<i128>(modulus);
  i128 inv = eu.x % m;
  if (inv < 0) inv += m;
  return static_cast<u64>((inv * static_cast<i128>(c)) % m);
}

enum class ResidueClass { One, TwoPowK };

enum class Provenance {
  OppositeParity,  // m and k of different parity
  EvenNested,      // m, k even, k | m, m/k even
  External,        // proved elsewhere; checked by brute force only
  Unproven,        // congruence solvable but no sufficient condition applies
};

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::OppositeParity: return "opposite-parity";
    case Provenance::EvenNested: return "even-nested";
    case Provenance::External: return "external";
    case Provenance::Unproven: return "unproven";
  }
  return "?";
}

struct ConstructionParams {
  int m = 0;
  int k = 0;
  ResidueClass cls = ResidueClass::One;
  bool canonical = true;  // 1 <= k <= m-1

  u64 modulus() const { return pow2(m) + 1; }
  u64 t() const { return pow2(k) + 1; }
  u64 residue() const { return cls == ResidueClass::One ? 1 : pow2(k) % modulus(); }
};

struct NihoExponent {
  int m = 0;
  u64 i = 0;
  u64 s = 0;
};

struct ConstructionWitness {
  std::optional<ConstructionParams> params;  // absent for external rows
  int m = 0;
  u64 i = 0;
  u64 j = 0;  // dual index
  u64 s = 0;
  Provenance provenance = Provenance::Unproven;
  bool applicable = false;
  std::string reason;
  std::string family;  // catalog family label, empty for ad-hoc witnesses
};

inline void require_m(int m, int max_m = 62) {
  if (m < 1 || m > max_m) throw std::out_of_range(fmt::format("m = {} outside [1, {}]", m, max_m));
}

// j in [0, 2^m] with j = 1 - i (mod 2^m + 1).
inline u64 dual_index(int m, u64 i) {
  require_m(m);
  const u64 mod = pow2(m) + 1;
  if (i > pow2(m)) throw std::out_of_range("dual_index: i outside [0, 2^m]");
  return (1 + mod - i) % mod;
}

inline NihoExponent niho_exponent(int m, u64 i) {
  require_m(m, 31);
  if (i > pow2(m)) throw std::out_of_range("niho_exponent: i outside [0, 2^m]");
  return {m, i, i * (pow2(m) - 1) + 1};
}

// Which sufficient condition (if any) covers the pair (m, k).
inline std::pair<Provenance, std::string> classify_parameters(int m, int k) {
  if ((m % 2) != (k % 2)) return {Provenance::OppositeParity, "m and k have different parity"};
  if (m % 2 == 1) return {Provenance::Unproven, "m and k both odd: gcd(2^k+1, 2^m+1) > 1"};
  if (m % k != 0) return {Provenance::Unproven, "m and k both even but k does not divide m"};
  if ((m / k) % 2 != 0) return {Provenance::Unproven, "m and k both even but m/k is odd"};
  return {Provenance::EvenNested, "m and k both even, k | m and m/k even"};
}

inline ConstructionWitness construct_i(int m, int k, ResidueClass cls, bool allow_noncanonical = false) {
  require_m(m, 31);
  if (m < 2) throw std::invalid_argument("construct_i: m must be >= 2");
  if (k < 1 || k > 62) throw std::out_of_range("construct_i: k must be in [1, 62]");
  const bool canonical = k <= m - 1;
  if (!canonical && !allow_noncanonical) {
    throw std::invalid_argument(fmt::format("construct_i: k = {} outside [1, m-1] for m = {}", k, m));
  }
  ConstructionParams params{m, k, cls, canonical};
  ConstructionWitness w;
  w.params = params;
  w.m = m;
  w.i = solve_unit_congruence(params.t(), params.modulus(), params.residue());
  w.j = dual_index(m, w.i);
  w.s = niho_exponent(m, w.i).s;
  auto [prov, reason] = classify_parameters(m, k);
  w.provenance = prov;
  w.applicable = prov != Provenance::Unproven && canonical;
  w.reason = canonical ? reason : reason + "; k outside [1, m-1] (non-canonical)";
  return w;
}

// --- closed-form families ---

// Exact division; throws ConsistencyError when the divisibility hypothesis fails.
inline u64 exact_div(u64 num, u64 den, const char* what) {
  if (num % den != 0) throw ConsistencyError(fmt::format("{}: {} is not divisible by {}", what, num, den));
  return num / den;
}

struct ClosedFormRow {
  std::string family;     // stable identifier
  std::string condition;  // textual condition on m
  std::optional<int> k;
  std::vector<u64> i_values;  // for congruence rows: {class 1, class 2^k}
};

// Closed forms for every family that applies to m (k within [1, m-1]).
inline std::vector<ClosedFormRow> closed_form_rows(int m) {
  require_m(m, 31);
  if (m < 2) throw std::invalid_argument("closed_form_rows: m must be >= 2");
  const u64 P = pow2(m);
  std::vector<ClosedFormRow> rows;

  rows.push_back({"k=m-1", "all m", m - 1, {2, P}});

  if (m % 2 == 0) {
    rows.push_back({"k=1,m-even", "m even", 1, {exact_div(P + 2, 3, "k=1"), exact_div(2 * (P + 2), 3, "k=1")}});
  }
  if (m % 2 == 1 && m >= 3) {
    if (m % 4 == 1) {
      rows.push_back({"k=2,m-odd", "m = 1 (mod 4)", 2,
                      {exact_div(3 * P + 4, 5, "k=2"), exact_div(2 * P + 6, 5, "k=2")}});
    } else {
      rows.push_back({"k=2,m-odd", "m = 3 (mod 4)", 2,
                      {exact_div(P + 2, 5, "k=2"), exact_div(4 * P + 8, 5, "k=2")}});
    }
  }
  if (m % 2 == 0 && m >= 4) {
    switch (m % 3) {
      case 0:
        rows.push_back({"k=3,m-even", "m even, m = 0 (mod 3)", 3,
                        {exact_div(4 * P + 5, 9, "k=3"), exact_div(5 * P + 13, 9, "k=3")}});
        break;
      case 1:
        rows.push_back({"k=3,m-even", "m even, m = 1 (mod 3)", 3,
                        {exact_div(P + 2, 9, "k=3"), exact_div(8 * P + 16, 9, "k=3")}});
        break;
      default:
        rows.push_back({"k=3,m-even", "m even, m = 2 (mod 3)", 3,
                        {exact_div(7 * P + 8, 9, "k=3"), exact_div(2 * P + 10, 9, "k=3")}});
        break;
    }
  }
  if (m % 2 == 1 && m >= 5) {
    switch (m % 8) {
      case 1:
        rows.push_back({"k=4,m-odd", "m = 1 (mod 8)", 4,
                        {exact_div(11 * P + 12, 17, "k=4"), exact_div(6 * P + 22, 17, "k=4")}});
        break;
      case 3:
        rows.push_back({"k=4,m-odd", "m = 3 (mod 8)", 4,
                        {exact_div(15 * P + 16, 17, "k=4"), exact_div(2 * P + 18, 17, "k=4")}});
        break;
      case 5:
        rows.push_back({"k=4,m-odd", "m = 5 (mod 8)", 4,
                        {exact_div(P + 2, 17, "k=4"), exact_div(16 * P + 32, 17, "k=4")}});
        break;
      default:
        rows.push_back({"k=4,m-odd", "m = 7 (mod 8)", 4,
                        {exact_div(5 * P + 6, 17, "k=4"), exact_div(12 * P + 28, 17, "k=4")}});
        break;
    }
  }
  if (m % 4 == 0) {
    rows.push_back({"k=2,4|m", "4 | m", 2, {exact_div(2 * P + 3, 5, "k=2"), exact_div(3 * P + 7, 5, "k=2")}});
  }
  if (m % 8 == 0) {
    rows.push_back({"k=4,8|m", "8 | m", 4, {exact_div(8 * P + 9, 17, "k=4"), exact_div(9 * P + 25, 17, "k=4")}});
  }

  rows.push_back({"external:2^(m-1)+1", "all m", std::nullopt, {P / 2 + 1}});
  if (m % 3 != 0) {
    rows.push_back({"external:2^(m-2)+1", "m != 0 (mod 3)", std::nullopt, {P / 4 + 1, 3 * (P / 4) + 1}});
  }
  return rows;
}

// One witness per (row, i). Congruence rows are cross-checked against the
// solver and the duality map; any mismatch throws ConsistencyError.
inline std::vector<ConstructionWitness> corollary_catalog(int m) {
  std::vector<ConstructionWitness> out;
  for (const auto& row : closed_form_rows(m)) {
    if (!row.k) {
      for (u64 i : row.i_values) {
        ConstructionWitness w;
        w.m = m;
        w.i = i;
        w.j = dual_index(m, i);
        w.s = niho_exponent(m, i).s;
        w.provenance = Provenance::External;
        w.applicable = true;
        w.reason = "externally proved; verified by exhaustive evaluation only";
        w.family = row.family;
        out.push_back(std::move(w));
      }
      continue;
    }
    const int k = *row.k;
    const ResidueClass classes[2] = {ResidueClass::One, ResidueClass::TwoPowK};
    for (std::size_t c = 0; c < 2; ++c) {
      ConstructionWitness w = construct_i(m, k, classes[c]);
      if (w.i != row.i_values[c]) {
        throw ConsistencyError(fmt::format("family {} at m={}: closed form gives i={}, solver gives {}", row.family,
                                           m, row.i_values[c], w.i));
      }
      if (w.j != row.i_values[1 - c]) {
        throw ConsistencyError(fmt::format("family {} at m={}: dual of {} is {}, closed form pairs it with {}",
                                           row.family, m, w.i, w.j, row.i_values[1 - c]));
      }
      if (!w.applicable) {
        throw ConsistencyError(fmt::format("family {} at m={}, k={}: {}", row.family, m, k, w.reason));
      }
      w.family = row.family;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace nihopp
