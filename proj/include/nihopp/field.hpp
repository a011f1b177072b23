#pragma once

// Arithmetic over GF(2^n), 2 <= n <= 32, in the polynomial basis.
//
// Elements are bit vectors: bit i is the coefficient of x^i. A Field owns the
// modulus, a primitive generator and, for n <= 16, log/antilog tables. Fields
// are immutable after construction and cheap to copy (tables are shared).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace nihopp {

struct Element {
  std::uint32_t bits = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr Element operator+(Element a, Element b) { return Element(a.bits ^ b.bits); }
  friend constexpr Element& operator+=(Element& a, Element b) {
    a.bits ^= b.bits;
    return a;
  }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

// Lowercase hex, no prefix.
inline std::string to_hex(Element e) { return fmt::format("{:x}", e.bits); }
inline std::string to_hex(std::uint64_t v) { return fmt::format("{:x}", v); }

Element parse_hex_element(const std::string& text);

namespace gf2 {

// Polynomials over GF(2) packed into 64-bit words. Degrees stay below 64.

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

// Carry-less product of two polynomials of degree < 32.
inline std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  while (b != 0) {
    if (b & 1u) acc ^= shifted;
    shifted <<= 1;
    b >>= 1;
  }
  return acc;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return mod(clmul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), m);
}

// Rabin's test: x^(2^n) = x mod p, and gcd(x^(2^(n/q)) - x, p) = 1 for each
// prime q | n.
inline bool is_irreducible(std::uint64_t p) {
  const int n = degree(p);
  if (n < 1) return false;
  if (n == 1) return true;
  std::vector<int> prime_divisors;
  for (int q = 2, r = n; q <= r; ++q) {
    if (r % q == 0) {
      prime_divisors.push_back(q);
      while (r % q == 0) r /= q;
    }
  }
  // frob[j] = x^(2^j) mod p
  std::vector<std::uint64_t> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = 2;
  for (int j = 1; j <= n; ++j) frob[j] = mulmod(frob[j - 1], frob[j - 1], p);
  if (frob[n] != 2) return false;
  for (int q : prime_divisors) {
    if (gcd(p, frob[n / q] ^ 2) != 1) return false;
  }
  return true;
}

}  // namespace gf2

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 32;
  static constexpr int kMaxTableDegree = 16;

  // Smallest irreducible modulus and smallest primitive generator for degree n.
  static Field make(int n);

  int degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  Element generator() const { return generator_; }
  std::uint64_t size() const { return std::uint64_t{1} << degree_; }
  std::uint64_t order() const { return size() - 1; }
  bool has_tables() const { return tables_ != nullptr; }

  bool contains(Element a) const { return a.bits < size(); }

  // All elements in ascending bit order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t v = 0; v < size(); ++v) out.emplace_back(static_cast<std::uint32_t>(v));
    return out;
  }

  Element mul(Element a, Element b) const {
    if (tables_ != nullptr) return mul_table(a, b);
    return mul_clmul(a, b);
  }

  // Schoolbook carry-less product reduced by the modulus.
  Element mul_clmul(Element a, Element b) const {
    return Element(static_cast<std::uint32_t>(gf2::mod(gf2::clmul(a.bits, b.bits), modulus_)));
  }

  Element mul_table(Element a, Element b) const {
    if (tables_ == nullptr) throw std::logic_error("mul_table: field has no log tables");
    if (a.is_zero() || b.is_zero()) return kZero;
    const auto& t = *tables_;
    return Element(t.antilog[t.log[a.bits] + t.log[b.bits]]);
  }

  Element square(Element a) const { return mul(a, a); }

  // a^e with 0^0 = 1; the exponent is reduced mod 2^n - 1 for nonzero a.
  Element pow(Element a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? kOne : kZero;
    if (tables_ != nullptr) return pow_table(a, e);
    return pow_square_multiply(a, e);
  }

  Element pow_square_multiply(Element a, std::uint64_t e) const {
    if (a.is_zero()) return e == 0 ? kOne : kZero;
    e %= order();
    Element result = kOne;
    Element base = a;
    while (e != 0) {
      if (e & 1u) result = mul_clmul(result, base);
      base = mul_clmul(base, base);
      e >>= 1;
    }
    return result;
  }

  Element pow_table(Element a, std::uint64_t e) const {
    if (tables_ == nullptr) throw std::logic_error("pow_table: field has no log tables");
    if (a.is_zero()) return e == 0 ? kOne : kZero;
    const auto& t = *tables_;
    const std::uint64_t ord = order();
    return Element(t.antilog[(t.log[a.bits] * (e % ord)) % ord]);
  }

  Element inv(Element a) const {
    if (a.is_zero()) throw std::domain_error("inv: zero has no multiplicative inverse");
    return pow(a, order() - 1);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  // Discrete log to the generator base; requires tables and a != 0.
  std::uint32_t log(Element a) const {
    if (tables_ == nullptr) throw std::logic_error("log: field has no log tables");
    if (a.is_zero()) throw std::domain_error("log: zero has no logarithm");
    return tables_->log[a.bits];
  }

  Element exp(std::uint64_t e) const {
    if (tables_ != nullptr) return Element(tables_->antilog[e % order()]);
    return pow(generator_, e);
  }

  // x^(2^count)
  Element frobenius(Element x, int count) const {
    for (int c = 0; c < count; ++c) x = square(x);
    return x;
  }

  // x + x^2 + ... + x^(2^(terms-1)); Tr_1^terms when x lies in GF(2^terms).
  Element trace_sum(Element x, int terms) const {
    Element acc = kZero;
    for (int c = 0; c < terms; ++c) {
      acc += x;
      x = square(x);
    }
    return acc;
  }

  // Absolute trace Tr_1^n.
  int abs_trace(Element x) const { return static_cast<int>(trace_sum(x, degree_).bits); }

  // Tr_1^m of an element of the subfield GF(2^m). Throws if the sum is not a bit.
  int subfield_trace(Element y, int m) const {
    const Element t = trace_sum(y, m);
    if (t.bits > 1) throw std::logic_error("subfield_trace: argument is not in GF(2^m)");
    return static_cast<int>(t.bits);
  }

  // --- tower view: degree == 2m ---

  int half_degree() const { return degree_ / 2; }

  // x^(2^m); needs degree == 2m.
  Element conjugate(Element x, int m) const {
    require_half(m, "conjugate");
    if (tables_ != nullptr && !tables_->conj.empty()) return Element(tables_->conj[x.bits]);
    return frobenius(x, m);
  }

  // Tr_m^{2m}(x) = x + x^(2^m).
  Element rel_trace(Element x, int m) const { return x + conjugate(x, m); }

  // x * conj(x), the norm to GF(2^m).
  Element norm(Element x, int m) const { return mul(x, conjugate(x, m)); }

  bool in_subfield(Element x, int m) const { return conjugate(x, m) == x; }

  bool on_unit_circle(Element x, int m) const {
    require_half(m, "on_unit_circle");
    return pow(x, (std::uint64_t{1} << m) + 1) == kOne;
  }

  // The 2^m fixed points of conjugation, ascending.
  std::vector<Element> subfield_elements(int m) const {
    require_half(m, "subfield_elements");
    std::vector<Element> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t v = 0; v < size(); ++v) {
      const Element x(static_cast<std::uint32_t>(v));
      if (conjugate(x, m) == x) out.push_back(x);
    }
    return out;
  }

  // U = {x : x^(2^m+1) = 1} listed as consecutive powers of g^(2^m-1).
  std::vector<Element> unit_circle(int m) const {
    require_half(m, "unit_circle");
    const std::uint64_t count = (std::uint64_t{1} << m) + 1;
    const Element step = pow(generator_, (std::uint64_t{1} << m) - 1);
    std::vector<Element> out;
    out.reserve(count);
    Element cur = kOne;
    for (std::uint64_t j = 0; j < count; ++j) {
      out.push_back(cur);
      cur = mul(cur, step);
    }
    return out;
  }

  std::uint64_t multiplicative_order(Element a) const {
    if (a.is_zero()) throw std::domain_error("multiplicative_order: zero");
    std::uint64_t ord = order();
    for (std::uint64_t p : prime_factors(order())) {
      while (ord % p == 0 && pow_square_multiply(a, ord / p) == kOne) ord /= p;
    }
    return ord;
  }

  // Raw tables, for consistency checks.
  const std::vector<std::uint32_t>* log_table() const { return tables_ ? &tables_->log : nullptr; }
  const std::vector<std::uint32_t>* antilog_table() const { return tables_ ? &tables_->antilog : nullptr; }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;      // element -> index; log[0] unused
    std::vector<std::uint32_t> antilog;  // index -> element, length 2(2^n - 1)
    std::vector<std::uint32_t> conj;     // x -> x^(2^(n/2)); empty for odd n
  };

  Field(int n, std::uint64_t modulus) : degree_(n), modulus_(modulus) {}

  void require_half(int m, const char* what) const {
    if (m < 1 || 2 * m != degree_) {
      throw std::invalid_argument(fmt::format("{}: field degree {} is not 2*{}", what, degree_, m));
    }
  }

  int degree_;
  std::uint64_t modulus_;
  Element generator_{};
  std::shared_ptr<const Tables> tables_;
};

inline Field Field::make(int n) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw std::out_of_range(fmt::format("field degree {} outside [{}, {}]", n, kMinDegree, kMaxDegree));
  }
  std::uint64_t modulus = 0;
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1u; p < (std::uint64_t{1} << (n + 1)); p += 2) {
    if (gf2::is_irreducible(p)) {
      modulus = p;
      break;
    }
  }
  Field f(n, modulus);

  const std::uint64_t ord = f.order();
  const auto factors = prime_factors(ord);
  for (std::uint64_t g = 2; g < f.size(); ++g) {
    const Element cand(static_cast<std::uint32_t>(g));
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t p) {
      return f.pow_square_multiply(cand, ord / p) != kOne;
    });
    if (primitive) {
      f.generator_ = cand;
      break;
    }
  }

  if (n <= kMaxTableDegree) {
    auto t = std::make_shared<Tables>();
    t->log.assign(f.size(), 0);
    t->antilog.assign(2 * ord, 0);
    Element cur = kOne;
    for (std::uint64_t e = 0; e < ord; ++e) {
      t->antilog[e] = cur.bits;
      t->antilog[e + ord] = cur.bits;
      t->log[cur.bits] = static_cast<std::uint32_t>(e);
      cur = f.mul_clmul(cur, f.generator_);
    }
    if (n % 2 == 0) {
      const int m = n / 2;
      t->conj.assign(f.size(), 0);
      for (std::uint64_t v = 1; v < f.size(); ++v) {
        t->conj[v] = t->antilog[(std::uint64_t{t->log[v]} << m) % ord];
      }
    }
    f.tables_ = std::move(t);
  }
  return f;
}

inline Element parse_hex_element(const std::string& text) {
  std::string s = text;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty() || s.size() > 8) throw std::invalid_argument("bad hex element: '" + text + "'");
  std::size_t used = 0;
  const unsigned long v = std::stoul(s, &used, 16);
  if (used != s.size()) throw std::invalid_argument("bad hex element: '" + text + "'");
  return Element(static_cast<std::uint32_t>(v));
}

}  // namespace nihopp
