// Copyright 2026 The snarkpipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "snarkpipe/error.hpp"

namespace snarkpipe {

namespace detail {

using u128 = unsigned __int128;

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; these witnesses are exact for all 64-bit n.
inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard-Brent; n must be composite and odd.
inline uint64_t pollard_rho(uint64_t n) {
  for (uint64_t c = 1;; ++c) {
    auto f = [&](uint64_t x) { return add_mod(mul_mod(x, x, n), c, n); };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  for (uint64_t q : {2, 3, 5, 7, 11, 13}) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
      factor_into(n, out);
      return;
    }
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Distinct prime factors in increasing order.
inline std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool generates_multiplicative_group(uint64_t g, uint64_t p) {
  if (g == 0 || g >= p) return false;
  if (p == 2) return g == 1;
  for (uint64_t q : prime_factors(p - 1)) {
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

}  // namespace detail

class Field;

// Residue modulo a prime. The element remembers its modulus so arithmetic
// never needs a context pointer; mixing moduli is a programming error.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(uint64_t value, uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    assert(modulus_ == o.modulus_);
    return raw(detail::add_mod(value_, o.value_, modulus_));
  }
  FieldElement operator-(const FieldElement& o) const {
    assert(modulus_ == o.modulus_);
    return raw(value_ >= o.value_ ? value_ - o.value_ : modulus_ - (o.value_ - value_));
  }
  FieldElement operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_); }
  FieldElement operator*(const FieldElement& o) const {
    assert(modulus_ == o.modulus_);
    return raw(detail::mul_mod(value_, o.value_, modulus_));
  }
  // Fermat inverse: a^(p-2).
  FieldElement inverse() const {
    if (value_ == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
    return pow(modulus_ - 2);
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement pow(uint64_t exponent) const {
    return raw(detail::pow_mod(value_, exponent, modulus_));
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement&) const = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  FieldElement raw(uint64_t v) const {
    FieldElement e;
    e.value_ = v;
    e.modulus_ = modulus_;
    return e;
  }

  uint64_t value_ = 0;
  uint64_t modulus_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value(); }

enum class FieldOp { kAdd, kSub, kMul, kDiv };

inline FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::kAdd: return a + b;
    case FieldOp::kSub: return a - b;
    case FieldOp::kMul: return a * b;
    case FieldOp::kDiv: return a / b;
  }
  return a;
}

// Prime field context: modulus plus a verified generator of the
// multiplicative group.
class Field {
 public:
  static constexpr uint64_t kDefaultModulus = 0xFFFFFFFF00000001ULL;  // 2^64 - 2^32 + 1
  static constexpr uint64_t kDefaultGenerator = 7;

  Field() : Field(kDefaultModulus, kDefaultGenerator) {}

  Field(uint64_t modulus, uint64_t generator) : modulus_(modulus), generator_(generator) {
    if (!detail::is_prime(modulus))
      throw Error(Errc::kInvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
    if (!detail::generates_multiplicative_group(generator, modulus))
      throw Error(Errc::kInvalidArgument, std::to_string(generator) +
                                              " does not generate the multiplicative group mod " +
                                              std::to_string(modulus));
  }

  // Picks the smallest generator.
  static Field with_modulus(uint64_t modulus) {
    if (!detail::is_prime(modulus))
      throw Error(Errc::kInvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
    for (uint64_t g = 1; g < modulus; ++g) {
      if (detail::generates_multiplicative_group(g, modulus)) return Field(modulus, g);
    }
    throw Error(Errc::kInvalidArgument, "no generator found");
  }

  // Accepts a decimal modulus as used by the CLI and the JSON files.
  static Field parse(std::string_view decimal);

  uint64_t modulus() const { return modulus_; }
  FieldElement generator() const { return element(generator_); }

  FieldElement element(uint64_t v) const { return FieldElement(v, modulus_); }
  FieldElement from_signed(int64_t v) const {
    if (v >= 0) return element(static_cast<uint64_t>(v));
    return -element(static_cast<uint64_t>(-(v + 1)) + 1);
  }
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  // Reduces an arbitrarily long string of decimal digits. Sets *overflowed
  // when the integer was not already a canonical residue.
  FieldElement reduce_decimal(std::string_view digits, bool* overflowed = nullptr) const {
    if (digits.empty()) throw Error(Errc::kInvalidArgument, "empty integer literal");
    uint64_t acc = 0;
    bool exceeded = false;
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw Error(Errc::kInvalidArgument, "not a decimal integer: " + std::string(digits));
      detail::u128 next = static_cast<detail::u128>(acc) * 10 + static_cast<uint64_t>(c - '0');
      if (next >= modulus_) exceeded = true;
      acc = static_cast<uint64_t>(next % modulus_);
    }
    if (overflowed) *overflowed = exceeded;
    return element(acc);
  }

  // Strict parse of a canonical residue, as stored in serialized artifacts.
  FieldElement parse_element(std::string_view digits) const {
    bool overflowed = false;
    FieldElement e = reduce_decimal(digits, &overflowed);
    if (overflowed || (digits.size() > 1 && digits.front() == '0'))
      throw Error(Errc::kInvalidArgument,
                  "not a canonical field element: " + std::string(digits));
    return e;
  }

  bool operator==(const Field& o) const { return modulus_ == o.modulus_; }

 private:
  uint64_t modulus_;
  uint64_t generator_;
};

inline uint64_t parse_u64(std::string_view digits) {
  if (digits.empty() || digits.size() > 20)
    throw Error(Errc::kInvalidArgument, "not a 64-bit decimal: " + std::string(digits));
  detail::u128 acc = 0;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw Error(Errc::kInvalidArgument, "not a decimal integer: " + std::string(digits));
    acc = acc * 10 + static_cast<uint64_t>(c - '0');
  }
  if (acc > UINT64_MAX)
    throw Error(Errc::kInvalidArgument, "integer exceeds 64 bits: " + std::string(digits));
  return static_cast<uint64_t>(acc);
}

inline Field Field::parse(std::string_view decimal) {
  uint64_t p = parse_u64(decimal);
  if (p == kDefaultModulus) return Field();
  return with_modulus(p);
}

}  // namespace snarkpipe
