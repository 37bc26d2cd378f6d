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

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"

namespace snarkpipe {

// Dense polynomial, coefficients lowest degree first. Always canonical:
// no trailing zeros, so the zero polynomial has no coefficients and
// equality is plain list equality.
class Polynomial {
 public:
  explicit Polynomial(const Field& field) : field_(field) {}
  Polynomial(const Field& field, std::vector<FieldElement> coefficients)
      : field_(field), coeffs_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(const Field& field, const FieldElement& c) {
    return Polynomial(field, {c});
  }
  // x - root
  static Polynomial linear_root(const Field& field, const FieldElement& root) {
    return Polynomial(field, {-root, field.one()});
  }

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  FieldElement coefficient(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  FieldElement leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

  FieldElement operator()(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(field_, std::move(out));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator-() const {
    std::vector<FieldElement> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(field_, std::move(out));
  }

  // Schoolbook product.
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(field_, std::move(out));
  }
  Polynomial operator*(const FieldElement& c) const {
    std::vector<FieldElement> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return Polynomial(field_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Long division: numerator = quotient * denominator + remainder with
// deg(remainder) < deg(denominator).
inline DivModResult poly_divmod(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw Error(Errc::kDivisionByZero, "polynomial division by zero");
  const Field& f = numerator.field();
  std::vector<FieldElement> rem = numerator.coefficients();
  const auto& den = denominator.coefficients();
  if (rem.size() < den.size()) return {Polynomial(f), numerator};

  std::vector<FieldElement> quot(rem.size() - den.size() + 1, f.zero());
  FieldElement lead_inv = den.back().inverse();
  for (size_t i = quot.size(); i-- > 0;) {
    FieldElement c = rem[i + den.size() - 1] * lead_inv;
    quot[i] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  rem.resize(den.size() - 1);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

using Point = std::pair<FieldElement, FieldElement>;

// Lagrange interpolation in O(n^2): divide the node product by each
// (x - x_j) synthetically instead of rebuilding every basis polynomial.
inline Polynomial poly_interpolate(const Field& field, std::span<const Point> points) {
  std::set<uint64_t> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x.value()).second)
      throw Error(Errc::kDuplicateNode, "duplicate x-coordinate " + x.to_string());
  }
  if (points.empty()) return Polynomial(field);

  const size_t n = points.size();
  // master(x) = prod (x - x_j), n+1 coefficients, low degree first.
  std::vector<FieldElement> master{field.one()};
  for (const auto& pt : points) {
    std::vector<FieldElement> next(master.size() + 1, field.zero());
    for (size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= master[i] * pt.first;
    }
    master = std::move(next);
  }

  std::vector<FieldElement> result(n, field.zero());
  std::vector<FieldElement> basis(n);
  for (size_t j = 0; j < n; ++j) {
    const FieldElement& xj = points[j].first;
    if (points[j].second.is_zero()) continue;
    // master / (x - xj) by synthetic division from the top.
    FieldElement carry = field.zero();
    for (size_t i = n; i-- > 0;) {
      carry = master[i + 1] + carry * xj;
      basis[i] = carry;
    }
    FieldElement denom = field.one();
    for (size_t k = 0; k < n; ++k) {
      if (k != j) denom *= xj - points[k].first;
    }
    FieldElement scale = points[j].second / denom;
    for (size_t i = 0; i < n; ++i) result[i] += basis[i] * scale;
  }
  return Polynomial(field, std::move(result));
}

}  // namespace snarkpipe
