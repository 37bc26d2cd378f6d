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

// Quadratic arithmetic program.
//
// Row d (node x = d) encodes one constraint  v(d) * w(d) = k(d)  where
// v = sum t_i v_i and likewise for w and k:
//
//   Times gate a*b=o   v_a(d)=1, w_b(d)=1, k_o(d)=1
//   Plus gate a+b=o    v_a(d)=v_b(d)=1, w_one(d)=1, k_o(d)=1
//   assert o == 0      v_o(d)=1, w_one(d)=1            (o * 1 = 0)
//   assert o != 0      v_o(d)=1, w_inv(d)=1, k_one(d)=1 (o * inv = 1)
//
// A constant operand c contributes c to the One symbol instead of owning a
// symbol. Gate rows come first (d = 1..G), assertion rows follow.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snarkpipe/circuit.hpp"
#include "snarkpipe/error.hpp"
#include "snarkpipe/polynomial.hpp"
#include "snarkpipe/rng.hpp"

namespace snarkpipe {

struct Symbol {
  std::string name;
  WireId wire;
};

struct Qap {
  Field field;
  std::vector<Symbol> symbols;  // One first, then wires in id order (constants excluded)
  std::vector<Polynomial> v, w, k;
  Polynomial target;
  size_t num_gates = 0;
  size_t num_constraints = 0;  // gates + assertion rows = deg(target)

  Qap() : target(Field()) {}

  std::optional<size_t> symbol_index(std::string_view name) const {
    for (size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i].name == name) return i;
    return std::nullopt;
  }
};

// Column values of v, w, k at every node, before interpolation. Exposed so
// the structural properties can be scanned without evaluating polynomials.
struct ConstraintMatrix {
  size_t rows = 0;
  std::vector<std::vector<FieldElement>> v, w, k;  // [symbol][row]
};

namespace detail {

inline std::vector<std::optional<size_t>> symbol_slots(const Circuit& c,
                                                       std::vector<Symbol>& symbols) {
  std::vector<std::optional<size_t>> slot(c.wires.size());
  for (WireId i = 0; i < c.wires.size(); ++i) {
    if (c.wires[i].kind == WireKind::kConst) continue;
    slot[i] = symbols.size();
    symbols.push_back({c.wires[i].name, i});
  }
  return slot;
}

}  // namespace detail

inline ConstraintMatrix constraint_matrix(const Circuit& c, std::vector<Symbol>* symbols_out = nullptr) {
  const Field& f = c.field;
  std::vector<Symbol> symbols;
  auto slot = detail::symbol_slots(c, symbols);
  const size_t one = *slot[kOneWire];

  ConstraintMatrix m;
  m.rows = c.gates.size() + c.outputs.size();
  auto column = [&](size_t) { return std::vector<FieldElement>(m.rows, f.zero()); };
  for (size_t i = 0; i < symbols.size(); ++i) {
    m.v.push_back(column(i));
    m.w.push_back(column(i));
    m.k.push_back(column(i));
  }
  auto add = [&](std::vector<std::vector<FieldElement>>& side, WireId wire, size_t row) {
    const Wire& wd = c.wires[wire];
    if (wd.kind == WireKind::kConst) {
      side[one][row] += wd.value;
    } else {
      side[*slot[wire]][row] += f.one();
    }
  };

  size_t row = 0;
  for (const Gate& g : c.gates) {
    if (g.op == GateOp::kTimes) {
      add(m.v, g.left, row);
      add(m.w, g.right, row);
    } else {
      add(m.v, g.left, row);
      add(m.v, g.right, row);
      m.w[one][row] = f.one();
    }
    m.k[*slot[g.out]][row] = f.one();
    ++row;
  }
  for (const Output& o : c.outputs) {
    add(m.v, o.wire, row);
    if (o.relation == Relation::kEqualZero) {
      m.w[one][row] = f.one();
    } else {
      m.w[*slot[*o.aux]][row] = f.one();
      m.k[one][row] = f.one();
    }
    ++row;
  }
  if (symbols_out) *symbols_out = std::move(symbols);
  return m;
}

// T(x) = prod_{d=1..n} (x - d)
inline Polynomial target_polynomial(const Field& f, size_t n) {
  Polynomial t = Polynomial::constant(f, f.one());
  for (size_t d = 1; d <= n; ++d) t = t * Polynomial::linear_root(f, f.element(d));
  return t;
}

inline Qap build_qap(const Circuit& circuit) {
  const Field& f = circuit.field;
  Qap q;
  q.field = f;
  ConstraintMatrix m = constraint_matrix(circuit, &q.symbols);
  q.num_gates = circuit.gates.size();
  q.num_constraints = m.rows;
  if (f.modulus() <= 2 * static_cast<uint64_t>(m.rows))
    throw Error(Errc::kFieldTooSmall, "field order " + std::to_string(f.modulus()) +
                                          " must exceed 2N = " + std::to_string(2 * m.rows));

  // Lagrange basis over nodes 1..N, shared by every column.
  std::vector<Polynomial> basis;
  basis.reserve(m.rows);
  for (size_t d = 0; d < m.rows; ++d) {
    std::vector<Point> pts;
    for (size_t e = 0; e < m.rows; ++e)
      pts.emplace_back(f.element(e + 1), e == d ? f.one() : f.zero());
    basis.push_back(poly_interpolate(f, pts));
  }
  auto interpolate_column = [&](const std::vector<FieldElement>& col) {
    Polynomial p(f);
    for (size_t d = 0; d < col.size(); ++d)
      if (!col[d].is_zero()) p += basis[d] * col[d];
    return p;
  };
  for (size_t i = 0; i < q.symbols.size(); ++i) {
    q.v.push_back(interpolate_column(m.v[i]));
    q.w.push_back(interpolate_column(m.w[i]));
    q.k.push_back(interpolate_column(m.k[i]));
  }
  q.target = target_polynomial(f, m.rows);
  return q;
}

struct AssembledInstance {
  Polynomial v, w, k;
  Polynomial f;  // v*w - k
  std::optional<Polynomial> h;  // set when divisible
  Polynomial quotient;  // F / T, kept even when the remainder is nonzero
  Polynomial remainder;
  bool divisible = false;
};

inline std::vector<FieldElement> symbol_values(const Qap& q, const Assignment& t) {
  std::vector<FieldElement> out;
  out.reserve(q.symbols.size());
  for (const Symbol& s : q.symbols) out.push_back(t.at(s.wire));
  return out;
}

inline AssembledInstance assemble(const Qap& q, const Assignment& t) {
  const Field& f = q.field;
  std::vector<FieldElement> ts = symbol_values(q, t);
  Polynomial v(f), w(f), k(f);
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].is_zero()) continue;
    v += q.v[i] * ts[i];
    w += q.w[i] * ts[i];
    k += q.k[i] * ts[i];
  }
  Polynomial F = v * w - k;
  DivModResult dm = poly_divmod(F, q.target);
  AssembledInstance out{v, w, k, F, std::nullopt, dm.quotient, dm.remainder, dm.remainder.is_zero()};
  if (out.divisible) out.h = dm.quotient;
  return out;
}

namespace detail {

inline bool identity_holds_at(const AssembledInstance& a, const Polynomial& target,
                              const FieldElement& s) {
  return a.v(s) * a.w(s) - a.k(s) == a.quotient(s) * target(s);
}

}  // namespace detail

// Forged-proof experiment: the cheating prover keeps the quotient of F / T
// as H' and we count how often v(s)w(s) - k(s) = H'(s)T(s) at random s.
inline double soundness_scan(const Qap& q, const Assignment& t, uint64_t trials,
                             DeterministicRng& rng) {
  if (trials == 0) return 0.0;
  AssembledInstance a = assemble(q, t);
  uint64_t hits = 0;
  for (uint64_t i = 0; i < trials; ++i)
    if (detail::identity_holds_at(a, q.target, rng.field_element(q.field))) ++hits;
  return static_cast<double>(hits) / static_cast<double>(trials);
}

// Same experiment over every point of a small field; returns the hit count.
inline uint64_t soundness_exhaustive(const Qap& q, const Assignment& t) {
  if (q.field.modulus() > (uint64_t{1} << 24))
    throw Error(Errc::kInvalidArgument, "exhaustive scan needs a small field");
  AssembledInstance a = assemble(q, t);
  uint64_t hits = 0;
  for (uint64_t s = 0; s < q.field.modulus(); ++s)
    if (detail::identity_holds_at(a, q.target, q.field.element(s))) ++hits;
  return hits;
}

inline nlohmann::ordered_json poly_to_json(const Polynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

inline nlohmann::ordered_json qap_to_json(const Qap& q) {
  nlohmann::ordered_json j;
  j["field"] = std::to_string(q.field.modulus());
  j["gates"] = q.num_gates;
  j["constraints"] = q.num_constraints;
  nlohmann::ordered_json syms = nlohmann::ordered_json::array();
  for (size_t i = 0; i < q.symbols.size(); ++i) {
    nlohmann::ordered_json s;
    s["name"] = q.symbols[i].name;
    s["wire"] = q.symbols[i].wire;
    s["v"] = poly_to_json(q.v[i]);
    s["w"] = poly_to_json(q.w[i]);
    s["k"] = poly_to_json(q.k[i]);
    syms.push_back(std::move(s));
  }
  j["symbols"] = std::move(syms);
  j["target"] = poly_to_json(q.target);
  return j;
}

}  // namespace snarkpipe
