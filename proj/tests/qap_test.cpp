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

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace snarkpipe {
namespace {

using testing::colors;
using testing::color_vector;
using testing::read_example;

// One gate over two inputs and no assertions: wires One, a, b, c.
Circuit bare_gate(const Field& f, GateOp op) {
  Circuit c;
  c.field = f;
  c.wires = {{WireKind::kOne, "one", f.one(), 0},
             {WireKind::kInput, "a", f.zero(), 0},
             {WireKind::kInput, "b", f.zero(), 0},
             {WireKind::kGate, "c", f.zero(), 0}};
  c.gates = {{op, 1, 2, 3, 1}};
  return c;
}

Polynomial constant(const Field& f, uint64_t v) { return Polynomial::constant(f, f.element(v)); }

// Symbols expected at each constraint row, read straight off the circuit.
struct RowOracle {
  std::set<WireId> feeds;   // v or w nonzero
  std::set<WireId> output;  // k == 1
};

std::vector<RowOracle> row_oracle(const Circuit& c) {
  std::vector<RowOracle> rows;
  auto operand = [&](WireId w) { return c.wires[w].kind == WireKind::kConst ? kOneWire : w; };
  for (const Gate& g : c.gates) {
    RowOracle r;
    r.feeds = {operand(g.left), operand(g.right)};
    if (g.op == GateOp::kPlus) r.feeds.insert(kOneWire);
    r.output = {g.out};
    rows.push_back(r);
  }
  for (const Output& o : c.outputs) {
    RowOracle r;
    r.feeds = {o.wire, o.relation == Relation::kEqualZero ? kOneWire : *o.aux};
    if (o.relation == Relation::kNotEqualZero) r.output = {kOneWire};
    rows.push_back(r);
  }
  return rows;
}

TEST(BuildQap, SingleTimesGate) {
  Field f = Field::with_modulus(17);
  Qap q = build_qap(bare_gate(f, GateOp::kTimes));
  ASSERT_EQ(q.symbols.size(), 4u);
  EXPECT_EQ(q.symbols[0].name, "one");
  EXPECT_EQ(q.num_constraints, 1u);
  size_t a = *q.symbol_index("a"), b = *q.symbol_index("b"), c = *q.symbol_index("c");
  EXPECT_EQ(q.v[a], constant(f, 1));
  EXPECT_EQ(q.w[b], constant(f, 1));
  EXPECT_EQ(q.k[c], constant(f, 1));
  EXPECT_TRUE(q.v[b].is_zero());
  EXPECT_TRUE(q.w[a].is_zero());
  EXPECT_TRUE(q.k[a].is_zero());
  EXPECT_TRUE(q.v[0].is_zero() && q.w[0].is_zero() && q.k[0].is_zero());
  EXPECT_EQ(q.target, Polynomial(f, {f.element(16), f.one()}));
}

TEST(BuildQap, SinglePlusGate) {
  Field f = Field::with_modulus(17);
  Qap q = build_qap(bare_gate(f, GateOp::kPlus));
  size_t a = *q.symbol_index("a"), b = *q.symbol_index("b"), c = *q.symbol_index("c");
  EXPECT_EQ(q.v[a], constant(f, 1));
  EXPECT_EQ(q.v[b], constant(f, 1));
  EXPECT_EQ(q.w[0], constant(f, 1));
  EXPECT_EQ(q.k[c], constant(f, 1));
  // (t_a + t_b) * 1 = t_c at d = 1
  Circuit circuit = bare_gate(f, GateOp::kPlus);
  Assignment t = solve(circuit, {{"a", f.element(5)}, {"b", f.element(9)}});
  EXPECT_EQ(t.at(3), f.element(14));
  EXPECT_TRUE(assemble(q, t).divisible);
}

TEST(Assemble, SingleTimesGateSolution) {
  Field f = Field::with_modulus(17);
  Circuit c = bare_gate(f, GateOp::kTimes);
  Qap q = build_qap(c);
  Assignment t = solve(c, {{"a", f.element(2)}, {"b", f.element(3)}});
  EXPECT_EQ(t.at(3), f.element(6));
  AssembledInstance inst = assemble(q, t);
  EXPECT_TRUE(inst.f.is_zero());
  EXPECT_EQ(inst.f(f.one()), f.zero());
  EXPECT_TRUE(inst.remainder.is_zero());
  ASSERT_TRUE(inst.h.has_value());
  EXPECT_TRUE(inst.h->is_zero());
  EXPECT_TRUE(inst.divisible);

  t.set(3, f.element(7));
  EXPECT_FALSE(assemble(q, t).divisible);
}

TEST(BuildQap, TargetPolynomial) {
  Field f;
  Qap q = testing::compile(read_example("coloring5.zkp")).qap;
  const size_t n = q.num_constraints;
  EXPECT_EQ(q.target.degree(), static_cast<int>(n));
  EXPECT_EQ(q.target.leading(), f.one());
  for (size_t d = 1; d <= n; ++d) EXPECT_TRUE(q.target(f.element(d)).is_zero());
  EXPECT_FALSE(q.target(f.element(n + 1)).is_zero());
  EXPECT_FALSE(q.target(f.zero()).is_zero());
}

TEST(BuildQap, ColoringShape) {
  auto c = testing::compile(read_example("coloring5.zkp"));
  EXPECT_EQ(c.qap.num_gates, 67u);
  EXPECT_EQ(c.qap.num_constraints, 69u);  // 67 gates + 2 assertion rows
  EXPECT_EQ(c.qap.symbols.front().wire, kOneWire);
  for (const Symbol& s : c.qap.symbols) EXPECT_NE(c.circuit.wires[s.wire].kind, WireKind::kConst);
  for (size_t i = 0; i < c.qap.symbols.size(); ++i) {
    EXPECT_LT(c.qap.v[i].degree(), static_cast<int>(c.qap.num_constraints));
    EXPECT_LT(c.qap.w[i].degree(), static_cast<int>(c.qap.num_constraints));
    EXPECT_LT(c.qap.k[i].degree(), static_cast<int>(c.qap.num_constraints));
  }
}

TEST(BuildQap, StructuralPropertiesOnCorpus) {
  for (const auto& name : testing::corpus_programs()) {
    auto c = testing::compile(read_example(name));
    const Qap& q = c.qap;
    const Field& f = q.field;
    auto rows = row_oracle(c.circuit);
    ASSERT_EQ(rows.size(), q.num_constraints);
    size_t violations = 0;
    for (size_t d = 1; d <= q.num_constraints; ++d) {
      const FieldElement x = f.element(d);
      for (size_t i = 0; i < q.symbols.size(); ++i) {
        const WireId wire = q.symbols[i].wire;
        const FieldElement k = q.k[i](x);
        const bool is_out = rows[d - 1].output.count(wire) > 0;
        if (is_out ? k != f.one() : !k.is_zero()) ++violations;
        const bool nonzero = !q.v[i](x).is_zero() || !q.w[i](x).is_zero();
        if (nonzero != (rows[d - 1].feeds.count(wire) > 0)) ++violations;
      }
    }
    EXPECT_EQ(violations, 0u) << name;
  }
}

TEST(BuildQap, FieldTooSmall) {
  Field f = Field::with_modulus(101);
  Circuit c = flatten(parse_program(read_example("coloring5.zkp")), f);
  try {
    build_qap(c);
    FAIL() << "expected FieldTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kFieldTooSmall);
  }
  EXPECT_NO_THROW(build_qap(flatten(parse_program(read_example("cubic.zkp")), f)));
}

TEST(Assemble, EquivalenceOnAllColorings) {
  Field f;
  auto c = testing::compile(read_example("coloring5.zkp"), f);
  size_t valid = 0;
  for (uint64_t code = 0; code < 243; ++code) {
    Assignment t = solve(c.circuit, colors(f, color_vector(code)));
    AssembledInstance inst = assemble(c.qap, t);
    const bool ok = check_solution(c.circuit, t);
    ASSERT_EQ(inst.divisible, ok) << code;
    valid += ok;
    ASSERT_EQ(inst.f, inst.v * inst.w - inst.k);
    if (ok) ASSERT_EQ(*inst.h * c.qap.target, inst.f);
  }
  EXPECT_EQ(valid, 6u);
}

TEST(Assemble, EquivalenceOnRandomAndTamperedAssignments) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("9a");
  for (const auto& name : testing::corpus_programs()) {
    auto c = testing::compile(read_example(name), f);
    for (int i = 0; i < 100; ++i) {
      Assignment t = solve(c.circuit, testing::random_inputs(c.program, f, rng));
      ASSERT_EQ(assemble(c.qap, t).divisible, check_solution(c.circuit, t)) << name;
      // Bump one symbol other than One (the verifier pins One to 1); the
      // equivalence must still hold either way.
      const Symbol& s = c.qap.symbols[1 + rng.below(c.qap.symbols.size() - 1)];
      t.set(s.wire, t.at(s.wire) + rng.nonzero_field_element(f));
      ASSERT_EQ(assemble(c.qap, t).divisible, check_solution(c.circuit, t)) << name << " " << s.name;
    }
  }
}

TEST(Assemble, TamperedColoringNotDivisible) {
  Field f;
  auto c = testing::compile(read_example("coloring5.zkp"), f);
  const Assignment good = solve(c.circuit, colors(f, {3, 1, 2, 1, 2}));
  AssembledInstance inst = assemble(c.qap, good);
  ASSERT_TRUE(inst.divisible);
  EXPECT_EQ(*inst.h * c.qap.target, inst.f);
  for (const Gate& g : c.circuit.gates) {
    Assignment t = good;
    t.set(g.out, t.at(g.out) + f.one());
    ASSERT_FALSE(assemble(c.qap, t).divisible) << g.index;
  }
}

TEST(Assemble, IncompleteAssignment) {
  auto c = testing::compile(read_example("product.zkp"));
  Assignment t = solve(c.circuit, {{"x", c.qap.field.one()}, {"y", c.qap.field.zero()}});
  t.erase(*c.circuit.find("out"));
  EXPECT_THROW(assemble(c.qap, t), Error);
}

TEST(Soundness, ValidSolutionHoldsEverywhere) {
  auto c = testing::compile(read_example("coloring5.zkp"));
  Assignment t = solve(c.circuit, colors(c.qap.field, {3, 1, 2, 1, 2}));
  DeterministicRng rng = DeterministicRng::from_hex("51");
  EXPECT_EQ(soundness_scan(c.qap, t, 1000, rng), 1.0);
}

TEST(Soundness, InvalidColoringOverLargeField) {
  auto c = testing::compile(read_example("coloring5.zkp"));
  Assignment t = solve(c.circuit, colors(c.qap.field, {1, 1, 2, 1, 2}));
  DeterministicRng rng = DeterministicRng::from_hex("52");
  EXPECT_EQ(soundness_scan(c.qap, t, 10000, rng), 0.0);
}

TEST(Soundness, ExhaustiveSmallFieldWithinBound) {
  Field f = Field::with_modulus(101);
  for (const auto& name : {"cubic.zkp", "product.zkp"}) {
    auto c = testing::compile(read_example(name), f);
    const uint64_t two_n = 2 * c.qap.num_constraints;
    ASSERT_LT(two_n, 101u);
    DeterministicRng rng = DeterministicRng::from_hex("53");
    int tested = 0;
    for (int i = 0; i < 50; ++i) {
      Assignment t = solve(c.circuit, testing::random_inputs(c.program, f, rng));
      if (check_solution(c.circuit, t)) continue;
      ++tested;
      uint64_t hits = soundness_exhaustive(c.qap, t);
      ASSERT_LE(hits, two_n) << name;
      // The residual v w - k - H'T is the remainder, of degree < N.
      ASSERT_LT(hits, c.qap.num_constraints) << name;
    }
    EXPECT_GT(tested, 0);
  }
}

TEST(QapJson, DeterministicDump) {
  auto a = testing::compile(read_example("coloring5.zkp"));
  auto b = testing::compile(read_example("coloring5.zkp"));
  std::string ja = qap_to_json(a.qap).dump();
  EXPECT_EQ(ja, qap_to_json(b.qap).dump());
  nlohmann::json j = nlohmann::json::parse(ja);
  EXPECT_EQ(j["constraints"], 69);
  EXPECT_EQ(j["symbols"][0]["name"], "one");
  EXPECT_TRUE(j["target"][0].is_string());
}

}  // namespace
}  // namespace snarkpipe
