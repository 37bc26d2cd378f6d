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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"
#include "snarkpipe/frontend.hpp"

namespace snarkpipe {

using WireId = uint32_t;
inline constexpr WireId kOneWire = 0;

enum class WireKind {
  kOne,
  kInput,
  kConst,
  kGate,
  kAux,  // inverse hint of an asserted-nonzero wire
};

struct Wire {
  WireKind kind;
  std::string name;
  FieldElement value;  // kConst only
  WireId of = 0;       // kAux only: the wire this is the inverse of
};

enum class GateOp { kPlus, kTimes };

struct Gate {
  GateOp op;
  WireId left;
  WireId right;
  WireId out;
  uint32_t index;  // d, 1-based
  bool operator==(const Gate&) const = default;
};

struct Output {
  WireId wire;
  Relation relation;
  std::optional<WireId> aux;  // present for kNotEqualZero
};

// Binary Plus/Times circuit. Wire 0 is One; every gate's operands precede
// its output; gate indices run 1..N in list order.
struct Circuit {
  Field field;
  std::vector<Wire> wires;
  std::vector<Gate> gates;
  std::vector<Output> outputs;
  std::vector<std::string> warnings;  // not serialized

  size_t num_gates() const { return gates.size(); }

  std::vector<WireId> input_wires() const {
    std::vector<WireId> out;
    for (WireId i = 0; i < wires.size(); ++i)
      if (wires[i].kind == WireKind::kInput) out.push_back(i);
    return out;
  }
  std::optional<WireId> find(std::string_view name) const {
    for (WireId i = 0; i < wires.size(); ++i)
      if (wires[i].kind != WireKind::kConst && wires[i].name == name) return i;
    return std::nullopt;
  }
};

// Solution map t, one slot per wire.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(size_t num_wires) : values_(num_wires) {}

  size_t size() const { return values_.size(); }
  bool has(WireId w) const { return w < values_.size() && values_[w].has_value(); }
  const FieldElement& at(WireId w) const {
    if (!has(w))
      throw Error(Errc::kIncompleteAssignment, "no value for wire " + std::to_string(w));
    return *values_[w];
  }
  void set(WireId w, const FieldElement& v) {
    if (w >= values_.size()) values_.resize(w + 1);
    values_[w] = v;
  }
  void erase(WireId w) {
    if (w < values_.size()) values_[w].reset();
  }

 private:
  std::vector<std::optional<FieldElement>> values_;
};

namespace detail {

class Flattener {
 public:
  Flattener(const Program& prog, const Field& field) : prog_(prog), field_(field) {
    circuit_.field = field;
    circuit_.wires.push_back({WireKind::kOne, "one", field.one(), 0});
  }

  Circuit run() {
    for (const auto& in : prog_.inputs) {
      WireId id = add_wire({WireKind::kInput, in, field_.zero(), 0});
      names_[in] = Value::wire(id);
    }
    for (const auto& d : prog_.definitions) {
      Value v = lower(d.expr);
      if (!v.is_const && circuit_.wires[v.id].kind == WireKind::kGate &&
          circuit_.wires[v.id].name.starts_with("_"))
        circuit_.wires[v.id].name = d.name;
      names_[d.name] = v;
    }
    for (const auto& c : prog_.conditions) {
      Value v = names_.at(c.name);
      WireId target;
      if (v.is_const || v.id == kOneWire) {
        // Constant-valued definition: give it a real gate so the relation
        // has an output wire to sit on.
        WireId operand = v.is_const ? const_wire(v.c) : kOneWire;
        target = emit(GateOp::kTimes, operand, kOneWire);
        circuit_.wires[target].name = c.name;
        names_[c.name] = Value::wire(target);
      } else {
        target = v.id;
      }
      Output out{target, c.relation, std::nullopt};
      if (c.relation == Relation::kNotEqualZero)
        out.aux = add_wire({WireKind::kAux, "_inv_" + c.name, field_.zero(), target});
      circuit_.outputs.push_back(out);
    }
    return std::move(circuit_);
  }

 private:
  struct Value {
    bool is_const = false;
    FieldElement c;
    WireId id = 0;
    static Value constant(const FieldElement& c) { return {true, c, 0}; }
    static Value wire(WireId id) { return {false, FieldElement(), id}; }
  };

  WireId add_wire(Wire w) {
    circuit_.wires.push_back(std::move(w));
    return static_cast<WireId>(circuit_.wires.size() - 1);
  }

  // Constants are deduplicated; 1 is the One wire.
  WireId const_wire(const FieldElement& c) {
    if (c == field_.one()) return kOneWire;
    auto it = consts_.find(c.value());
    if (it != consts_.end()) return it->second;
    WireId id = add_wire({WireKind::kConst, "", c, 0});
    consts_[c.value()] = id;
    return id;
  }

  WireId materialize(const Value& v) { return v.is_const ? const_wire(v.c) : v.id; }

  WireId emit(GateOp op, WireId l, WireId r) {
    uint32_t index = static_cast<uint32_t>(circuit_.gates.size() + 1);
    WireId out = add_wire({WireKind::kGate, "_w" + std::to_string(circuit_.wires.size()),
                           field_.zero(), 0});
    circuit_.gates.push_back({op, l, r, out, index});
    return out;
  }

  Value chain(GateOp op, const std::vector<Value>& operands) {
    Value acc = operands.front();
    for (size_t i = 1; i < operands.size(); ++i)
      acc = Value::wire(emit(op, materialize(acc), materialize(operands[i])));
    return acc;
  }

  // Folds the constant operands of an n-ary node into one constant placed
  // where the first constant appeared, so no gate ever combines two
  // constants.
  Value nary(GateOp op, const std::vector<Expression>& children) {
    const bool plus = op == GateOp::kPlus;
    std::vector<Value> vals;
    FieldElement folded = plus ? field_.zero() : field_.one();
    std::optional<size_t> const_pos;
    for (const auto& child : children) {
      Value v = lower(child);
      if (v.is_const) {
        folded = plus ? folded + v.c : folded * v.c;
        if (!const_pos) const_pos = vals.size();
      } else {
        vals.push_back(v);
      }
    }
    if (vals.empty()) return Value::constant(folded);
    if (!plus && folded.is_zero()) return Value::constant(folded);
    const bool neutral = plus ? folded.is_zero() : folded == field_.one();
    if (const_pos && !neutral)
      vals.insert(vals.begin() + static_cast<std::ptrdiff_t>(*const_pos), Value::constant(folded));
    return chain(op, vals);
  }

  Value lower(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind) {
      case K::kConstant: {
        bool overflowed = false;
        FieldElement c = field_.reduce_decimal(e.text, &overflowed);
        if (overflowed)
          circuit_.warnings.push_back("line " + std::to_string(e.line) + ", column " +
                                      std::to_string(e.column) + ": constant " + e.text +
                                      " reduced modulo " + std::to_string(field_.modulus()));
        return Value::constant(c);
      }
      case K::kVariable: return names_.at(e.text);
      case K::kAdd: return nary(GateOp::kPlus, e.children);
      case K::kMul: return nary(GateOp::kTimes, e.children);
      case K::kNeg: {
        Value v = lower(e.children.front());
        if (v.is_const) return Value::constant(-v.c);
        return Value::wire(emit(GateOp::kTimes, const_wire(-field_.one()), v.id));
      }
      case K::kPow: {
        Value v = lower(e.children.front());
        if (v.is_const) return Value::constant(v.c.pow(e.exponent));
        return chain(GateOp::kTimes, std::vector<Value>(e.exponent, v));
      }
    }
    return Value::constant(field_.zero());
  }

  const Program& prog_;
  Field field_;
  Circuit circuit_;
  std::map<std::string, Value> names_;
  std::map<uint64_t, WireId> consts_;
};

}  // namespace detail

// Flattens every definition into left-chained binary gates. Neg(x) becomes
// Times(Const(p-1), x), x^e becomes e-1 Times gates, and constant-only
// subexpressions are folded. Each != assertion gets an aux wire holding the
// inverse of the asserted value.
inline Circuit flatten(const Program& prog, const Field& field) {
  return detail::Flattener(prog, field).run();
}

// Forward evaluation in gate order.
inline Assignment solve(const Circuit& circuit, const Valuation& inputs) {
  std::vector<std::string> declared;
  for (WireId w : circuit.input_wires()) declared.push_back(circuit.wires[w].name);
  detail::check_input_names(declared, inputs);

  const Field& f = circuit.field;
  Assignment t(circuit.wires.size());
  for (WireId i = 0; i < circuit.wires.size(); ++i) {
    const Wire& w = circuit.wires[i];
    if (w.kind == WireKind::kOne) t.set(i, f.one());
    if (w.kind == WireKind::kConst) t.set(i, w.value);
    if (w.kind == WireKind::kInput) {
      const FieldElement& v = inputs.at(w.name);
      if (v.modulus() != f.modulus())
        throw Error(Errc::kInvalidArgument, "input '" + w.name + "' is from a different field");
      t.set(i, v);
    }
  }
  for (const Gate& g : circuit.gates) {
    const FieldElement& l = t.at(g.left);
    const FieldElement& r = t.at(g.right);
    t.set(g.out, g.op == GateOp::kPlus ? l + r : l * r);
  }
  for (const Output& o : circuit.outputs) {
    if (!o.aux) continue;
    const FieldElement& v = t.at(o.wire);
    t.set(*o.aux, v.is_zero() ? f.zero() : v.inverse());
  }
  return t;
}

// True iff every cell is consistent: One and constants hold their values,
// every gate equation holds, every relation holds, and each inverse hint
// really is the inverse of its asserted-nonzero wire.
inline bool check_solution(const Circuit& circuit, const Assignment& t) {
  for (WireId i = 0; i < circuit.wires.size(); ++i) t.at(i);
  const Field& f = circuit.field;
  for (WireId i = 0; i < circuit.wires.size(); ++i) {
    const Wire& w = circuit.wires[i];
    if (w.kind == WireKind::kOne && t.at(i) != f.one()) return false;
    if (w.kind == WireKind::kConst && t.at(i) != w.value) return false;
  }
  for (const Gate& g : circuit.gates) {
    const FieldElement& l = t.at(g.left);
    const FieldElement& r = t.at(g.right);
    if (t.at(g.out) != (g.op == GateOp::kPlus ? l + r : l * r)) return false;
  }
  for (const Output& o : circuit.outputs) {
    const FieldElement& v = t.at(o.wire);
    if (o.relation == Relation::kEqualZero) {
      if (!v.is_zero()) return false;
    } else if (v * t.at(*o.aux) != f.one()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

using ordered_json = nlohmann::ordered_json;

inline std::string_view wire_kind_name(WireKind k) {
  switch (k) {
    case WireKind::kOne: return "one";
    case WireKind::kInput: return "input";
    case WireKind::kConst: return "const";
    case WireKind::kGate: return "gate";
    case WireKind::kAux: return "aux";
  }
  return "";
}

inline ordered_json circuit_to_json(const Circuit& c) {
  ordered_json j;
  j["field"] = std::to_string(c.field.modulus());
  ordered_json wires = ordered_json::array();
  for (const Wire& w : c.wires) {
    ordered_json jw;
    jw["kind"] = wire_kind_name(w.kind);
    if (w.kind == WireKind::kConst) {
      jw["value"] = w.value.to_string();
    } else {
      jw["name"] = w.name;
    }
    if (w.kind == WireKind::kAux) jw["of"] = w.of;
    wires.push_back(std::move(jw));
  }
  j["wires"] = std::move(wires);
  ordered_json gates = ordered_json::array();
  for (const Gate& g : c.gates) {
    gates.push_back({{"op", g.op == GateOp::kPlus ? "Plus" : "Times"},
                     {"l", g.left},
                     {"r", g.right},
                     {"o", g.out},
                     {"d", g.index}});
  }
  j["gates"] = std::move(gates);
  ordered_json outs = ordered_json::array();
  for (const Output& o : c.outputs) {
    ordered_json jo{{"wire", o.wire}, {"rel", relation_tag(o.relation)}};
    if (o.aux) jo["aux"] = *o.aux;
    outs.push_back(std::move(jo));
  }
  j["outputs"] = std::move(outs);
  return j;
}

// Loads and validates structure (wire 0 is One, topological gates,
// contiguous indices, well-formed outputs).
inline Circuit circuit_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& msg) { return Error(Errc::kInvalidArgument, "circuit: " + msg); };
  try {
    Circuit c;
    c.field = Field::parse(j.at("field").get<std::string>());
    for (const auto& jw : j.at("wires")) {
      std::string kind = jw.at("kind").get<std::string>();
      Wire w{WireKind::kOne, "", c.field.zero(), 0};
      if (kind == "one") {
        w.kind = WireKind::kOne;
        w.value = c.field.one();
      } else if (kind == "input") {
        w.kind = WireKind::kInput;
      } else if (kind == "const") {
        w.kind = WireKind::kConst;
        w.value = c.field.parse_element(jw.at("value").get<std::string>());
      } else if (kind == "gate") {
        w.kind = WireKind::kGate;
      } else if (kind == "aux") {
        w.kind = WireKind::kAux;
        w.of = jw.at("of").get<WireId>();
      } else {
        throw bad("unknown wire kind '" + kind + "'");
      }
      if (w.kind != WireKind::kConst) w.name = jw.at("name").get<std::string>();
      c.wires.push_back(std::move(w));
    }
    if (c.wires.empty() || c.wires[0].kind != WireKind::kOne) throw bad("wire 0 must be One");
    const auto n = static_cast<WireId>(c.wires.size());
    std::vector<bool> defined(n, false);
    for (WireId i = 0; i < n; ++i) {
      auto k = c.wires[i].kind;
      defined[i] = k != WireKind::kGate && k != WireKind::kAux;
    }
    for (const auto& jg : j.at("gates")) {
      std::string op = jg.at("op").get<std::string>();
      if (op != "Plus" && op != "Times") throw bad("unknown gate op '" + op + "'");
      Gate g{op == "Plus" ? GateOp::kPlus : GateOp::kTimes, jg.at("l").get<WireId>(),
             jg.at("r").get<WireId>(), jg.at("o").get<WireId>(), jg.at("d").get<uint32_t>()};
      if (g.index != c.gates.size() + 1) throw bad("gate indices must be 1..N in order");
      if (g.left >= n || g.right >= n || g.out >= n || !defined[g.left] || !defined[g.right])
        throw bad("gate " + std::to_string(g.index) + " reads an undefined wire");
      if (c.wires[g.out].kind != WireKind::kGate || defined[g.out])
        throw bad("gate " + std::to_string(g.index) + " has an invalid output wire");
      defined[g.out] = true;
      c.gates.push_back(g);
    }
    for (const auto& jo : j.at("outputs")) {
      std::string rel = jo.at("rel").get<std::string>();
      if (rel != "eq0" && rel != "neq0") throw bad("unknown relation '" + rel + "'");
      Output o{jo.at("wire").get<WireId>(),
               rel == "eq0" ? Relation::kEqualZero : Relation::kNotEqualZero, std::nullopt};
      if (o.wire >= n || !defined[o.wire]) throw bad("output names an undefined wire");
      if (o.relation == Relation::kNotEqualZero) {
        WireId aux = jo.at("aux").get<WireId>();
        if (aux >= n || c.wires[aux].kind != WireKind::kAux || c.wires[aux].of != o.wire)
          throw bad("output aux wire mismatch");
        o.aux = aux;
      }
      c.outputs.push_back(o);
    }
    for (WireId i = 0; i < n; ++i) {
      if (c.wires[i].kind == WireKind::kGate && !defined[i]) throw bad("dangling gate wire");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw bad(e.what());
  }
}

}  // namespace snarkpipe
