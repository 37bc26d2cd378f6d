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

// Polynomial-program DSL.
//
//   program    := "inputs" ident ("," ident)* ";" definition* assertion+
//   definition := ident ":=" expr ";"
//   assertion  := "assert" ident ("==" | "!=") "0" ";"
//   expr       := term (("+" | "-") term)*
//   term       := factor ("*" factor)*
//   factor     := ["-"] (integer | ident | "(" expr ")") ["^" integer]
//
// '#' starts a comment running to end of line. Subtraction becomes
// Add(..., Neg(x)) at parse time; "-x^2" is Neg(Pow(x, 2)).

#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"

namespace snarkpipe {

enum class Relation { kEqualZero, kNotEqualZero };

inline std::string_view relation_tag(Relation r) {
  return r == Relation::kEqualZero ? "eq0" : "neq0";
}

struct Expression {
  enum class Kind { kConstant, kVariable, kAdd, kMul, kNeg, kPow };

  Kind kind = Kind::kConstant;
  std::string text;  // decimal digits (kConstant) or identifier (kVariable)
  uint64_t exponent = 0;  // kPow
  std::vector<Expression> children;
  int line = 0;
  int column = 0;

  static Expression constant(std::string digits) {
    Expression e;
    e.kind = Kind::kConstant;
    e.text = std::move(digits);
    return e;
  }
  static Expression variable(std::string name) {
    Expression e;
    e.kind = Kind::kVariable;
    e.text = std::move(name);
    return e;
  }
  static Expression node(Kind kind, std::vector<Expression> children, uint64_t exponent = 0) {
    Expression e;
    e.kind = kind;
    e.children = std::move(children);
    e.exponent = exponent;
    return e;
  }

  // Structural equality; source positions are ignored.
  bool operator==(const Expression& o) const {
    return kind == o.kind && text == o.text && exponent == o.exponent && children == o.children;
  }
};

struct Definition {
  std::string name;
  Expression expr;
  bool operator==(const Definition&) const = default;
};

struct Condition {
  std::string name;
  Relation relation;
  bool operator==(const Condition&) const = default;
};

struct Program {
  std::vector<std::string> inputs;
  std::vector<Definition> definitions;
  std::vector<Condition> conditions;
  bool operator==(const Program&) const = default;
};

namespace detail {

struct Token {
  enum class Kind { kIdent, kInteger, kSymbol, kEnd };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::kEnd, "", line_, col_});
        return out;
      }
      int line = line_, col = col_;
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          word.push_back(advance());
        out.push_back({Token::Kind::kIdent, word, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          digits.push_back(advance());
        out.push_back({Token::Kind::kInteger, digits, line, col});
      } else if (c == ':' || c == '=' || c == '!') {
        advance();
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          out.push_back({Token::Kind::kSymbol, std::string{c, '='}, line, col});
        } else {
          throw SourceError(Errc::kSyntaxError, line, col,
                            std::string("unexpected character '") + c + "'");
        }
      } else if (std::string_view("+-*^(),;").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Token::Kind::kSymbol, std::string(1, c), line, col});
      } else {
        throw SourceError(Errc::kSyntaxError, line, col,
                          std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline bool is_keyword(std::string_view word) {
  return word == "inputs" || word == "assert" || word == "one";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program parse() {
    Program prog;
    expect_word("inputs");
    prog.inputs.push_back(identifier("input name"));
    while (accept(","))
      prog.inputs.push_back(identifier("input name"));
    expect(";");

    while (peek().kind == Token::Kind::kIdent && peek().text != "assert") {
      Definition def;
      def.name = identifier("definition name");
      def_positions_.push_back({toks_[pos_ - 1].line, toks_[pos_ - 1].column});
      expect(":=");
      def.expr = expr();
      expect(";");
      prog.definitions.push_back(std::move(def));
    }

    if (!(peek().kind == Token::Kind::kIdent && peek().text == "assert"))
      fail(peek(), "expected a definition or 'assert'");
    while (peek().kind == Token::Kind::kIdent && peek().text == "assert") {
      ++pos_;
      Condition cond;
      cond.name = identifier("asserted name");
      cond_positions_.push_back({toks_[pos_ - 1].line, toks_[pos_ - 1].column});
      if (accept("==")) {
        cond.relation = Relation::kEqualZero;
      } else if (accept("!=")) {
        cond.relation = Relation::kNotEqualZero;
      } else {
        fail(peek(), "expected '==' or '!='");
      }
      const Token& zero = peek();
      if (zero.kind != Token::Kind::kInteger || zero.text.find_first_not_of('0') != std::string::npos)
        fail(zero, "assertions compare against 0");
      ++pos_;
      expect(";");
      prog.conditions.push_back(std::move(cond));
    }
    if (peek().kind != Token::Kind::kEnd) fail(peek(), "expected 'assert' or end of input");

    resolve(prog);
    return prog;
  }

 private:
  struct Pos {
    int line;
    int column;
  };

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::string near = t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw SourceError(Errc::kSyntaxError, t.line, t.column, msg + " near " + near);
  }

  bool accept(std::string_view sym) {
    if (peek().kind == Token::Kind::kSymbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) fail(peek(), "expected '" + std::string(sym) + "'");
  }
  void expect_word(std::string_view word) {
    if (peek().kind != Token::Kind::kIdent || peek().text != word)
      fail(peek(), "expected '" + std::string(word) + "'");
    ++pos_;
  }
  std::string identifier(std::string_view what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::kIdent) fail(t, "expected " + std::string(what));
    if (is_keyword(t.text)) fail(t, "'" + t.text + "' is reserved");
    ++pos_;
    return t.text;
  }

  Expression expr() {
    const Token& start = peek();
    std::vector<Expression> terms;
    terms.push_back(term());
    for (;;) {
      if (accept("+")) {
        terms.push_back(term());
      } else if (accept("-")) {
        const Token& at = peek();
        Expression neg = Expression::node(Expression::Kind::kNeg, {term()});
        neg.line = at.line;
        neg.column = at.column;
        terms.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    Expression e = Expression::node(Expression::Kind::kAdd, std::move(terms));
    e.line = start.line;
    e.column = start.column;
    return e;
  }

  Expression term() {
    const Token& start = peek();
    std::vector<Expression> factors;
    factors.push_back(factor());
    while (accept("*")) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    Expression e = Expression::node(Expression::Kind::kMul, std::move(factors));
    e.line = start.line;
    e.column = start.column;
    return e;
  }

  Expression factor() {
    const Token start = peek();
    bool negate = accept("-");
    Expression base = atom();
    if (accept("^")) {
      const Token& exp = peek();
      if (exp.kind == Token::Kind::kSymbol && exp.text == "-")
        throw SourceError(Errc::kInvalidExponent, exp.line, exp.column,
                          "exponents must be positive integers");
      if (exp.kind != Token::Kind::kInteger) fail(exp, "expected an integer exponent");
      uint64_t value = 0;
      if (exp.text.size() > 6 || (value = std::stoull(exp.text)) == 0 || value > kMaxExponent)
        throw SourceError(Errc::kInvalidExponent, exp.line, exp.column,
                          "exponent " + exp.text + " outside 1.." + std::to_string(kMaxExponent));
      ++pos_;
      Expression pow = Expression::node(Expression::Kind::kPow, {std::move(base)}, value);
      pow.line = start.line;
      pow.column = start.column;
      base = std::move(pow);
    }
    if (!negate) return base;
    Expression neg = Expression::node(Expression::Kind::kNeg, {std::move(base)});
    neg.line = start.line;
    neg.column = start.column;
    return neg;
  }

  Expression atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kInteger) {
      ++pos_;
      Expression e = Expression::constant(t.text);
      e.line = t.line;
      e.column = t.column;
      return e;
    }
    if (t.kind == Token::Kind::kIdent) {
      std::string name = identifier("identifier");
      Expression e = Expression::variable(std::move(name));
      e.line = t.line;
      e.column = t.column;
      return e;
    }
    if (accept("(")) {
      Expression inner = expr();
      expect(")");
      return inner;
    }
    fail(t, "expected an expression");
  }

  // Name resolution: each reference must be an input or an earlier
  // definition. A name defined later (or the definition itself) is a
  // forward reference.
  void resolve(const Program& prog) {
    std::set<std::string> known;
    std::map<std::string, size_t> def_index;
    for (const auto& in : prog.inputs) {
      if (!known.insert(in).second)
        throw Error(Errc::kRedefinition, "input '" + in + "' declared twice");
    }
    for (size_t i = 0; i < prog.definitions.size(); ++i) {
      const auto& d = prog.definitions[i];
      if (known.count(d.name) || def_index.count(d.name))
        throw SourceError(Errc::kRedefinition, def_positions_[i].line, def_positions_[i].column,
                          "'" + d.name + "' is already defined");
      def_index[d.name] = i;
    }
    for (size_t i = 0; i < prog.definitions.size(); ++i) {
      check_refs(prog.definitions[i].expr, known, def_index);
      known.insert(prog.definitions[i].name);
    }
    for (size_t i = 0; i < prog.conditions.size(); ++i) {
      const auto& c = prog.conditions[i];
      if (!def_index.count(c.name))
        throw SourceError(Errc::kUnknownIdentifier, cond_positions_[i].line,
                          cond_positions_[i].column,
                          "assert must name a definition, got '" + c.name + "'");
    }
  }

  void check_refs(const Expression& e, const std::set<std::string>& known,
                  const std::map<std::string, size_t>& defs) const {
    if (e.kind == Expression::Kind::kVariable && !known.count(e.text)) {
      if (defs.count(e.text))
        throw SourceError(Errc::kForwardReference, e.line, e.column,
                          "'" + e.text + "' is used before its definition");
      throw SourceError(Errc::kUnknownIdentifier, e.line, e.column,
                        "unknown identifier '" + e.text + "'");
    }
    for (const auto& c : e.children) check_refs(c, known, defs);
  }

  static constexpr uint64_t kMaxExponent = 4096;

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<Pos> def_positions_;
  std::vector<Pos> cond_positions_;
};

}  // namespace detail

inline Program parse_program(std::string_view source) {
  detail::Lexer lexer(source);
  detail::Parser parser(lexer.run());
  return parser.parse();
}

// Pretty printer; the output reparses to a structurally identical Program.
inline std::string to_source(const Expression& e) {
  using K = Expression::Kind;
  auto wrapped = [](const Expression& c) { return "(" + to_source(c) + ")"; };
  switch (e.kind) {
    case K::kConstant:
    case K::kVariable:
      return e.text;
    case K::kAdd: {
      std::string out;
      for (size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        if (i) out += " + ";
        out += c.kind == K::kAdd ? wrapped(c) : to_source(c);
      }
      return out;
    }
    case K::kMul: {
      std::string out;
      for (size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        if (i) out += " * ";
        out += (c.kind == K::kAdd || c.kind == K::kMul) ? wrapped(c) : to_source(c);
      }
      return out;
    }
    case K::kNeg: {
      const auto& c = e.children.front();
      bool bare = c.kind == K::kConstant || c.kind == K::kVariable || c.kind == K::kPow;
      return "-" + (bare ? to_source(c) : wrapped(c));
    }
    case K::kPow: {
      const auto& c = e.children.front();
      bool bare = c.kind == K::kConstant || c.kind == K::kVariable;
      return (bare ? to_source(c) : wrapped(c)) + "^" + std::to_string(e.exponent);
    }
  }
  return {};
}

inline std::string to_source(const Program& prog) {
  std::ostringstream os;
  os << "inputs ";
  for (size_t i = 0; i < prog.inputs.size(); ++i) os << (i ? ", " : "") << prog.inputs[i];
  os << ";\n";
  for (const auto& d : prog.definitions) os << d.name << " := " << to_source(d.expr) << ";\n";
  for (const auto& c : prog.conditions)
    os << "assert " << c.name << (c.relation == Relation::kEqualZero ? " == 0;\n" : " != 0;\n");
  return os.str();
}

using Valuation = std::map<std::string, FieldElement>;

struct EvalResult {
  Valuation values;  // every definition
  std::vector<bool> conditions;  // parallel to Program::conditions
  bool all_hold() const {
    for (bool c : conditions)
      if (!c) return false;
    return true;
  }
};

namespace detail {

inline void check_input_names(const std::vector<std::string>& declared, const Valuation& given) {
  for (const auto& name : declared) {
    if (!given.count(name)) throw Error(Errc::kMissingInput, "no value for input '" + name + "'");
  }
  std::set<std::string> decl(declared.begin(), declared.end());
  for (const auto& [name, _] : given) {
    if (!decl.count(name)) throw Error(Errc::kUnexpectedInput, "'" + name + "' is not an input");
  }
}

inline FieldElement eval_expr(const Expression& e, const Field& field, const Valuation& env) {
  using K = Expression::Kind;
  switch (e.kind) {
    case K::kConstant: return field.reduce_decimal(e.text);
    case K::kVariable: return env.at(e.text);
    case K::kAdd: {
      FieldElement acc = field.zero();
      for (const auto& c : e.children) acc += eval_expr(c, field, env);
      return acc;
    }
    case K::kMul: {
      FieldElement acc = field.one();
      for (const auto& c : e.children) acc *= eval_expr(c, field, env);
      return acc;
    }
    case K::kNeg: return -eval_expr(e.children.front(), field, env);
    case K::kPow: return eval_expr(e.children.front(), field, env).pow(e.exponent);
  }
  return field.zero();
}

}  // namespace detail

// Direct tree-walking evaluation; the reference every compiled stage is
// checked against.
inline EvalResult eval_program(const Program& prog, const Field& field, const Valuation& inputs) {
  detail::check_input_names(prog.inputs, inputs);
  Valuation env = inputs;
  EvalResult result;
  for (const auto& d : prog.definitions) {
    FieldElement v = detail::eval_expr(d.expr, field, env);
    env[d.name] = v;
    result.values[d.name] = v;
  }
  for (const auto& c : prog.conditions) {
    bool zero = env.at(c.name).is_zero();
    result.conditions.push_back(c.relation == Relation::kEqualZero ? zero : !zero);
  }
  return result;
}

}  // namespace snarkpipe
