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

// Interactive commit-then-reveal zero-knowledge protocol.
//
// Each round the prover ciphers the public problem with a fresh
// isomorphism and commits to the ciphered instance entry by entry. The
// verifier flips a coin and asks for either the isomorphism (and every
// salt) or the ciphered solution (and only the salts needed to check it).
//
// Hamiltonian cycle: the isomorphism is a vertex permutation pi and the
// committed instance is the permuted adjacency matrix, M'[pi(i)][pi(j)] =
// M[i][j]. SAT-3: the isomorphism permutes variable indices and flips
// per-variable polarity; clause order is kept.
//
// Commitment encodings (all integers little-endian, salt 16 bytes):
//   matrix entry  SHA-256(u32 row | u32 col | u8 bit | salt)
//   clause        SHA-256(u32 index | i32 lit0 | i32 lit1 | i32 lit2 | salt)

#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "snarkpipe/error.hpp"
#include "snarkpipe/rng.hpp"

namespace snarkpipe::interactive {

using Clause = std::array<int32_t, 3>;
using Salt = std::array<uint8_t, 16>;

struct HamiltonianCycleProblem {
  uint32_t vertices = 0;
  std::vector<uint8_t> adjacency;  // row-major vertices x vertices, 0-based

  bool edge(uint32_t a, uint32_t b) const { return adjacency[a * vertices + b] != 0; }

  static HamiltonianCycleProblem from_edges(uint32_t n,
                                            const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    HamiltonianCycleProblem p{n, std::vector<uint8_t>(size_t{n} * n, 0)};
    for (auto [a, b] : edges) {
      if (a >= n || b >= n || a == b)
        throw Error(Errc::kInvalidProblem, "edge (" + std::to_string(a + 1) + "," +
                                               std::to_string(b + 1) + ") is not simple");
      p.adjacency[a * n + b] = p.adjacency[b * n + a] = 1;
    }
    return p;
  }
  bool operator==(const HamiltonianCycleProblem&) const = default;
};

struct Sat3Problem {
  uint32_t variables = 0;
  std::vector<Clause> clauses;  // literals are +-(1..variables)
  bool operator==(const Sat3Problem&) const = default;
};

using PublicProblem = std::variant<HamiltonianCycleProblem, Sat3Problem>;

struct HamiltonianCycle {
  std::vector<uint32_t> order;  // 0-based vertices
};
struct SatAssignment {
  std::vector<uint8_t> values;  // index v-1 holds x_v
};
using PrivateSolution = std::variant<HamiltonianCycle, SatAssignment>;

enum class Challenge { kRevealCipher, kRevealSolution };

inline std::string_view challenge_name(Challenge c) {
  return c == Challenge::kRevealCipher ? "reveal_cipher" : "reveal_solution";
}

struct Isomorphism {
  std::vector<uint32_t> permutation;
  std::vector<uint8_t> sign_flips;  // SAT only
};

struct RoundCommitment {
  std::vector<Digest> digests;
};

struct CipherReveal {
  Isomorphism isomorphism;
  std::vector<Salt> salts;  // every entry
};
struct CycleReveal {
  std::vector<uint32_t> cycle;
  std::vector<Salt> salts;  // entry (cycle[i], cycle[i+1 mod n]) for each i
};
struct SatReveal {
  std::vector<Clause> clauses;
  std::vector<uint8_t> assignment;
  std::vector<Salt> salts;
};
using Response = std::variant<CipherReveal, CycleReveal, SatReveal>;

// ---------------------------------------------------------------------------
// Validation

inline void validate(const PublicProblem& problem) {
  if (auto* g = std::get_if<HamiltonianCycleProblem>(&problem)) {
    if (g->adjacency.size() != size_t{g->vertices} * g->vertices)
      throw Error(Errc::kInvalidProblem, "adjacency matrix has the wrong size");
    for (uint32_t i = 0; i < g->vertices; ++i) {
      if (g->edge(i, i)) throw Error(Errc::kInvalidProblem, "graph has a self-loop");
      for (uint32_t j = 0; j < g->vertices; ++j) {
        if (g->adjacency[i * g->vertices + j] > 1 || g->edge(i, j) != g->edge(j, i))
          throw Error(Errc::kInvalidProblem, "graph must be simple and undirected");
      }
    }
    return;
  }
  const auto& sat = std::get<Sat3Problem>(problem);
  for (const Clause& c : sat.clauses) {
    for (int32_t lit : c) {
      if (lit == 0 || static_cast<uint32_t>(lit < 0 ? -static_cast<int64_t>(lit) : lit) > sat.variables)
        throw Error(Errc::kInvalidProblem, "literal " + std::to_string(lit) + " out of range");
    }
  }
}

inline bool is_hamiltonian_cycle(const HamiltonianCycleProblem& g, const std::vector<uint32_t>& cycle) {
  const uint32_t n = g.vertices;
  if (n < 3 || cycle.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (uint32_t v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (uint32_t i = 0; i < n; ++i)
    if (!g.edge(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

inline bool literal_true(int32_t lit, const std::vector<uint8_t>& a) {
  uint32_t var = static_cast<uint32_t>(lit < 0 ? -lit : lit) - 1;
  return (a[var] != 0) != (lit < 0);
}

inline bool satisfies(const Sat3Problem& sat, const std::vector<uint8_t>& a) {
  if (a.size() != sat.variables) return false;
  for (const Clause& c : sat.clauses) {
    bool ok = false;
    for (int32_t lit : c) {
      int64_t mag = lit < 0 ? -static_cast<int64_t>(lit) : lit;
      if (lit == 0 || mag > sat.variables) return false;
      ok = ok || literal_true(lit, a);
    }
    if (!ok) return false;
  }
  return true;
}

inline bool is_solution(const PublicProblem& problem, const PrivateSolution& solution) {
  if (auto* g = std::get_if<HamiltonianCycleProblem>(&problem)) {
    auto* c = std::get_if<HamiltonianCycle>(&solution);
    return c && is_hamiltonian_cycle(*g, c->order);
  }
  auto* a = std::get_if<SatAssignment>(&solution);
  return a && satisfies(std::get<Sat3Problem>(problem), a->values);
}

// ---------------------------------------------------------------------------
// Commitments and ciphers

namespace detail {

inline void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

}  // namespace detail

inline Digest commit_entry(uint32_t row, uint32_t col, uint8_t bit, const Salt& salt) {
  std::vector<uint8_t> buf;
  detail::put_u32(buf, row);
  detail::put_u32(buf, col);
  buf.push_back(bit);
  buf.insert(buf.end(), salt.begin(), salt.end());
  return sha256(buf);
}

inline Digest commit_clause(uint32_t index, const Clause& clause, const Salt& salt) {
  std::vector<uint8_t> buf;
  detail::put_u32(buf, index);
  for (int32_t lit : clause) detail::put_u32(buf, static_cast<uint32_t>(lit));
  buf.insert(buf.end(), salt.begin(), salt.end());
  return sha256(buf);
}

inline HamiltonianCycleProblem apply(const Isomorphism& iso, const HamiltonianCycleProblem& g) {
  HamiltonianCycleProblem out{g.vertices, std::vector<uint8_t>(g.adjacency.size(), 0)};
  const auto& pi = iso.permutation;
  for (uint32_t i = 0; i < g.vertices; ++i)
    for (uint32_t j = 0; j < g.vertices; ++j)
      out.adjacency[pi[i] * g.vertices + pi[j]] = g.adjacency[i * g.vertices + j];
  return out;
}

inline int32_t apply_literal(const Isomorphism& iso, int32_t lit) {
  uint32_t var = static_cast<uint32_t>(lit < 0 ? -lit : lit) - 1;
  bool negated = (lit < 0) != (iso.sign_flips[var] != 0);
  int32_t mapped = static_cast<int32_t>(iso.permutation[var]) + 1;
  return negated ? -mapped : mapped;
}

inline Sat3Problem apply(const Isomorphism& iso, const Sat3Problem& sat) {
  Sat3Problem out{sat.variables, {}};
  for (const Clause& c : sat.clauses)
    out.clauses.push_back({apply_literal(iso, c[0]), apply_literal(iso, c[1]), apply_literal(iso, c[2])});
  return out;
}

inline std::vector<uint8_t> apply_assignment(const Isomorphism& iso, const std::vector<uint8_t>& a) {
  std::vector<uint8_t> out(a.size());
  for (size_t v = 0; v < a.size(); ++v) out[iso.permutation[v]] = (a[v] != 0) != (iso.sign_flips[v] != 0);
  return out;
}

inline bool is_isomorphism(const Isomorphism& iso, const PublicProblem& problem) {
  const bool sat = std::holds_alternative<Sat3Problem>(problem);
  const uint32_t n = sat ? std::get<Sat3Problem>(problem).variables
                         : std::get<HamiltonianCycleProblem>(problem).vertices;
  if (iso.permutation.size() != n) return false;
  if (sat ? iso.sign_flips.size() != n : !iso.sign_flips.empty()) return false;
  std::vector<bool> seen(n, false);
  for (uint32_t p : iso.permutation) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

inline Isomorphism random_isomorphism(const PublicProblem& problem, DeterministicRng& rng) {
  Isomorphism iso;
  if (auto* sat = std::get_if<Sat3Problem>(&problem)) {
    iso.permutation = rng.permutation(sat->variables);
    for (uint32_t i = 0; i < sat->variables; ++i) iso.sign_flips.push_back(rng.coin() ? 1 : 0);
  } else {
    iso.permutation = rng.permutation(std::get<HamiltonianCycleProblem>(problem).vertices);
  }
  return iso;
}

inline Isomorphism identity_isomorphism(const PublicProblem& problem) {
  Isomorphism iso;
  uint32_t n = 0;
  if (auto* sat = std::get_if<Sat3Problem>(&problem)) {
    n = sat->variables;
    iso.sign_flips.assign(n, 0);
  } else {
    n = std::get<HamiltonianCycleProblem>(problem).vertices;
  }
  for (uint32_t i = 0; i < n; ++i) iso.permutation.push_back(i);
  return iso;
}

// Prover side of one round. Holds the committed instance, the isomorphism
// and the claimed ciphered solution; answers exactly one challenge.
class ProverRound {
 public:
  const RoundCommitment& commitment() const { return commitment_; }
  const PublicProblem& committed_instance() const { return instance_; }

  Response respond(Challenge challenge) {
    if (consumed_) throw Error(Errc::kRoundConsumed, "this round already answered a challenge");
    consumed_ = true;
    if (challenge == Challenge::kRevealCipher) return CipherReveal{iso_, salts_};
    if (auto* g = std::get_if<HamiltonianCycleProblem>(&instance_)) {
      CycleReveal r{std::get<HamiltonianCycle>(solution_).order, {}};
      const uint32_t n = g->vertices;
      for (size_t i = 0; i < r.cycle.size(); ++i) {
        uint32_t a = r.cycle[i] % n, b = r.cycle[(i + 1) % r.cycle.size()] % n;
        r.salts.push_back(salts_[a * n + b]);
      }
      return r;
    }
    return SatReveal{std::get<Sat3Problem>(instance_).clauses,
                     std::get<SatAssignment>(solution_).values, salts_};
  }

 private:
  friend ProverRound make_round(PublicProblem instance, Isomorphism iso, PrivateSolution claimed,
                                DeterministicRng& rng);

  PublicProblem instance_;
  Isomorphism iso_;
  PrivateSolution solution_;
  std::vector<Salt> salts_;
  RoundCommitment commitment_;
  bool consumed_ = false;
};

// Commits to `instance` entry by entry with fresh salts.
inline ProverRound make_round(PublicProblem instance, Isomorphism iso, PrivateSolution claimed,
                              DeterministicRng& rng) {
  ProverRound r;
  auto salt = [&] {
    Salt s;
    rng.fill(s);
    return s;
  };
  if (auto* g = std::get_if<HamiltonianCycleProblem>(&instance)) {
    for (uint32_t i = 0; i < g->vertices; ++i)
      for (uint32_t j = 0; j < g->vertices; ++j) {
        r.salts_.push_back(salt());
        r.commitment_.digests.push_back(commit_entry(i, j, g->edge(i, j) ? 1 : 0, r.salts_.back()));
      }
  } else {
    const auto& sat = std::get<Sat3Problem>(instance);
    for (uint32_t i = 0; i < sat.clauses.size(); ++i) {
      r.salts_.push_back(salt());
      r.commitment_.digests.push_back(commit_clause(i, sat.clauses[i], r.salts_.back()));
    }
  }
  r.instance_ = std::move(instance);
  r.iso_ = std::move(iso);
  r.solution_ = std::move(claimed);
  return r;
}

inline PrivateSolution cipher_solution(const Isomorphism& iso, const PrivateSolution& solution) {
  if (auto* c = std::get_if<HamiltonianCycle>(&solution)) {
    HamiltonianCycle out;
    for (uint32_t v : c->order) out.order.push_back(iso.permutation[v]);
    return out;
  }
  return SatAssignment{apply_assignment(iso, std::get<SatAssignment>(solution).values)};
}

// Honest round under a caller-chosen isomorphism.
inline ProverRound cipher_round_with(const PublicProblem& problem, const PrivateSolution& solution,
                                     const Isomorphism& iso, DeterministicRng& rng) {
  validate(problem);
  if (!is_solution(problem, solution))
    throw Error(Errc::kInvalidSolution, "the private solution does not solve the public problem");
  if (!is_isomorphism(iso, problem)) throw Error(Errc::kInvalidArgument, "malformed isomorphism");
  PublicProblem ciphered = std::visit([&](const auto& p) -> PublicProblem { return apply(iso, p); }, problem);
  return make_round(std::move(ciphered), iso, cipher_solution(iso, solution), rng);
}

inline ProverRound cipher_round(const PublicProblem& problem, const PrivateSolution& solution,
                                DeterministicRng& rng) {
  Isomorphism iso = random_isomorphism(problem, rng);
  return cipher_round_with(problem, solution, iso, rng);
}

// Cheating prover without a solution. It can prepare only the branch it
// anticipates: for kRevealCipher it commits honestly to the ciphered
// problem and holds a bogus solution; for kRevealSolution it commits to a
// fake instance it can solve and holds a bogus isomorphism.
inline ProverRound forge_round(const PublicProblem& problem, Challenge anticipated,
                               DeterministicRng& rng) {
  validate(problem);
  Isomorphism iso = random_isomorphism(problem, rng);
  if (anticipated == Challenge::kRevealCipher) {
    if (auto* g = std::get_if<HamiltonianCycleProblem>(&problem)) {
      HamiltonianCycle bogus;
      for (uint32_t i = 0; i < g->vertices; ++i) bogus.order.push_back(i);
      return make_round(apply(iso, *g), iso, bogus, rng);
    }
    const auto& sat = std::get<Sat3Problem>(problem);
    SatAssignment bogus;
    for (uint32_t i = 0; i < sat.variables; ++i) bogus.values.push_back(rng.coin() ? 1 : 0);
    return make_round(apply(iso, sat), iso, bogus, rng);
  }

  Isomorphism decoy = random_isomorphism(problem, rng);
  if (auto* g = std::get_if<HamiltonianCycleProblem>(&problem)) {
    // Fake instance: a bare cycle through a random vertex order.
    HamiltonianCycle fake{rng.permutation(g->vertices)};
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t i = 0; i < fake.order.size(); ++i)
      edges.emplace_back(fake.order[i], fake.order[(i + 1) % fake.order.size()]);
    return make_round(HamiltonianCycleProblem::from_edges(g->vertices, edges), decoy, fake, rng);
  }
  // Fake instance: the ciphered clauses with polarity patched until a random
  // assignment satisfies them.
  Sat3Problem fake = apply(iso, std::get<Sat3Problem>(problem));
  SatAssignment a;
  for (uint32_t i = 0; i < fake.variables; ++i) a.values.push_back(rng.coin() ? 1 : 0);
  for (Clause& c : fake.clauses) {
    if (!literal_true(c[0], a.values) && !literal_true(c[1], a.values) && !literal_true(c[2], a.values))
      c[0] = -c[0];
  }
  return make_round(std::move(fake), decoy, a, rng);
}

inline bool verify_round(const PublicProblem& problem, const RoundCommitment& commitment,
                         Challenge challenge, const Response& response) {
  const auto* graph = std::get_if<HamiltonianCycleProblem>(&problem);
  const auto* sat = std::get_if<Sat3Problem>(&problem);
  const size_t expected = graph ? size_t{graph->vertices} * graph->vertices : sat->clauses.size();
  if (commitment.digests.size() != expected) return false;

  if (challenge == Challenge::kRevealCipher) {
    const auto* r = std::get_if<CipherReveal>(&response);
    if (!r || r->salts.size() != expected || !is_isomorphism(r->isomorphism, problem)) return false;
    if (graph) {
      HamiltonianCycleProblem c = apply(r->isomorphism, *graph);
      for (uint32_t i = 0; i < c.vertices; ++i)
        for (uint32_t j = 0; j < c.vertices; ++j) {
          size_t idx = size_t{i} * c.vertices + j;
          if (commit_entry(i, j, c.adjacency[idx], r->salts[idx]) != commitment.digests[idx]) return false;
        }
      return true;
    }
    Sat3Problem c = apply(r->isomorphism, *sat);
    for (uint32_t i = 0; i < c.clauses.size(); ++i)
      if (commit_clause(i, c.clauses[i], r->salts[i]) != commitment.digests[i]) return false;
    return true;
  }

  if (graph) {
    const auto* r = std::get_if<CycleReveal>(&response);
    const uint32_t n = graph->vertices;
    if (!r || n < 3 || r->cycle.size() != n || r->salts.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (uint32_t v : r->cycle) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t a = r->cycle[i], b = r->cycle[(i + 1) % n];
      if (commit_entry(a, b, 1, r->salts[i]) != commitment.digests[size_t{a} * n + b]) return false;
    }
    return true;
  }
  const auto* r = std::get_if<SatReveal>(&response);
  if (!r || r->clauses.size() != expected || r->salts.size() != expected) return false;
  for (uint32_t i = 0; i < r->clauses.size(); ++i)
    if (commit_clause(i, r->clauses[i], r->salts[i]) != commitment.digests[i]) return false;
  return satisfies(Sat3Problem{sat->variables, r->clauses}, r->assignment);
}

// ---------------------------------------------------------------------------
// Sessions

struct HonestProver {
  PrivateSolution solution;
};
struct CheatingProver {};
using ProverStrategy = std::variant<HonestProver, CheatingProver>;

struct RoundRecord {
  uint32_t round;
  RoundCommitment commitment;
  Challenge challenge;
  Response response;
  bool verdict;
};

struct SessionResult {
  bool accepted = false;
  std::vector<RoundRecord> transcript;
};

// The verifier's coins and the prover's randomness come from independent
// child streams of `rng`. The verifier stops at the first failed round.
inline SessionResult run_session(const PublicProblem& problem, const ProverStrategy& prover,
                                 uint32_t rounds, const DeterministicRng& rng) {
  if (rounds < 1) throw Error(Errc::kInvalidArgument, "at least one round is required");
  DeterministicRng prover_rng = rng.derive("prover");
  DeterministicRng verifier_rng = rng.derive("verifier");
  SessionResult result;
  result.accepted = true;
  for (uint32_t i = 1; i <= rounds; ++i) {
    ProverRound round = std::visit(
        [&](const auto& p) -> ProverRound {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, HonestProver>) {
            return cipher_round(problem, p.solution, prover_rng);
          } else {
            Challenge guess = prover_rng.coin() ? Challenge::kRevealCipher : Challenge::kRevealSolution;
            return forge_round(problem, guess, prover_rng);
          }
        },
        prover);
    Challenge challenge = verifier_rng.coin() ? Challenge::kRevealCipher : Challenge::kRevealSolution;
    Response response = round.respond(challenge);
    bool ok = verify_round(problem, round.commitment(), challenge, response);
    result.transcript.push_back({i, round.commitment(), challenge, std::move(response), ok});
    if (!ok) {
      result.accepted = false;
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// JSON

struct LoadedProblem {
  PublicProblem problem;
  std::optional<PrivateSolution> solution;
};

// {"type": "hamiltonian_cycle", "vertices": n, "edges": [[1,2],...], "cycle": [...]}
// {"type": "sat3", "variables": n, "clauses": [[1,2,-3],...], "assignment": [1,0,0]}
// Vertices are 1-based in files; the solution field is optional.
inline LoadedProblem problem_from_json(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    LoadedProblem out{HamiltonianCycleProblem{}, std::nullopt};
    if (type == "hamiltonian_cycle") {
      uint32_t n = j.at("vertices").get<uint32_t>();
      std::vector<std::pair<uint32_t, uint32_t>> edges;
      for (const auto& e : j.at("edges")) {
        auto pair = e.get<std::vector<uint32_t>>();
        if (pair.size() != 2 || pair[0] == 0 || pair[1] == 0)
          throw Error(Errc::kInvalidProblem, "edges are pairs of 1-based vertices");
        edges.emplace_back(pair[0] - 1, pair[1] - 1);
      }
      out.problem = HamiltonianCycleProblem::from_edges(n, edges);
      if (j.contains("cycle")) {
        HamiltonianCycle c;
        for (uint32_t v : j.at("cycle").get<std::vector<uint32_t>>()) {
          if (v == 0) throw Error(Errc::kInvalidProblem, "cycle vertices are 1-based");
          c.order.push_back(v - 1);
        }
        out.solution = c;
      }
    } else if (type == "sat3") {
      Sat3Problem sat;
      sat.variables = j.at("variables").get<uint32_t>();
      for (const auto& c : j.at("clauses")) {
        auto lits = c.get<std::vector<int32_t>>();
        if (lits.size() != 3) throw Error(Errc::kInvalidProblem, "every clause has 3 literals");
        sat.clauses.push_back({lits[0], lits[1], lits[2]});
      }
      out.problem = sat;
      if (j.contains("assignment")) {
        SatAssignment a;
        for (const auto& v : j.at("assignment")) a.values.push_back(v.get<int>() != 0 ? 1 : 0);
        out.solution = a;
      }
    } else {
      throw Error(Errc::kInvalidProblem, "unknown problem type '" + type + "'");
    }
    validate(out.problem);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kInvalidProblem, e.what());
  }
}

inline nlohmann::ordered_json response_to_json(const Response& response) {
  nlohmann::ordered_json j;
  auto salts = [](const std::vector<Salt>& ss) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : ss) arr.push_back(to_hex(s));
    return arr;
  };
  if (auto* r = std::get_if<CipherReveal>(&response)) {
    j["permutation"] = r->isomorphism.permutation;
    if (!r->isomorphism.sign_flips.empty()) j["sign_flips"] = r->isomorphism.sign_flips;
    j["salts"] = salts(r->salts);
  } else if (auto* r = std::get_if<CycleReveal>(&response)) {
    j["cycle"] = r->cycle;
    j["salts"] = salts(r->salts);
  } else {
    const auto& s = std::get<SatReveal>(response);
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& c : s.clauses) clauses.push_back({c[0], c[1], c[2]});
    j["clauses"] = std::move(clauses);
    j["assignment"] = s.assignment;
    j["salts"] = salts(s.salts);
  }
  return j;
}

inline nlohmann::ordered_json transcript_to_json(const SessionResult& session) {
  nlohmann::ordered_json j;
  j["accepted"] = session.accepted;
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (const auto& r : session.transcript) {
    nlohmann::ordered_json jr;
    jr["round"] = r.round;
    nlohmann::ordered_json digests = nlohmann::ordered_json::array();
    for (const auto& d : r.commitment.digests) digests.push_back(to_hex(d));
    jr["commitment"] = std::move(digests);
    jr["challenge"] = challenge_name(r.challenge);
    jr["response"] = response_to_json(r.response);
    jr["verdict"] = r.verdict;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  return j;
}

}  // namespace snarkpipe::interactive
