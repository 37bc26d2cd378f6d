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

// snarkpipe: compile -> setup -> prove -> verify driver plus the
// interactive protocol demo.
//
// Exit codes: 0 success / accept, 1 usage or input error, 2 verification
// reject, 3 backend mismatch, 4 invalid witness (prover refused).

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snarkpipe/snarkpipe.hpp"

namespace fs = std::filesystem;
using namespace snarkpipe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitReject = 2;
constexpr int kExitBackend = 3;
constexpr int kExitInvalidWitness = 4;

struct GlobalOptions {
  std::string field;
  std::string backend = "transparent";
  std::string seed = "00";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  std::string text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kInvalidArgument, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const fs::path& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

Field resolve_field(const GlobalOptions& g) {
  return g.field.empty() ? Field() : Field::parse(g.field);
}

Circuit load_circuit(const GlobalOptions& g, const std::string& path) {
  Circuit c = circuit_from_json(read_json(path));
  if (!g.field.empty() && Field::parse(g.field).modulus() != c.field.modulus())
    throw Error(Errc::kInvalidArgument, "--field differs from the field the circuit was compiled for");
  return c;
}

FieldElement parse_value(const Field& f, const nlohmann::json& v, const std::string& name) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    throw Error(Errc::kInvalidArgument, "value of '" + name + "' must be a decimal string");
  }
  bool negative = !text.empty() && text.front() == '-';
  FieldElement e = f.reduce_decimal(negative ? std::string_view(text).substr(1) : text);
  return negative ? -e : e;
}

Valuation load_valuation(const Field& f, const std::string& path) {
  nlohmann::json j = read_json(path);
  if (!j.is_object()) throw Error(Errc::kInvalidArgument, "'" + path + "' must be a JSON object");
  Valuation out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = parse_value(f, it.value(), it.key());
  return out;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::kBackendMismatch: return kExitBackend;
    case Errc::kInvalidWitness: return kExitInvalidWitness;
    default: return kExitInput;
  }
}

// ---------------------------------------------------------------------------

int cmd_compile(const GlobalOptions& g, const std::string& source, const std::string& out,
                const std::string& emit_qap) {
  Field field = resolve_field(g);
  Program prog = parse_program(read_file(source));
  Circuit circuit = flatten(prog, field);
  for (const auto& w : circuit.warnings) std::cerr << source << ": warning: " << w << "\n";
  Qap qap = build_qap(circuit);
  write_json(out, circuit_to_json(circuit));
  if (!emit_qap.empty()) write_json(emit_qap, qap_to_json(qap));
  std::cout << "N = " << circuit.num_gates() << " gates\n"
            << "constraints = " << qap.num_constraints << "\n"
            << "symbols = " << qap.symbols.size() << "\n"
            << "wrote " << out << (emit_qap.empty() ? "" : " and " + emit_qap) << "\n";
  return kExitOk;
}

int cmd_setup(const GlobalOptions& g, const std::string& circuit_path, const std::string& public_csv,
              const std::string& out_dir) {
  Circuit circuit = load_circuit(g, circuit_path);
  Qap qap = build_qap(circuit);
  Group group(circuit.field, parse_backend(g.backend));
  KeyPair keys = setup(qap, group, split_names(public_csv),
                       DeterministicRng::from_hex(g.seed).derive("setup"));
  fs::create_directories(out_dir);
  write_json(fs::path(out_dir) / "evaluation_key.json", to_json(keys.evaluation));
  write_json(fs::path(out_dir) / "verification_key.json", to_json(keys.verification));
  std::cout << "backend = " << backend_name(group.backend()) << " (insecure: exposes discrete logs)\n"
            << "wrote " << (fs::path(out_dir) / "evaluation_key.json").string() << " and "
            << (fs::path(out_dir) / "verification_key.json").string() << "\n";
  return kExitOk;
}

int cmd_prove(const GlobalOptions& g, const std::string& circuit_path, const std::string& ek_path,
              const std::string& inputs_path, const std::string& out) {
  Circuit circuit = load_circuit(g, circuit_path);
  Qap qap = build_qap(circuit);
  EvaluationKey ek = evaluation_key_from_json(read_json(ek_path), parse_backend(g.backend));
  if (ek.group.field().modulus() != circuit.field.modulus())
    throw Error(Errc::kMalformedKey, "evaluation key field differs from the circuit field");
  Assignment t = solve(circuit, load_valuation(circuit.field, inputs_path));
  WitnessKey wk = prove(ek, qap, t);
  write_json(out, to_json(wk));
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& vk_path, const std::string& wk_path,
               const std::string& public_path) {
  const Backend backend = parse_backend(g.backend);
  VerificationKey vk = verification_key_from_json(read_json(vk_path), backend);
  std::map<std::string, FieldElement> pub;
  if (!public_path.empty()) pub = load_valuation(vk.group.field(), public_path);

  WitnessKey wk;
  try {
    std::string text = read_file(wk_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::kMalformedKey, std::string("witness key is not valid JSON: ") + e.what());
    }
    wk = witness_key_from_json(j, backend);
  } catch (const Error& e) {
    // An unreadable proof is a rejected proof; a missing file or a
    // different backend is still an input problem.
    if (e.code() != Errc::kMalformedKey) throw;
    std::cout << "witness key rejected: " << e.what() << "\nreject\n";
    return kExitReject;
  }
  VerifyReport report = verify(vk, wk, pub);
  std::cout << report.summary() << "\n" << (report.accepted() ? "accept" : "reject") << "\n";
  return report.accepted() ? kExitOk : kExitReject;
}

int cmd_interactive(const GlobalOptions& g, const std::string& problem_path, uint32_t rounds,
                    bool cheat, uint32_t repeat, const std::string& transcript_path) {
  interactive::LoadedProblem loaded = interactive::problem_from_json(read_json(problem_path));
  interactive::ProverStrategy prover = interactive::CheatingProver{};
  if (!cheat) {
    if (!loaded.solution)
      throw Error(Errc::kInvalidArgument, "problem file has no solution; pass --cheat to run a forging prover");
    if (!interactive::is_solution(loaded.problem, *loaded.solution))
      throw Error(Errc::kInvalidSolution, "the solution in the problem file is not valid");
    prover = interactive::HonestProver{*loaded.solution};
  }
  if (repeat == 0) throw Error(Errc::kInvalidArgument, "--repeat must be at least 1");

  const DeterministicRng base = DeterministicRng::from_hex(g.seed);
  uint64_t accepted = 0;
  for (uint32_t i = 0; i < repeat; ++i) {
    auto session = interactive::run_session(loaded.problem, prover, rounds,
                                            base.derive("session:" + std::to_string(i)));
    if (session.accepted) ++accepted;
    if (i == 0 && !transcript_path.empty())
      write_json(transcript_path, interactive::transcript_to_json(session));
  }
  if (repeat == 1) {
    std::cout << (accepted ? "accept" : "reject") << "\n";
    return accepted ? kExitOk : kExitReject;
  }
  const double rate = static_cast<double>(accepted) / repeat;
  std::cout << "accepted " << accepted << "/" << repeat << " sessions, rate = " << rate << "\n";
  if (cheat) std::cout << "cheating bound 2^-" << rounds << " = " << std::ldexp(1.0, -static_cast<int>(rounds)) << "\n";
  return kExitOk;
}

int cmd_selftest(const GlobalOptions& g) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };
  const Field field = resolve_field(g);
  Program prog = parse_program(corpus::kColoring5);
  Circuit circuit = flatten(prog, field);
  Qap qap = build_qap(circuit);
  std::cout << "coloring5: N = " << circuit.num_gates() << " gates, " << qap.num_constraints
            << " constraints, " << qap.symbols.size() << " symbols\n";

  auto colors = [&](std::initializer_list<uint64_t> cs) {
    Valuation in;
    int i = 1;
    for (uint64_t c : cs) in["c" + std::to_string(i++)] = field.element(c);
    return in;
  };

  Group group(field, Backend::kTransparent);
  KeyPair keys = setup(qap, group, {}, DeterministicRng::from_hex(g.seed).derive("setup"));
  WitnessKey wk = prove(keys.evaluation, qap, solve(circuit, colors({3, 1, 2, 1, 2})));
  VerifyReport vr = verify(keys.verification, wk);
  report(vr.accepted(), "pipeline accepts (3,1,2,1,2): " + vr.summary());

  bool refused = false;
  try {
    prove(keys.evaluation, qap, solve(circuit, colors({1, 1, 2, 1, 2})));
  } catch (const Error& e) {
    refused = e.code() == Errc::kInvalidWitness;
  }
  report(refused, "prover refuses (1,1,2,1,2)");

  size_t mismatches = 0, valid = 0;
  for (uint64_t code = 0; code < 243; ++code) {
    Valuation in;
    uint64_t rest = code;
    for (int i = 1; i <= 5; ++i, rest /= 3) in["c" + std::to_string(i)] = field.element(1 + rest % 3);
    Assignment t = solve(circuit, in);
    bool ok = check_solution(circuit, t);
    valid += ok;
    if (ok != assemble(qap, t).divisible) ++mismatches;
  }
  report(mismatches == 0, "QAP divisibility matches check_solution on all 243 colorings (" +
                              std::to_string(valid) + " valid)");

  auto tri = interactive::problem_from_json(nlohmann::json::parse(
      R"({"type":"hamiltonian_cycle","vertices":3,"edges":[[1,2],[2,3],[1,3]],"cycle":[1,2,3]})"));
  auto session = interactive::run_session(tri.problem, interactive::HonestProver{*tri.solution}, 10,
                                          DeterministicRng::from_hex(g.seed));
  report(session.accepted, "interactive honest prover on K3, 10 rounds");

  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snarkpipe: polynomial programs to QAPs and Pinocchio proofs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--field", g.field, "Prime field modulus (decimal); default 2^64-2^32+1");
  app.add_option("--backend", g.backend, "Group backend: modular or transparent")
      ->check(CLI::IsMember({"modular", "transparent"}));
  app.add_option("--seed", g.seed, "Hex seed for every randomized step");

  std::string source, circuit_out = "circuit.json", emit_qap;
  auto* compile = app.add_subcommand("compile", "Compile a .zkp program to circuit JSON");
  compile->add_option("source", source, "Program source")->required();
  compile->add_option("-o,--output", circuit_out, "Circuit JSON output");
  compile->add_option("--emit-qap", emit_qap, "Also write the QAP as JSON");

  std::string circuit_path = "circuit.json", public_csv, out_dir = ".";
  auto* setup_cmd = app.add_subcommand("setup", "Generate evaluation and verification keys");
  setup_cmd->add_option("--circuit", circuit_path, "Circuit JSON");
  setup_cmd->add_option("--public", public_csv, "Comma-separated public symbols (one is always public)");
  setup_cmd->add_option("--out-dir", out_dir, "Directory for the key files");

  std::string ek_path = "evaluation_key.json", inputs_path, wk_out = "witness_key.json";
  auto* prove_cmd = app.add_subcommand("prove", "Compute the witness key for an input assignment");
  prove_cmd->add_option("--circuit", circuit_path, "Circuit JSON");
  prove_cmd->add_option("--ek", ek_path, "Evaluation key JSON");
  prove_cmd->add_option("--inputs", inputs_path, "JSON object: input name -> decimal string")->required();
  prove_cmd->add_option("-o,--output", wk_out, "Witness key output");

  std::string vk_path = "verification_key.json", wk_path = "witness_key.json", public_inputs;
  auto* verify_cmd = app.add_subcommand("verify", "Run the three pairing checks");
  verify_cmd->add_option("--vk", vk_path, "Verification key JSON");
  verify_cmd->add_option("--wk", wk_path, "Witness key JSON");
  verify_cmd->add_option("--public-inputs", public_inputs, "JSON object of public symbol values");

  std::string problem_path, transcript = "transcript.json";
  uint32_t rounds = 10, repeat = 1;
  bool cheat = false;
  auto* inter = app.add_subcommand("interactive", "Run the interactive zero-knowledge protocol");
  inter->add_option("--problem", problem_path, "Problem JSON")->required();
  inter->add_option("--rounds", rounds, "Rounds per session");
  inter->add_flag("--cheat", cheat, "Use a prover without a solution");
  inter->add_option("--repeat", repeat, "Number of independent sessions");
  inter->add_option("--transcript", transcript, "Transcript of the first session");

  auto* selftest = app.add_subcommand("selftest", "Run the bundled coloring5 pipeline and invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compile) return cmd_compile(g, source, circuit_out, emit_qap);
    if (*setup_cmd) return cmd_setup(g, circuit_path, public_csv, out_dir);
    if (*prove_cmd) return cmd_prove(g, circuit_path, ek_path, inputs_path, wk_out);
    if (*verify_cmd) return cmd_verify(g, vk_path, wk_path, public_inputs);
    if (*inter) return cmd_interactive(g, problem_path, rounds, cheat, repeat, transcript);
    if (*selftest) return cmd_selftest(g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
