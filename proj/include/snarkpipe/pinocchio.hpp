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

// Pinocchio setup / prove / verify.
//
// Setup samples r_v, r_w, s, alpha_v, alpha_w, alpha_k, beta, gamma, sets
// r_k = r_v r_w and g_x = g^(r_x), and publishes every QAP polynomial
// evaluated at s in the exponent. The prover combines evaluation-key
// entries with its assignment; the verifier runs three pairing checks:
//
//   divisibility  E(V, W) = E(g_k^T(s), g^H(s)) E(K, g)
//   span          E(g_v^(a_v v(s)), g) = E(g_v^v(s), g^a_v)   (and w, k)
//   consistency   E(g^Z, g^gamma) = E(g_v^v(s) g_w^w(s) g_k^k(s), g^(beta gamma))
//
// where V, W, K fold the public symbols' verification-key entries into the
// prover's private terms.
//
// The witness key is binding but carries no zero-knowledge masking terms.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "snarkpipe/error.hpp"
#include "snarkpipe/group.hpp"
#include "snarkpipe/qap.hpp"
#include "snarkpipe/rng.hpp"

namespace snarkpipe {

struct EvaluationKey {
  Group group{Field(), Backend::kTransparent};
  std::vector<std::string> symbols;
  std::vector<std::string> public_symbols;
  std::vector<GroupElement> powers_of_s;  // g^(s^d), d = 0..N
  std::vector<GroupElement> v, w, k;      // g_v^(v_i(s)) ...
  std::vector<GroupElement> v_alpha, w_alpha, k_alpha;
  std::vector<GroupElement> beta;  // g_v^(beta v_i(s)) g_w^(beta w_i(s)) g_k^(beta k_i(s))
};

struct VerificationKey {
  Group group{Field(), Backend::kTransparent};
  std::vector<std::string> public_symbols;
  GroupElement g, alpha_v, alpha_w, alpha_k, gamma, beta_gamma;
  GroupElement target_at_s;  // g_k^(T(s))
  std::vector<GroupElement> public_v, public_w, public_k;  // parallel to public_symbols
};

struct WitnessKey {
  Group group{Field(), Backend::kTransparent};
  GroupElement v, w, k, h;
  GroupElement v_alpha, w_alpha, k_alpha;
  GroupElement z;

  static constexpr size_t kElements = 8;
  GroupElement& element(size_t i) {
    GroupElement* all[kElements] = {&v, &w, &k, &h, &v_alpha, &w_alpha, &k_alpha, &z};
    return *all[i];
  }
};

struct VerifyReport {
  bool divisibility = false;
  bool span = false;
  bool consistency = false;
  bool accepted() const { return divisibility && span && consistency; }
  std::string summary() const {
    auto word = [](bool b) { return b ? "pass" : "fail"; };
    return std::string("checks: div=") + word(divisibility) + " span=" + word(span) +
           " coeff=" + word(consistency);
  }
};

namespace detail {

// Setup randomness. Lives only inside setup(); tests rebuild it from the
// seed to audit exponents on the transparent backend.
struct Toxic {
  FieldElement r_v, r_w, r_k, s, alpha_v, alpha_w, alpha_k, beta, gamma;
};

inline Toxic sample_toxic(const Field& f, size_t num_constraints, DeterministicRng rng) {
  Toxic t;
  t.r_v = rng.nonzero_field_element(f);
  t.r_w = rng.nonzero_field_element(f);
  do {
    t.s = rng.nonzero_field_element(f);
  } while (t.s.value() <= num_constraints);  // s outside 1..N
  t.alpha_v = rng.nonzero_field_element(f);
  t.alpha_w = rng.nonzero_field_element(f);
  t.alpha_k = rng.nonzero_field_element(f);
  t.beta = rng.nonzero_field_element(f);
  t.gamma = rng.nonzero_field_element(f);
  t.r_k = t.r_v * t.r_w;
  return t;
}

inline std::vector<size_t> public_indices(const Qap& q, const std::vector<std::string>& names) {
  std::vector<size_t> out;
  for (const auto& n : names) {
    auto idx = q.symbol_index(n);
    if (!idx) throw Error(Errc::kInvalidArgument, "'" + n + "' is not a QAP symbol");
    out.push_back(*idx);
  }
  return out;
}

// One is always public and always first.
inline std::vector<std::string> normalize_public(const std::vector<std::string>& requested) {
  std::vector<std::string> out{"one"};
  for (const auto& n : requested)
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

}  // namespace detail

struct KeyPair {
  EvaluationKey evaluation;
  VerificationKey verification;
};

inline KeyPair setup(const Qap& q, const Group& group, const std::vector<std::string>& public_symbols,
                     const DeterministicRng& rng) {
  if (!group.supports_pairing())
    throw Error(Errc::kPairingUnsupported, "setup needs a pairing-capable backend");
  if (!(group.field() == q.field)) throw Error(Errc::kInvalidArgument, "group and QAP fields differ");
  if (q.num_constraints == 0) throw Error(Errc::kEmptyQap, "QAP has no constraints");

  const Field& f = q.field;
  const detail::Toxic tx = detail::sample_toxic(f, q.num_constraints, rng);
  const GroupElement g = group.generator();
  const GroupElement g_v = g.pow(tx.r_v), g_w = g.pow(tx.r_w), g_k = g.pow(tx.r_k);

  KeyPair keys;
  EvaluationKey& ek = keys.evaluation;
  ek.group = group;
  ek.public_symbols = detail::normalize_public(public_symbols);
  const auto pub = detail::public_indices(q, ek.public_symbols);

  FieldElement s_pow = f.one();
  for (size_t d = 0; d <= q.num_constraints; ++d) {
    ek.powers_of_s.push_back(g.pow(s_pow));
    s_pow *= tx.s;
  }
  for (size_t i = 0; i < q.symbols.size(); ++i) {
    ek.symbols.push_back(q.symbols[i].name);
    const FieldElement vs = q.v[i](tx.s), ws = q.w[i](tx.s), ks = q.k[i](tx.s);
    ek.v.push_back(g_v.pow(vs));
    ek.w.push_back(g_w.pow(ws));
    ek.k.push_back(g_k.pow(ks));
    ek.v_alpha.push_back(g_v.pow(tx.alpha_v * vs));
    ek.w_alpha.push_back(g_w.pow(tx.alpha_w * ws));
    ek.k_alpha.push_back(g_k.pow(tx.alpha_k * ks));
    ek.beta.push_back(g_v.pow(tx.beta * vs) * g_w.pow(tx.beta * ws) * g_k.pow(tx.beta * ks));
  }

  VerificationKey& vk = keys.verification;
  vk.group = group;
  vk.public_symbols = ek.public_symbols;
  vk.g = g;
  vk.alpha_v = g.pow(tx.alpha_v);
  vk.alpha_w = g.pow(tx.alpha_w);
  vk.alpha_k = g.pow(tx.alpha_k);
  vk.gamma = g.pow(tx.gamma);
  vk.beta_gamma = g.pow(tx.beta * tx.gamma);
  vk.target_at_s = g_k.pow(q.target(tx.s));
  for (size_t i : pub) {
    vk.public_v.push_back(ek.v[i]);
    vk.public_w.push_back(ek.w[i]);
    vk.public_k.push_back(ek.k[i]);
  }
  return keys;
}

// Uses evaluation-key material only: s and the other setup secrets are not
// reachable from here.
inline WitnessKey prove(const EvaluationKey& ek, const Qap& q, const Assignment& t) {
  const size_t n = q.symbols.size();
  if (ek.symbols.size() != n || ek.v.size() != n || ek.w.size() != n || ek.k.size() != n ||
      ek.v_alpha.size() != n || ek.w_alpha.size() != n || ek.k_alpha.size() != n ||
      ek.beta.size() != n || ek.powers_of_s.size() != q.num_constraints + 1)
    throw Error(Errc::kMalformedKey, "evaluation key does not match the QAP shape");
  for (size_t i = 0; i < n; ++i)
    if (ek.symbols[i] != q.symbols[i].name)
      throw Error(Errc::kMalformedKey, "evaluation key symbol order differs from the QAP");

  AssembledInstance inst = assemble(q, t);
  if (!inst.divisible)
    throw Error(Errc::kInvalidWitness, "assignment does not satisfy the circuit; T does not divide F");

  const Group& grp = ek.group;
  std::set<size_t> pub;
  for (size_t i : detail::public_indices(q, ek.public_symbols)) pub.insert(i);
  const std::vector<FieldElement> ts = symbol_values(q, t);

  WitnessKey wk;
  wk.group = grp;
  wk.v = wk.w = wk.k = wk.v_alpha = wk.w_alpha = wk.k_alpha = wk.z = wk.h = grp.identity();
  for (size_t i = 0; i < n; ++i) {
    if (pub.count(i)) continue;
    wk.v *= ek.v[i].pow(ts[i]);
    wk.w *= ek.w[i].pow(ts[i]);
    wk.k *= ek.k[i].pow(ts[i]);
    wk.v_alpha *= ek.v_alpha[i].pow(ts[i]);
    wk.w_alpha *= ek.w_alpha[i].pow(ts[i]);
    wk.k_alpha *= ek.k_alpha[i].pow(ts[i]);
    wk.z *= ek.beta[i].pow(ts[i]);
  }
  const auto& hc = inst.h->coefficients();
  for (size_t d = 0; d < hc.size(); ++d) wk.h *= ek.powers_of_s[d].pow(hc[d]);
  return wk;
}

// public_inputs maps public symbol names (other than "one", which is
// always 1) to their values.
inline VerifyReport verify(const VerificationKey& vk, const WitnessKey& wk,
                           const std::map<std::string, FieldElement>& public_inputs = {}) {
  if (!(vk.group == wk.group))
    throw Error(Errc::kBackendMismatch, "verification and witness keys use different groups");
  const size_t np = vk.public_symbols.size();
  if (vk.public_v.size() != np || vk.public_w.size() != np || vk.public_k.size() != np)
    throw Error(Errc::kMalformedKey, "verification key public lists have inconsistent sizes");
  for (const auto& [name, _] : public_inputs) {
    if (name == "one" ||
        std::find(vk.public_symbols.begin(), vk.public_symbols.end(), name) == vk.public_symbols.end())
      throw Error(Errc::kUnexpectedInput, "'" + name + "' is not a public symbol");
  }

  const Field& f = vk.group.field();
  GroupElement V = wk.v, W = wk.w, K = wk.k;
  for (size_t i = 0; i < np; ++i) {
    FieldElement ti = f.one();
    if (vk.public_symbols[i] != "one") {
      auto it = public_inputs.find(vk.public_symbols[i]);
      if (it == public_inputs.end())
        throw Error(Errc::kMissingInput, "no value for public symbol '" + vk.public_symbols[i] + "'");
      ti = it->second;
    }
    V *= vk.public_v[i].pow(ti);
    W *= vk.public_w[i].pow(ti);
    K *= vk.public_k[i].pow(ti);
  }

  VerifyReport r;
  r.divisibility = pairing(V, W) == pairing(vk.target_at_s, wk.h) * pairing(K, vk.g);
  r.span = pairing(wk.v_alpha, vk.g) == pairing(wk.v, vk.alpha_v) &&
           pairing(wk.w_alpha, vk.g) == pairing(wk.w, vk.alpha_w) &&
           pairing(wk.k_alpha, vk.g) == pairing(wk.k, vk.alpha_k);
  r.consistency = pairing(wk.z, vk.gamma) == pairing(wk.v * wk.w * wk.k, vk.beta_gamma);
  return r;
}

// ---------------------------------------------------------------------------
// JSON. Group elements are decimal strings: the discrete log on the
// transparent backend, the residue on the modular one. Every file carries a
// "backend" and "field" header and loading checks them.

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json elements_json(const std::vector<GroupElement>& es) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : es) arr.push_back(e.to_string());
  return arr;
}

inline ordered_json header(const Group& g, std::string_view kind) {
  ordered_json j;
  j["kind"] = kind;
  j["backend"] = backend_name(g.backend());
  j["field"] = std::to_string(g.field().modulus());
  return j;
}

inline Group read_header(const nlohmann::json& j, std::string_view kind, Backend expected) {
  if (j.at("kind").get<std::string>() != kind)
    throw Error(Errc::kMalformedKey, "expected a " + std::string(kind));
  Backend b = parse_backend(j.at("backend").get<std::string>());
  if (b != expected)
    throw Error(Errc::kBackendMismatch, std::string(kind) + " was made with the " +
                                            std::string(backend_name(b)) + " backend, expected " +
                                            std::string(backend_name(expected)));
  return Group(Field::parse(j.at("field").get<std::string>()), b);
}

inline GroupElement read_element(const Group& g, const nlohmann::json& j) {
  const std::string& s = j.get_ref<const std::string&>();
  try {
    return g.from_repr(g.field().parse_element(s).value());
  } catch (const Error& e) {
    throw Error(Errc::kMalformedKey, "bad group element '" + s + "'");
  }
}

inline std::vector<GroupElement> read_elements(const Group& g, const nlohmann::json& j) {
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(read_element(g, e));
  return out;
}

template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kMalformedKey, e.what());
  }
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const EvaluationKey& ek) {
  auto j = detail::header(ek.group, "evaluation_key");
  j["symbols"] = ek.symbols;
  j["public"] = ek.public_symbols;
  j["powers_of_s"] = detail::elements_json(ek.powers_of_s);
  j["v"] = detail::elements_json(ek.v);
  j["w"] = detail::elements_json(ek.w);
  j["k"] = detail::elements_json(ek.k);
  j["v_alpha"] = detail::elements_json(ek.v_alpha);
  j["w_alpha"] = detail::elements_json(ek.w_alpha);
  j["k_alpha"] = detail::elements_json(ek.k_alpha);
  j["beta"] = detail::elements_json(ek.beta);
  return j;
}

inline nlohmann::ordered_json to_json(const VerificationKey& vk) {
  auto j = detail::header(vk.group, "verification_key");
  j["g"] = vk.g.to_string();
  j["alpha_v"] = vk.alpha_v.to_string();
  j["alpha_w"] = vk.alpha_w.to_string();
  j["alpha_k"] = vk.alpha_k.to_string();
  j["gamma"] = vk.gamma.to_string();
  j["beta_gamma"] = vk.beta_gamma.to_string();
  j["target_at_s"] = vk.target_at_s.to_string();
  j["public"] = vk.public_symbols;
  j["public_v"] = detail::elements_json(vk.public_v);
  j["public_w"] = detail::elements_json(vk.public_w);
  j["public_k"] = detail::elements_json(vk.public_k);
  return j;
}

inline nlohmann::ordered_json to_json(const WitnessKey& wk) {
  auto j = detail::header(wk.group, "witness_key");
  j["v"] = wk.v.to_string();
  j["w"] = wk.w.to_string();
  j["k"] = wk.k.to_string();
  j["h"] = wk.h.to_string();
  j["v_alpha"] = wk.v_alpha.to_string();
  j["w_alpha"] = wk.w_alpha.to_string();
  j["k_alpha"] = wk.k_alpha.to_string();
  j["z"] = wk.z.to_string();
  return j;
}

inline EvaluationKey evaluation_key_from_json(const nlohmann::json& j, Backend expected) {
  return detail::guarded([&] {
    EvaluationKey ek;
    ek.group = detail::read_header(j, "evaluation_key", expected);
    ek.symbols = j.at("symbols").get<std::vector<std::string>>();
    ek.public_symbols = j.at("public").get<std::vector<std::string>>();
    ek.powers_of_s = detail::read_elements(ek.group, j.at("powers_of_s"));
    ek.v = detail::read_elements(ek.group, j.at("v"));
    ek.w = detail::read_elements(ek.group, j.at("w"));
    ek.k = detail::read_elements(ek.group, j.at("k"));
    ek.v_alpha = detail::read_elements(ek.group, j.at("v_alpha"));
    ek.w_alpha = detail::read_elements(ek.group, j.at("w_alpha"));
    ek.k_alpha = detail::read_elements(ek.group, j.at("k_alpha"));
    ek.beta = detail::read_elements(ek.group, j.at("beta"));
    return ek;
  });
}

inline VerificationKey verification_key_from_json(const nlohmann::json& j, Backend expected) {
  return detail::guarded([&] {
    VerificationKey vk;
    vk.group = detail::read_header(j, "verification_key", expected);
    auto one = [&](const char* key) { return detail::read_element(vk.group, j.at(key)); };
    vk.g = one("g");
    vk.alpha_v = one("alpha_v");
    vk.alpha_w = one("alpha_w");
    vk.alpha_k = one("alpha_k");
    vk.gamma = one("gamma");
    vk.beta_gamma = one("beta_gamma");
    vk.target_at_s = one("target_at_s");
    vk.public_symbols = j.at("public").get<std::vector<std::string>>();
    vk.public_v = detail::read_elements(vk.group, j.at("public_v"));
    vk.public_w = detail::read_elements(vk.group, j.at("public_w"));
    vk.public_k = detail::read_elements(vk.group, j.at("public_k"));
    return vk;
  });
}

inline WitnessKey witness_key_from_json(const nlohmann::json& j, Backend expected) {
  return detail::guarded([&] {
    WitnessKey wk;
    wk.group = detail::read_header(j, "witness_key", expected);
    auto one = [&](const char* key) { return detail::read_element(wk.group, j.at(key)); };
    wk.v = one("v");
    wk.w = one("w");
    wk.k = one("k");
    wk.h = one("h");
    wk.v_alpha = one("v_alpha");
    wk.w_alpha = one("w_alpha");
    wk.k_alpha = one("k_alpha");
    wk.z = one("z");
    return wk;
  });
}

}  // namespace snarkpipe
