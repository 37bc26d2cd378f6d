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

#include <cstdint>
#include <string>
#include <string_view>

#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"
#include "snarkpipe/rng.hpp"

namespace snarkpipe {

// Group backends.
//
// kModular is the honest multiplicative group of F_p (order p-1, elements
// stored as residues). It has no bilinear map.
//
// kTransparent stores each element as its discrete log relative to the
// generator, so the group has order p, the group law adds logs and the
// pairing multiplies them. It makes every pairing equation executable at
// desk scale and is NOT cryptographically hiding: anyone reading an element
// reads its exponent.
enum class Backend { kModular, kTransparent };

inline std::string_view backend_name(Backend b) {
  return b == Backend::kModular ? "modular" : "transparent";
}

inline Backend parse_backend(std::string_view name) {
  if (name == "modular") return Backend::kModular;
  if (name == "transparent") return Backend::kTransparent;
  throw Error(Errc::kInvalidArgument, "unknown backend '" + std::string(name) + "'");
}

class GroupElement {
 public:
  GroupElement() = default;

  Backend backend() const { return backend_; }
  uint64_t modulus() const { return modulus_; }
  // Residue (modular) or discrete log (transparent).
  uint64_t repr() const { return repr_; }

  GroupElement operator*(const GroupElement& o) const {
    check_same(o);
    if (backend_ == Backend::kModular) return make(detail::mul_mod(repr_, o.repr_, modulus_));
    return make(detail::add_mod(repr_, o.repr_, modulus_));
  }
  GroupElement& operator*=(const GroupElement& o) { return *this = *this * o; }

  // base^e; exponents act modulo the group order (p-1 or p).
  GroupElement pow(const FieldElement& e) const {
    if (backend_ == Backend::kModular)
      return make(detail::pow_mod(repr_, e.value() % (modulus_ - 1), modulus_));
    return make(detail::mul_mod(repr_, e.value(), modulus_));
  }

  GroupElement inverse() const {
    if (backend_ == Backend::kModular) return make(detail::pow_mod(repr_, modulus_ - 2, modulus_));
    return make(repr_ == 0 ? 0 : modulus_ - repr_);
  }

  bool operator==(const GroupElement&) const = default;

  std::string to_string() const { return std::to_string(repr_); }

 private:
  friend class Group;

  void check_same(const GroupElement& o) const {
    if (backend_ != o.backend_ || modulus_ != o.modulus_)
      throw Error(Errc::kBackendMismatch, "group elements from different groups");
  }
  GroupElement make(uint64_t r) const {
    GroupElement e = *this;
    e.repr_ = r;
    return e;
  }

  Backend backend_ = Backend::kTransparent;
  uint64_t modulus_ = 1;
  uint64_t repr_ = 0;
};

// Pairing codomain. Only the transparent backend produces these; the
// element is the discrete log relative to pairing(g, g).
class TargetElement {
 public:
  TargetElement() = default;
  TargetElement(uint64_t log, uint64_t modulus) : log_(log % modulus), modulus_(modulus) {}

  uint64_t log() const { return log_; }

  TargetElement operator*(const TargetElement& o) const {
    return TargetElement(detail::add_mod(log_, o.log_, modulus_), modulus_);
  }
  TargetElement pow(const FieldElement& e) const {
    return TargetElement(detail::mul_mod(log_, e.value(), modulus_), modulus_);
  }
  bool is_identity() const { return log_ == 0; }
  bool operator==(const TargetElement&) const = default;

 private:
  uint64_t log_ = 0;
  uint64_t modulus_ = 1;
};

inline TargetElement pairing(const GroupElement& a, const GroupElement& b) {
  if (a.backend() != Backend::kTransparent || b.backend() != Backend::kTransparent)
    throw Error(Errc::kPairingUnsupported, "the modular backend has no bilinear map");
  if (a.modulus() != b.modulus())
    throw Error(Errc::kBackendMismatch, "pairing arguments from different groups");
  return TargetElement(detail::mul_mod(a.repr(), b.repr(), a.modulus()), a.modulus());
}

// Group context: field, backend and generator g.
class Group {
 public:
  Group(const Field& field, Backend backend) : field_(field), backend_(backend) {}

  const Field& field() const { return field_; }
  Backend backend() const { return backend_; }
  bool supports_pairing() const { return backend_ == Backend::kTransparent; }

  GroupElement identity() const { return make(backend_ == Backend::kModular ? 1 : 0); }
  GroupElement generator() const {
    return make(backend_ == Backend::kModular ? field_.generator().value() : 1);
  }
  GroupElement exp(const FieldElement& e) const { return generator().pow(e); }

  GroupElement random_element(DeterministicRng& rng) const {
    if (backend_ == Backend::kModular) return make(1 + rng.below(field_.modulus() - 1));
    return make(rng.below(field_.modulus()));
  }

  // Validates a serialized representation.
  GroupElement from_repr(uint64_t r) const {
    const uint64_t p = field_.modulus();
    if (backend_ == Backend::kModular ? (r == 0 || r >= p) : r >= p)
      throw Error(Errc::kMalformedKey, "group element " + std::to_string(r) + " out of range");
    return make(r);
  }

  // Test introspection for the transparent backend.
  FieldElement discrete_log(const GroupElement& e) const {
    if (backend_ != Backend::kTransparent)
      throw Error(Errc::kInvalidArgument, "discrete logs are only exposed by the transparent backend");
    return field_.element(e.repr());
  }

  TargetElement target_generator() const { return pairing(generator(), generator()); }

  bool operator==(const Group& o) const { return field_ == o.field_ && backend_ == o.backend_; }

 private:
  GroupElement make(uint64_t r) const {
    GroupElement e;
    e.backend_ = backend_;
    e.modulus_ = field_.modulus();
    e.repr_ = r;
    return e;
  }

  Field field_;
  Backend backend_;
};

}  // namespace snarkpipe
