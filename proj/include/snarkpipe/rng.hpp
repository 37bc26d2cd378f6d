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

#include <sodium.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"

namespace snarkpipe {

using Digest = std::array<uint8_t, 32>;

namespace detail {

inline void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) throw std::runtime_error("libsodium failed to initialize");
}

}  // namespace detail

inline Digest sha256(std::span<const uint8_t> data) {
  detail::ensure_sodium();
  Digest out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

inline std::string to_hex(std::span<const uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

// Accepts an optional 0x prefix; an odd digit count is left-padded.
inline std::vector<uint8_t> from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::string digits(text);
  if (digits.size() % 2 == 1) digits.insert(digits.begin(), '0');
  auto nibble = [&](char c) -> uint8_t {
    if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
    throw Error(Errc::kInvalidArgument, "not a hex string: " + std::string(text));
  };
  std::vector<uint8_t> out(digits.size() / 2);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint8_t>(nibble(digits[2 * i]) << 4 | nibble(digits[2 * i + 1]));
  return out;
}

// ChaCha20 keystream generator keyed by SHA-256 of the seed bytes. Every
// draw helper below is defined on raw 64-bit words, so streams are
// reproducible across platforms and standard libraries.
class DeterministicRng {
 public:
  using result_type = uint64_t;

  explicit DeterministicRng(std::span<const uint8_t> seed) : key_(sha256(seed)) {}

  static DeterministicRng from_hex(std::string_view hex) {
    auto bytes = snarkpipe::from_hex(hex);
    return DeterministicRng(bytes);
  }

  // Independent child stream; same parent key and label give the same child.
  DeterministicRng derive(std::string_view label) const {
    std::vector<uint8_t> material(key_.begin(), key_.end());
    material.insert(material.end(), label.begin(), label.end());
    return DeterministicRng(material);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

  result_type operator()() {
    uint8_t bytes[8];
    fill(bytes);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | bytes[i];
    return v;
  }

  void fill(std::span<uint8_t> out) {
    for (uint8_t& b : out) {
      if (pos_ == buffer_.size()) refill();
      b = buffer_[pos_++];
    }
  }

  // Uniform in [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw Error(Errc::kInvalidArgument, "empty range");
    const uint64_t limit = max() - max() % bound;
    for (;;) {
      uint64_t v = (*this)();
      if (v < limit) return v % bound;
    }
  }

  bool coin() { return ((*this)() & 1) != 0; }

  FieldElement field_element(const Field& field) { return field.element(below(field.modulus())); }
  FieldElement nonzero_field_element(const Field& field) {
    return field.element(1 + below(field.modulus() - 1));
  }

  // Fisher-Yates over 0..n-1.
  std::vector<uint32_t> permutation(uint32_t n) {
    std::vector<uint32_t> perm(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
    return perm;
  }

 private:
  void refill() {
    detail::ensure_sodium();
    static const std::array<uint8_t, crypto_stream_chacha20_NONCEBYTES> kNonce{};
    std::array<uint8_t, 256> zeros{};
    crypto_stream_chacha20_xor_ic(buffer_.data(), zeros.data(), zeros.size(), kNonce.data(),
                                  block_, key_.data());
    block_ += zeros.size() / 64;
    pos_ = 0;
  }

  Digest key_;
  uint64_t block_ = 0;
  std::array<uint8_t, 256> buffer_{};
  size_t pos_ = 256;
};

}  // namespace snarkpipe
