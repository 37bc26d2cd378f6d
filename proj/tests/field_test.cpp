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

using Poly = Polynomial;

// Independent modular exponentiation over unsigned __int128, used only as
// an oracle.
uint64_t oracle_pow(uint64_t b, uint64_t e, uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<uint64_t>(r);
}

Poly poly(const Field& f, std::initializer_list<uint64_t> cs) {
  std::vector<FieldElement> out;
  for (uint64_t c : cs) out.push_back(f.element(c));
  return Poly(f, out);
}

Poly random_poly(const Field& f, int degree, DeterministicRng& rng) {
  std::vector<FieldElement> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(rng.field_element(f));
  return Poly(f, cs);
}

TEST(FieldArith, SmallPrimeExamples) {
  Field f = Field::with_modulus(17);
  EXPECT_EQ(field_arith(f.element(5), f.element(7), FieldOp::kMul), f.element(1));
  EXPECT_EQ(field_arith(f.element(16), f.element(1), FieldOp::kAdd), f.zero());
  EXPECT_EQ(field_arith(f.element(3), f.element(5), FieldOp::kSub), f.element(15));

  uint64_t brute = 0;
  for (uint64_t x = 1; x < 17; ++x)
    if (5 * x % 17 == 1) brute = x;
  EXPECT_EQ(brute, 7u);
  EXPECT_EQ(field_arith(f.one(), f.element(5), FieldOp::kDiv), f.element(brute));
}

TEST(FieldArith, DivisionByZeroThrows) {
  Field f = Field::with_modulus(17);
  try {
    field_arith(f.one(), f.zero(), FieldOp::kDiv);
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDivisionByZero);
  }
  EXPECT_THROW(f.zero().inverse(), Error);
}

TEST(FieldArith, InverseMatchesBruteForceOverSmallField) {
  Field f = Field::with_modulus(101);
  for (uint64_t a = 1; a < 101; ++a) {
    uint64_t expect = 0;
    for (uint64_t x = 1; x < 101; ++x)
      if (a * x % 101 == 1) expect = x;
    EXPECT_EQ(f.element(a).inverse().value(), expect) << a;
  }
}

TEST(FieldArith, FermatInverseOnDefaultField) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("fe");
  for (int i = 0; i < 1000; ++i) {
    FieldElement a = rng.nonzero_field_element(f);
    ASSERT_EQ((f.one() / a) * a, f.one());
  }
}

TEST(FieldArith, MultiplicationAgreesWithWideIntegers) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("aa");
  for (int i = 0; i < 2000; ++i) {
    FieldElement a = rng.field_element(f), b = rng.field_element(f);
    unsigned __int128 prod = static_cast<unsigned __int128>(a.value()) * b.value();
    ASSERT_EQ((a * b).value(), static_cast<uint64_t>(prod % f.modulus()));
    unsigned __int128 sum = static_cast<unsigned __int128>(a.value()) + b.value();
    ASSERT_EQ((a + b).value(), static_cast<uint64_t>(sum % f.modulus()));
    ASSERT_EQ((a - b) + b, a);
  }
}

TEST(FieldContext, DefaultGeneratorGeneratesTheGroup) {
  Field f;
  const uint64_t p = f.modulus();
  EXPECT_EQ(p, 18446744069414584321ull);
  EXPECT_EQ(f.generator().value(), 7u);
  // p - 1 = 2^32 * 3 * 5 * 17 * 257 * 65537
  const uint64_t factors[] = {2, 3, 5, 17, 257, 65537};
  unsigned __int128 product = uint64_t{1} << 32;
  for (uint64_t q : factors) {
    if (q != 2) product *= q;
    EXPECT_NE(oracle_pow(7, (p - 1) / q, p), 1u) << q;
  }
  EXPECT_EQ(static_cast<uint64_t>(product), p - 1);
}

TEST(FieldContext, RejectsBadParameters) {
  EXPECT_THROW(Field(15, 2), Error);
  EXPECT_THROW(Field(17, 2), Error);  // 2 has order 8 mod 17
  EXPECT_NO_THROW(Field(17, 3));
  EXPECT_EQ(Field::with_modulus(17).generator().value(), 3u);
  EXPECT_EQ(Field::with_modulus(101).generator().value(), 2u);
  EXPECT_THROW(Field::parse("12x"), Error);
  EXPECT_EQ(Field::parse("101").modulus(), 101u);
}

TEST(FieldContext, DecimalParsing) {
  Field f = Field::with_modulus(101);
  bool overflowed = false;
  EXPECT_EQ(f.reduce_decimal("205", &overflowed), f.element(3));
  EXPECT_TRUE(overflowed);
  EXPECT_EQ(f.reduce_decimal("100", &overflowed), f.element(100));
  EXPECT_FALSE(overflowed);
  EXPECT_EQ(f.parse_element("42"), f.element(42));
  EXPECT_THROW(f.parse_element("101"), Error);
  EXPECT_THROW(f.parse_element("-1"), Error);
  EXPECT_EQ(f.from_signed(-4), f.element(97));
}

TEST(Polynomial, CanonicalForm) {
  Field f = Field::with_modulus(17);
  Poly p = poly(f, {1, 2, 0, 0});
  EXPECT_EQ(p.coefficients().size(), 2u);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Poly(f, {f.zero(), f.zero()}).is_zero());
  EXPECT_EQ(Poly(f).degree(), -1);
  EXPECT_EQ(poly(f, {3, 4}) - poly(f, {3, 4}), Poly(f));
}

TEST(Polynomial, InterpolationExamples) {
  Field f = Field::with_modulus(17);
  std::vector<Point> constant = {{f.element(1), f.element(5)}, {f.element(2), f.element(5)}};
  EXPECT_EQ(poly_interpolate(f, constant), poly(f, {5}));

  std::vector<Point> line = {{f.element(1), f.element(2)}, {f.element(2), f.element(4)},
                             {f.element(3), f.element(6)}};
  Poly two_x = poly_interpolate(f, line);
  EXPECT_EQ(two_x, poly(f, {0, 2}));
  for (const auto& [x, y] : line) EXPECT_EQ(two_x(x), y);

  std::vector<Point> selector = {{f.element(1), f.element(1)}, {f.element(2), f.element(0)}};
  Poly k = poly_interpolate(f, selector);
  EXPECT_EQ(k(f.element(1)), f.one());
  EXPECT_EQ(k(f.element(2)), f.zero());
  EXPECT_EQ(k, poly(f, {2, 16}));  // 2 - x
}

TEST(Polynomial, InterpolationRejectsDuplicateNodes) {
  Field f = Field::with_modulus(17);
  std::vector<Point> pts = {{f.element(3), f.element(1)}, {f.element(3), f.element(2)}};
  try {
    poly_interpolate(f, pts);
    FAIL() << "expected DuplicateNode";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDuplicateNode);
  }
}

TEST(Polynomial, InterpolationRoundTripRandom) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("1e");
  for (size_t n : {1u, 2u, 7u, 33u, 128u}) {
    std::set<uint64_t> xs;
    std::vector<Point> pts;
    while (pts.size() < n) {
      FieldElement x = rng.field_element(f);
      if (!xs.insert(x.value()).second) continue;
      pts.emplace_back(x, rng.field_element(f));
    }
    Poly p = poly_interpolate(f, pts);
    EXPECT_LT(p.degree(), static_cast<int>(n));
    for (const auto& [x, y] : pts) ASSERT_EQ(p(x), y);
  }
}

TEST(Polynomial, DivModExamples) {
  Field f = Field::with_modulus(17);
  auto a = poly_divmod(poly(f, {16, 0, 1}), poly(f, {16, 1}));
  EXPECT_EQ(a.quotient, poly(f, {1, 1}));
  EXPECT_TRUE(a.remainder.is_zero());

  auto b = poly_divmod(poly(f, {1, 0, 1}), poly(f, {16, 1}));
  EXPECT_EQ(b.quotient, poly(f, {1, 1}));
  EXPECT_EQ(b.remainder, poly(f, {2}));
  EXPECT_EQ(b.quotient * poly(f, {16, 1}) + b.remainder, poly(f, {1, 0, 1}));

  auto c = poly_divmod(Poly(f), poly(f, {14, 1}));
  EXPECT_TRUE(c.quotient.is_zero());
  EXPECT_TRUE(c.remainder.is_zero());

  try {
    poly_divmod(poly(f, {1}), Poly(f));
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDivisionByZero);
  }
}

TEST(Polynomial, DivModReconstructsRandom) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("d1");
  for (int trial = 0; trial < 200; ++trial) {
    Poly d = random_poly(f, 1 + static_cast<int>(rng.below(16)), rng);
    if (d.is_zero()) continue;
    Poly p = random_poly(f, static_cast<int>(rng.below(33)), rng);
    Poly q = random_poly(f, static_cast<int>(rng.below(33)), rng);
    Poly num = p * d + q;
    auto r = poly_divmod(num, d);
    ASSERT_EQ(r.quotient * d + r.remainder, num);
    ASSERT_LT(r.remainder.degree(), d.degree());
    // Exact multiples leave no remainder.
    auto exact = poly_divmod(p * d, d);
    ASSERT_TRUE(exact.remainder.is_zero());
    ASSERT_EQ(exact.quotient, p);
  }
}

TEST(Polynomial, DegreeOfProduct) {
  Field f;
  DeterministicRng rng = DeterministicRng::from_hex("de");
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(f, static_cast<int>(rng.below(20)), rng);
    Poly q = random_poly(f, static_cast<int>(rng.below(20)), rng);
    if (p.is_zero() || q.is_zero()) continue;
    ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
    FieldElement x = rng.field_element(f);
    ASSERT_EQ((p * q)(x), p(x) * q(x));
    ASSERT_EQ((p + q)(x), p(x) + q(x));
  }
}

TEST(Group, ModularExponentExamples) {
  Group g(Field(17, 3), Backend::kModular);
  EXPECT_EQ(g.exp(g.field().element(4)).repr(), 13u);
  EXPECT_EQ(g.exp(g.field().zero()), g.identity());
  EXPECT_EQ(g.exp(g.field().element(2)).pow(g.field().element(3)), g.exp(g.field().element(6)));
  EXPECT_FALSE(g.supports_pairing());
  try {
    pairing(g.generator(), g.generator());
    FAIL() << "expected PairingUnsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPairingUnsupported);
  }
}

TEST(Group, ModularGroupLawAgreesWithResidues) {
  Field f = Field::with_modulus(101);
  Group g(f, Backend::kModular);
  for (uint64_t a = 0; a < 100; ++a) {
    GroupElement e = g.exp(f.element(a));
    ASSERT_EQ(e.repr(), oracle_pow(f.generator().value(), a, 101));
    ASSERT_EQ(e * e.inverse(), g.identity());
  }
}

TEST(Group, TransparentPairingExamples) {
  Field f;
  Group g(f, Backend::kTransparent);
  const TargetElement t = g.target_generator();
  EXPECT_FALSE(t.is_identity());
  auto gx = [&](uint64_t x) { return g.exp(f.element(x)); };
  EXPECT_EQ(pairing(gx(2), gx(3)), t.pow(f.element(6)));
  EXPECT_TRUE(pairing(g.identity(), gx(5)).is_identity());
  EXPECT_EQ(pairing(gx(2), gx(3)) * pairing(gx(2), gx(4)), pairing(gx(2), gx(7)));
}

TEST(Group, PairingBilinearityRandom) {
  Field f;
  Group g(f, Backend::kTransparent);
  DeterministicRng rng = DeterministicRng::from_hex("b1");
  const TargetElement t = g.target_generator();
  for (int i = 0; i < 1000; ++i) {
    FieldElement a = rng.field_element(f), b = rng.field_element(f);
    ASSERT_EQ(pairing(g.exp(a), g.exp(b)), t.pow(a * b));
    ASSERT_EQ(pairing(g.exp(a), g.exp(b)), pairing(g.exp(b), g.exp(a)));
  }
}

TEST(Group, MixedGroupsRejected) {
  Group a(Field::with_modulus(101), Backend::kTransparent);
  Group b(Field::with_modulus(103), Backend::kTransparent);
  EXPECT_THROW(pairing(a.generator(), b.generator()), Error);
  EXPECT_THROW(a.generator() * b.generator(), Error);
  EXPECT_THROW(a.from_repr(101), Error);
}

TEST(Rng, DeterministicAndLabelSeparated) {
  DeterministicRng a = DeterministicRng::from_hex("01"), b = DeterministicRng::from_hex("0x01");
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
  DeterministicRng c = DeterministicRng::from_hex("01").derive("x");
  DeterministicRng d = DeterministicRng::from_hex("01").derive("y");
  DeterministicRng e = DeterministicRng::from_hex("01");
  uint64_t cx = c(), dx = d(), ex = e();
  EXPECT_NE(cx, dx);
  EXPECT_NE(cx, ex);
  EXPECT_THROW(DeterministicRng::from_hex("zz"), Error);
}

TEST(Rng, BelowIsRoughlyUniform) {
  DeterministicRng rng = DeterministicRng::from_hex("77");
  std::array<int, 6> counts{};
  const int n = 60000;
  for (int i = 0; i < n; ++i) counts[rng.below(6)]++;
  for (int c : counts) EXPECT_NEAR(c, n / 6, 400);
  auto perm = rng.permutation(10);
  std::set<uint32_t> seen(perm.begin(), perm.end());
  EXPECT_EQ(seen.size(), 10u);
  EXPECT_EQ(*seen.rbegin(), 9u);
}

TEST(Rng, Sha256KnownVector) {
  const std::string abc = "abc";
  Digest d = sha256(std::span(reinterpret_cast<const uint8_t*>(abc.data()), abc.size()));
  EXPECT_EQ(to_hex(d), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace snarkpipe
