#include <doctest.h>

#include <set>

#include "kpath/gf2.hpp"
#include "kpath/rng.hpp"
#include "test_support.hpp"

using namespace kpath;
using gf::Elem;

TEST_CASE("addition is xor with identity zero") {
  gf::set_field(gf::config_for_width(64));
  CHECK(gf::add(Elem{0b101}, Elem{0b011}) == Elem{0b110});
  SplitMix64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Elem a = gf::random_elem(rng);
    CHECK(gf::add(a, a) == gf::zero);
    CHECK(gf::add(a, gf::zero) == a);
  }
}

TEST_CASE("multiplication in GF(2^3) matches the long-division oracle") {
  // x^3 + x + 1, a field outside the shipped list; exercised through the
  // width-generic routine.
  const unsigned w = 3;
  const std::uint64_t red = 0b011;
  CHECK(gf::clmul_reduce_portable(0b010, 0b100, w, red) == 0b011);
  CHECK(gf::clmul_reduce_portable(0b110, 0b011, w, red) == 0b001);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      const std::uint64_t expect = testsupport::longdiv_mul(a, b, w, red);
      CHECK(gf::clmul_reduce_portable(a, b, w, red) == expect);
      if (gf::hw_mul_available()) CHECK(gf::clmul_reduce_hw(a, b, w, red) == expect);
    }
  }
}

TEST_CASE("field axioms hold at every shipped width") {
  for (unsigned w : {8u, 16u, 32u, 64u}) {
    CAPTURE(w);
    gf::set_field(gf::config_for_width(w));
    SplitMix64 rng(7 + w);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = gf::random_elem(rng);
      const Elem b = gf::random_elem(rng);
      const Elem c = gf::random_elem(rng);
      REQUIRE(gf::add(gf::add(a, b), c) == gf::add(a, gf::add(b, c)));
      REQUIRE(gf::add(a, b) == gf::add(b, a));
      REQUIRE(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
      REQUIRE(gf::mul(a, b) == gf::mul(b, a));
      REQUIRE(gf::mul(a, gf::add(b, c)) == gf::add(gf::mul(a, b), gf::mul(a, c)));
      REQUIRE(gf::mul(gf::one, a) == a);
      // Frobenius: squaring is additive in characteristic 2.
      const Elem ab = gf::add(a, b);
      REQUIRE(gf::mul(ab, ab) == gf::add(gf::mul(a, a), gf::mul(b, b)));
    }
  }
  gf::set_field(gf::config_for_width(64));
}

TEST_CASE("hardware and portable multiplication agree bit-exactly") {
  REQUIRE(gf::hw_mul_available());
  for (unsigned w : {8u, 16u, 32u, 64u}) {
    CAPTURE(w);
    gf::set_field(gf::config_for_width(w));
    SplitMix64 rng(99);
    for (int i = 0; i < 20000; ++i) {
      const Elem a = gf::random_elem(rng);
      const Elem b = gf::random_elem(rng);
      REQUIRE(gf::mul_portable(a, b) == gf::mul_hw(a, b));
    }
  }
  gf::set_field(gf::config_for_width(64));
}

TEST_CASE("field config validation") {
  CHECK_THROWS_AS(gf::config_for_width(24), std::invalid_argument);
  CHECK_THROWS_AS(gf::set_field(gf::FieldConfig{64, 0x1D}), std::invalid_argument);
  CHECK_THROWS_AS(gf::set_field(gf::FieldConfig{3, 0x3}), std::invalid_argument);
  gf::set_field(gf::config_for_width(8));
  CHECK(gf::field().width == 8);
  gf::set_field(gf::config_for_width(64));
  CHECK(gf::field().reduction == 0x1B);
}

TEST_CASE("random_elem stream is reproducible") {
  gf::set_field(gf::config_for_width(64));
  // splitmix64 outputs for seed 0, frozen.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
  CHECK(rng.next() == 0xF88BB8A8724C81ECull);

  SplitMix64 r1(123456), r2(123456);
  for (int i = 0; i < 50; ++i) CHECK(gf::random_elem(r1) == gf::random_elem(r2));
}

TEST_CASE("random_elem low bit is balanced") {
  gf::set_field(gf::config_for_width(64));
  SplitMix64 rng(2024);
  int ones = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ones += static_cast<int>(gf::random_elem(rng).v & 1);
  const double mean = static_cast<double>(ones) / draws;
  CHECK(mean > 0.49);
  CHECK(mean < 0.51);
}

TEST_CASE("random_elem respects the field width") {
  gf::set_field(gf::config_for_width(8));
  SplitMix64 rng(5);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 4000; ++i) {
    const Elem e = gf::random_elem(rng);
    CHECK(e.v < 256);
    seen.insert(e.v);
  }
  CHECK(seen.size() == 256);  // all values reached
  gf::set_field(gf::config_for_width(64));
}

TEST_CASE("determinant basics") {
  gf::set_field(gf::config_for_width(64));
  for (int n : {1, 2, 3, 5}) {
    gf::FieldMatrix id(n);
    for (int i = 0; i < n; ++i) id.at(i, i) = gf::one;
    CHECK(gf::determinant(id) == gf::one);
  }

  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    gf::FieldMatrix m(2);
    const Elem a = gf::random_elem(rng), b = gf::random_elem(rng);
    const Elem c = gf::random_elem(rng), d = gf::random_elem(rng);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    // minus equals plus in characteristic 2
    CHECK(gf::determinant(m) == gf::add(gf::mul(a, d), gf::mul(b, c)));
  }

  gf::FieldMatrix dup(3);
  for (int c = 0; c < 3; ++c) {
    const Elem v{static_cast<std::uint64_t>(c + 5)};
    dup.at(0, c) = v;
    dup.at(1, c) = v;
    dup.at(2, c) = Elem{static_cast<std::uint64_t>(7 * c + 1)};
  }
  CHECK(gf::determinant(dup) == gf::zero);
}

TEST_CASE("determinant matches cofactor expansion") {
  for (unsigned w : {8u, 64u}) {
    CAPTURE(w);
    gf::set_field(gf::config_for_width(w));
    SplitMix64 rng(31 + w);
    for (int i = 0; i < 200; ++i) {
      gf::FieldMatrix m(4);
      for (auto& e : m.entries) e = gf::random_elem(rng);
      REQUIRE(gf::determinant(m) == testsupport::cofactor_det(m));
    }
  }
  gf::set_field(gf::config_for_width(64));
}
