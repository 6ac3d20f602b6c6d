#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/rng.hpp"

using lrc::FieldElement;
using lrc::FiniteField;

TEST_CASE("prime field arithmetic mod 11") {
  const FiniteField f(11);
  REQUIRE(f.order() == 11);
  CHECK(f.element(7) + f.element(9) == f.element(5));   // 16 mod 11
  CHECK(f.element(7) * f.element(9) == f.element(8));   // 63 mod 11
  CHECK(inv(f.element(2)) == f.element(6));             // 2*6 = 12
  CHECK(inv(f.element(1)) == f.element(1));
  CHECK(f.element(3) - f.element(8) == f.element(6));
}

TEST_CASE("characteristic 2") {
  const FiniteField f(2);
  CHECK(f.one() + f.one() == f.zero());
}

TEST_CASE("GF(25) uses the smallest-rank irreducible modulus x^2 + 2") {
  // Independent derivation: scan monic quadratics x^2 + c1 x + c0 by rank of
  // (c0, c1); a quadratic is irreducible over GF(5) iff it has no root.
  std::vector<std::uint32_t> first_irreducible;
  for (std::uint32_t low = 0; low < 25 && first_irreducible.empty(); ++low) {
    const std::uint32_t c0 = low % 5, c1 = low / 5;
    bool has_root = false;
    for (std::uint32_t x = 0; x < 5; ++x)
      if ((x * x + c1 * x + c0) % 5 == 0) has_root = true;
    if (!has_root) first_irreducible = {c0, c1, 1};
  }
  REQUIRE(first_irreducible == std::vector<std::uint32_t>{2, 0, 1});  // x^2 + 2

  const FiniteField f(5, 2);
  REQUIRE(f.order() == 25);
  CHECK(f.modulus() == first_irreducible);

  // x has rank 5; x * x = -2 = 3.
  const FieldElement x = f.element(5);
  CHECK(x * x == f.element(3));
  // inv(x) = 2x (rank 10): x * 2x = 2x^2 = 2*3 = 6 = 1.
  CHECK(inv(x) == f.element(10));
  CHECK(x * f.element(10) == f.one());
}

TEST_CASE("element enumeration is by canonical rank") {
  const FiniteField f3(3);
  std::vector<std::uint32_t> ranks;
  for (const auto& e : f3.elements()) ranks.push_back(e.rank());
  CHECK(ranks == std::vector<std::uint32_t>{0, 1, 2});

  const FiniteField f4(2, 2);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
  const auto elems = f4.elements();
  REQUIRE(elems.size() == 4);
  CHECK(elems[0] == f4.zero());
  CHECK(elems[1] == f4.one());
  CHECK(elems[2].coefficients() == std::vector<std::uint32_t>{0, 1});  // x
  CHECK(elems[3].coefficients() == std::vector<std::uint32_t>{1, 1});  // x + 1

  const FiniteField f11(11);
  const auto e11 = f11.elements();
  REQUIRE(e11.size() == 11);
  for (std::uint32_t r = 0; r < 11; ++r) CHECK(e11[r].rank() == r);
}

TEST_CASE("construction rejects invalid parameters") {
  CHECK_THROWS_AS(FiniteField(4), lrc::ValidationError);
  CHECK_THROWS_AS(FiniteField(1), lrc::ValidationError);
  CHECK_THROWS_AS(FiniteField(0), lrc::ValidationError);
  CHECK_THROWS_AS(FiniteField(2, 0), lrc::ValidationError);
  CHECK_THROWS_AS(FiniteField(2, 17), lrc::ValidationError);  // 2^17 > 2^16
  CHECK_THROWS_AS(FiniteField(11).element(11), lrc::ValidationError);
}

TEST_CASE("mixing fields throws") {
  const FiniteField f5(5), f7(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), lrc::ValidationError);
  CHECK(f5.one() != f7.one());
  // Interned state: independently constructed fields interoperate.
  CHECK(FiniteField(5).element(3) + f5.element(4) == f5.element(2));
}

TEST_CASE("division and zero handling") {
  const FiniteField f9(3, 2);
  CHECK_THROWS_AS(inv(f9.zero()), lrc::ValidationError);
  CHECK_THROWS_AS(f9.one() / f9.zero(), lrc::ValidationError);
  for (std::uint32_t r = 1; r < 9; ++r) {
    const FieldElement a = f9.element(r);
    CHECK(a / a == f9.one());
  }
}

namespace {

void check_axioms_exhaustive(const FiniteField& f) {
  const auto elems = f.elements();
  const std::size_t q = elems.size();
  for (const auto& a : elems) {
    CHECK(a + f.zero() == a);
    CHECK(a * f.one() == a);
    CHECK(a + (-a) == f.zero());
    if (!a.is_zero()) {
      CHECK(a * inv(a) == f.one());
      CHECK(inv(inv(a)) == a);                 // involution
      CHECK(pow(a, q - 1) == f.one());         // a^(q-1) = 1
    }
  }
  for (const auto& a : elems)
    for (const auto& b : elems) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : elems) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

}  // namespace

TEST_CASE("field axioms, exhaustive for q <= 25") {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {5, 2}}) {
    INFO("GF(" << p << "^" << k << ")");
    check_axioms_exhaustive(FiniteField(p, k));
  }
}

TEST_CASE("smallest-rank moduli for assorted fields") {
  // Expected coefficient lists derived independently (scan by rank,
  // irreducibility checked with a computer algebra system).
  using V = std::vector<std::uint32_t>;
  CHECK(FiniteField(2, 3).modulus() == V{1, 1, 0, 1});            // x^3+x+1
  CHECK(FiniteField(3, 2).modulus() == V{1, 0, 1});               // x^2+1
  CHECK(FiniteField(17, 2).modulus() == V{3, 0, 1});              // x^2+3
  CHECK(FiniteField(2, 9).modulus() == V{1, 1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(FiniteField(3, 6).modulus() == V{2, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("the scope-bound field GF(2^16) works") {
  const FiniteField f(2, 16);
  CHECK(f.order() == 65536);
  // x^16 + x^5 + x^3 + x + 1, the rank-43 tail.
  CHECK(f.modulus() ==
        std::vector<std::uint32_t>{1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  const FieldElement a = f.element(12345);
  CHECK(a * inv(a) == f.one());
  CHECK(pow(a, f.order() - 1) == f.one());
}

TEST_CASE("field axioms, sampled for large fields") {
  // Exercises the non-tabulated path (q > 256): polynomial reduction and
  // extended Euclidean inverses.
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {17, 2}, {2, 9}, {3, 6}}) {
    const FiniteField f(p, k);
    INFO("GF(" << p << "^" << k << ")");
    REQUIRE(f.order() > 256);
    lrc::SplitMix64 rng(0x5eedULL + f.order());
    for (int t = 0; t < 300; ++t) {
      const FieldElement a = f.element(static_cast<std::uint32_t>(rng.below(f.order())));
      const FieldElement b = f.element(static_cast<std::uint32_t>(rng.below(f.order())));
      const FieldElement c = f.element(static_cast<std::uint32_t>(rng.below(f.order())));
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) {
        CHECK(a * inv(a) == f.one());
        CHECK(pow(a, f.order() - 1) == f.one());
      }
    }
    // Distinctness of the enumeration.
    std::set<std::uint32_t> seen;
    for (const auto& e : f.elements()) seen.insert(e.rank());
    CHECK(seen.size() == f.order());
  }
}
