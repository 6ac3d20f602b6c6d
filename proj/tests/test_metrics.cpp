#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "lrc/metrics.hpp"
#include "lrc/tables.hpp"
#include "test_util.hpp"

using lrc::CodeSpec;
using lrc::Exponents;
using lrc::FieldElement;
using lrc::FiniteField;
using lrc::SplitMix64;
using lrc_tests::prefix_spec;
using lrc_tests::random_nonzero_message;

namespace {

CodeSpec table1(int d) { return lrc::reference_spec(lrc::reference_tables()[0], d); }
CodeSpec table2(int d) { return lrc::reference_spec(lrc::reference_tables()[1], d); }

const std::vector<CodeSpec>& small_specs() {
  static const std::vector<CodeSpec> specs = {
      prefix_spec(3, {3, 3}, {2, 2}, 1),    prefix_spec(3, {3, 3}, {2, 2}, 2),
      prefix_spec(3, {2, 3}, {2, 2}, 1),    prefix_spec(5, {5, 5}, {3, 3}, 2),
      prefix_spec(5, {4, 5}, {2, 2}, 4),    prefix_spec(4, {4, 4}, {2, 3}, 3),
      prefix_spec(7, {3, 7}, {2, 4}, 4),    prefix_spec(8, {4, 8}, {3, 2}, 5),
      prefix_spec(9, {3, 4, 5}, {2, 2, 3}, 4), prefix_spec(11, {2, 4}, {2, 3}, 1),
  };
  return specs;
}

}  // namespace

TEST_CASE("dimension formula matches the reference columns") {
  CHECK(lrc::dimension_formula(table1(4)) == 35);
  CHECK(lrc::dimension_formula(table2(26)) == 314);  // C(28,26) - C(8,6) - C(9,7)
  CHECK(lrc::dimension_by_count(table1(18)) == 336);  // 8 * 7 * 6
  CHECK(lrc::dimension_formula(prefix_spec(5, {5, 5}, {3, 3}, 0)) == 1);
}

TEST_CASE("dimension: formula, count and generator rank agree") {
  for (const auto& spec : small_specs()) {
    const long long formula = lrc::dimension_formula(spec);
    CHECK(formula == lrc::dimension_by_count(spec));
    CHECK(formula == static_cast<long long>(spec.dimension()));
    CHECK(formula == static_cast<long long>(lrc::rank(spec.generator_matrix())));
  }
}

TEST_CASE("minimum distance search matches the reference columns") {
  CHECK(lrc::min_distance_search(table1(10)) == 352);
  CHECK(lrc::min_distance_search(table2(27)) == 102);
  const CodeSpec t1d0 = table1(0);
  CHECK(lrc::min_distance_search(t1d0) == static_cast<long long>(t1d0.length()));
}

TEST_CASE("minimum distance search returns a consistent witness") {
  for (const auto& spec : small_specs()) {
    Exponents witness;
    const long long v = lrc::min_distance_search(spec, &witness);
    REQUIRE(witness.size() == spec.availability());
    long long prod = 1;
    int total = 0;
    for (std::size_t i = 0; i < witness.size(); ++i) {
      CHECK(witness[i] >= 0);
      CHECK(witness[i] <= spec.locality(i) - 1);
      prod *= static_cast<long long>(spec.subset_size(i)) - witness[i];
      total += witness[i];
    }
    CHECK(total <= spec.degree_bound());
    CHECK(prod == v);
  }
}

TEST_CASE("closed-form distance: k/l decomposition") {
  CHECK(lrc::min_distance_closed(table1(10)) == 352);  // k=1, l=3: 4*(11-3)*11
  CHECK(lrc::min_distance_closed(table2(37)) == 42);   // k=2, l=0: 6*7
  const CodeSpec t2d0 = table2(0);
  CHECK(lrc::min_distance_closed(t2d0) == static_cast<long long>(t2d0.length()));
}

TEST_CASE("closed-form distance requires ascending deltas") {
  // Equal sizes keep the caller's order, so deltas (3, 2) stay descending.
  const CodeSpec spec = prefix_spec(7, {7, 7}, {3, 2}, 3);
  CHECK_FALSE(lrc::min_distance_closed_applicable(spec));
  CHECK_THROWS_AS(lrc::min_distance_closed(spec), std::domain_error);
  // The search is the fallback and still works.
  CHECK(lrc::min_distance_search(spec) > 0);
  CHECK(lrc::compute_metrics(spec).min_distance == lrc::min_distance_search(spec));
}

TEST_CASE("closed form agrees with the search whenever applicable") {
  for (const auto& spec : small_specs()) {
    if (!lrc::min_distance_closed_applicable(spec)) continue;
    CHECK(lrc::min_distance_closed(spec) == lrc::min_distance_search(spec));
  }
}

TEST_CASE("brute-force minimum weight agrees with the tuple search") {
  CHECK(lrc::brute_force_min_weight(prefix_spec(3, {3, 3}, {2, 2}, 1)) ==
        lrc::min_distance_search(prefix_spec(3, {3, 3}, {2, 2}, 1)));
  for (const auto& spec : small_specs()) {
    double combos = 1;
    for (std::size_t t = 0; t < spec.dimension() && combos <= 1e6; ++t)
      combos *= spec.field().order();
    if (combos > 1e6) continue;
    CHECK(lrc::brute_force_min_weight(spec) == lrc::min_distance_search(spec));
  }
}

TEST_CASE("brute-force guard rejects oversized enumerations") {
  CHECK_THROWS_AS(lrc::brute_force_min_weight(table1(4)), lrc::ValidationError);
}

TEST_CASE("leading exponents under graded-lex") {
  const CodeSpec spec = prefix_spec(5, {5, 5}, {3, 3}, 2);
  const auto& basis = spec.monomial_basis();
  std::vector<FieldElement> msg(spec.dimension(), spec.field().zero());
  CHECK_THROWS_AS(lrc::leading_exponents(spec, msg), lrc::ValidationError);
  msg[0] = spec.field().one();  // constant
  CHECK(lrc::leading_exponents(spec, msg) == Exponents{0, 0});
  // add a degree-2 monomial: it dominates
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (basis[t] == Exponents{1, 1}) msg[t] = spec.field().element(3);
  CHECK(lrc::leading_exponents(spec, msg) == Exponents{1, 1});
}

TEST_CASE("footprint bound holds for monomial and random messages") {
  const CodeSpec spec = prefix_spec(5, {5, 4}, {2, 2}, 5);
  const auto& basis = spec.monomial_basis();

  // Monomial X_0^e with 0 in A_0: weight = (d_0 - 1) * d_1 >= (d_0 - e) * d_1.
  for (int e = 1; e <= spec.locality(0) - 1; ++e) {
    std::vector<FieldElement> msg(spec.dimension(), spec.field().zero());
    Exponents target(spec.availability(), 0);
    target[0] = e;
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (basis[t] == target) msg[t] = spec.field().one();
    const auto w = lrc::encode(spec, msg);
    long long weight = 0;
    for (const auto& x : w)
      if (!x.is_zero()) ++weight;
    CHECK(weight ==
          (static_cast<long long>(spec.subset_size(0)) - 1) *
              static_cast<long long>(spec.subset_size(1)));
    CHECK(lrc::footprint_bound_check(spec, msg));
  }

  SplitMix64 rng(2024);
  for (const auto& s : small_specs())
    for (int t = 0; t < 25; ++t)
      CHECK(lrc::footprint_bound_check(s, random_nonzero_message(s, rng)));
}

TEST_CASE("the extremal low-weight message attains the minimum distance") {
  for (const auto& spec : small_specs()) {
    Exponents witness;
    const long long v = lrc::min_distance_search(spec, &witness);
    const auto msg = lrc::extremal_low_weight_message(spec, witness);
    const auto w = lrc::encode(spec, msg);
    long long weight = 0;
    for (const auto& x : w)
      if (!x.is_zero()) ++weight;
    CHECK(weight == v);
    CHECK(lrc::footprint_bound_check(spec, msg));
  }
}

TEST_CASE("extremal message construction validates its input") {
  const CodeSpec spec = prefix_spec(5, {5, 5}, {3, 3}, 2);
  CHECK_THROWS_AS(lrc::extremal_low_weight_message(spec, Exponents{9, 0}),
                  lrc::ValidationError);
  CHECK_THROWS_AS(lrc::extremal_low_weight_message(spec, Exponents{2, 2}),
                  lrc::ValidationError);  // sum > d
  CHECK_THROWS_AS(lrc::extremal_low_weight_message(spec, Exponents{1}), lrc::ValidationError);
}

TEST_CASE("local code reports: small restriction, exhaustive distance") {
  // Table 2 at d = 2: restriction dimension 3, exhaustive (25^3 combos).
  const CodeSpec spec = table2(2);
  const FiniteField& f = spec.field();
  const auto rep = lrc::local_code(spec, 0, std::vector<FieldElement>{f.element(7)});
  CHECK(rep.length == 25);
  CHECK(rep.dimension == 3);  // d + 1
  CHECK(rep.min_distance == 23);  // d_i - d
  CHECK(rep.distance_exhaustive);
  CHECK(rep.is_mds);
}

TEST_CASE("local code reports: large restriction, witness-verified distance") {
  // Table 2 at d = 5: dimension 6, distance 25 - 5 = 20.
  const CodeSpec t2 = table2(5);
  const auto rep2 =
      lrc::local_code(t2, 1, std::vector<FieldElement>{t2.field().element(3)});
  CHECK(rep2.length == 25);
  CHECK(rep2.dimension == 6);
  CHECK(rep2.min_distance == 20);
  CHECK_FALSE(rep2.distance_exhaustive);
  CHECK(rep2.is_mds);

  // Table 1 at d = 14 >= r_i - 1 for every i: direction 0 has dimension
  // r_0 = 8 and distance delta_0 = 4.
  const CodeSpec t1 = table1(14);
  const auto rep1 = lrc::local_code(
      t1, 0, std::vector<FieldElement>{t1.field().element(3), t1.field().element(7)});
  CHECK(rep1.length == 11);
  CHECK(rep1.dimension == 8);
  CHECK(rep1.min_distance == 4);
  CHECK(rep1.is_mds);
}

TEST_CASE("every local code is MDS") {
  SplitMix64 rng(31);
  for (const auto& spec : small_specs()) {
    const std::size_t n = spec.availability();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<FieldElement> alpha;
      for (std::size_t t = 0; t < n; ++t) {
        if (t == i) continue;
        const auto& sub = spec.subset(t);
        alpha.push_back(sub[static_cast<std::size_t>(rng.below(sub.size()))]);
      }
      const auto rep = lrc::local_code(spec, i, alpha);
      CHECK(rep.dimension ==
            static_cast<std::size_t>(std::min(spec.degree_bound(), spec.locality(i) - 1)) + 1);
      CHECK(rep.dimension + static_cast<std::size_t>(rep.min_distance) == rep.length + 1);
      CHECK(rep.is_mds);
      CHECK(rep.min_distance >= spec.delta(i));  // locality (r, delta) property
    }
  }
}

TEST_CASE("local code validates the transversal point") {
  const CodeSpec spec = prefix_spec(5, {4, 5}, {2, 3}, 3);
  const FiniteField& f = spec.field();
  CHECK_THROWS_AS(lrc::local_code(spec, 2, std::vector<FieldElement>{f.element(0)}),
                  lrc::ValidationError);
  CHECK_THROWS_AS(lrc::local_code(spec, 0, std::vector<FieldElement>{}), lrc::ValidationError);
  // element not in the subset: A_0 holds ranks 0..3, pass rank 4 for direction 1
  CHECK_THROWS_AS(lrc::local_code(spec, 1, std::vector<FieldElement>{f.element(4)}),
                  lrc::ValidationError);
}

TEST_CASE("metrics bundle matches the reference columns") {
  const auto m1 = lrc::compute_metrics(table1(15));
  CHECK(m1.length == 1331);
  CHECK(m1.dimension == 326);
  CHECK(m1.min_distance == 180);
  CHECK(m1.availability == 3);
  REQUIRE(m1.profile.size() == 3);
  CHECK(m1.profile[0].locality == 8);
  CHECK(m1.profile[0].delta == 4);
  CHECK(m1.singleton_gap == 1331 + 1 - 326 - 180);

  const auto m2 = lrc::compute_metrics(table2(28));
  CHECK(m2.length == 625);
  CHECK(m2.dimension == 335);
  CHECK(m2.min_distance == 96);

  const auto m3 = lrc::compute_metrics(table2(6));
  CHECK(m3.dimension == 28);
  CHECK(m3.min_distance == 475);
}

TEST_CASE("Singleton inequality and monotonicity in d") {
  const auto& t2 = lrc::reference_tables()[1];
  long long prev_kappa = 0, prev_v = 626;
  for (int d = 0; d <= 37; ++d) {
    const auto cm = lrc::compute_metrics(lrc::reference_spec(t2, d));
    CHECK(cm.dimension + cm.min_distance <= static_cast<long long>(cm.length) + 1);
    CHECK(cm.singleton_gap >= 0);
    CHECK(cm.dimension >= prev_kappa);   // kappa non-decreasing
    CHECK(cm.min_distance <= prev_v);    // v non-increasing
    prev_kappa = cm.dimension;
    prev_v = cm.min_distance;
  }
}
