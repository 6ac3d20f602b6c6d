#ifndef LRC_METRICS_HPP
#define LRC_METRICS_HPP

// Exact code parameters.
//
// Dimension comes in two independent routes that must agree:
//   * dimension_formula  — inclusion-exclusion over direction subsets,
//                          sum over S of (-1)^|S| C(n + d - R_S, d - R_S)
//                          with R_S = sum of r_i over S and C(a, b) = 0 for
//                          b < 0, evaluated in exact big-integer arithmetic;
//   * dimension_by_count — direct enumeration of the admissible exponent
//                          box (independent of the basis cached in CodeSpec).
//
// Minimum distance likewise:
//   * min_distance_search — exhaustive minimum of prod(d_i - s_i) over
//                           0 <= s_i <= r_i - 1, sum s_i <= d;
//   * min_distance_closed — the k/l decomposition formula, applicable when
//                           the deltas are ascending in the size-sorted
//                           direction order;
//   * brute_force_min_weight — message-space enumeration, the independent
//                           oracle (guarded to q^kappa <= 10^6).
//
// local_code() restricts the code to one axis line and reports the
// dimension/distance of the restriction, which always meets the Singleton
// bound with equality.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/linalg.hpp"
#include "lrc/recovery.hpp"
#include "lrc/rng.hpp"

namespace lrc {

namespace detail {

inline mpz_class binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline long long count_box(const CodeSpec& spec, std::size_t i, int budget) {
  if (i == spec.availability()) return 1;
  long long total = 0;
  const int top = std::min(spec.locality(i) - 1, budget);
  for (int e = 0; e <= top; ++e) total += count_box(spec, i + 1, budget - e);
  return total;
}

/// Minimum Hamming weight over all nonzero combinations of the rows.
/// Assumes the rows are linearly independent.
inline long long min_weight_of_span(const Matrix& rows) {
  const std::size_t k = rows.rows();
  const std::size_t m = rows.cols();
  const auto elems = rows.field().elements();
  std::vector<std::vector<FieldElement>> buf(k + 1,
                                             std::vector<FieldElement>(m, rows.field().zero()));
  long long best = static_cast<long long>(m) + 1;

  auto weight_plus = [&](std::span<const FieldElement> cur, std::span<const FieldElement> row,
                         FieldElement c) {
    long long w = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (!(cur[j] + c * row[j]).is_zero()) ++w;
    return w;
  };

  auto rec = [&](auto&& self, std::size_t t, const std::vector<FieldElement>& cur,
                 bool any) -> void {
    if (t + 1 == k) {
      const auto row = rows.row(t);
      if (any) {
        long long w = 0;
        for (std::size_t j = 0; j < m; ++j)
          if (!cur[j].is_zero()) ++w;
        best = std::min(best, w);
      }
      for (const auto& c : elems) {
        if (c.is_zero()) continue;
        best = std::min(best, weight_plus(cur, row, c));
      }
      return;
    }
    self(self, t + 1, cur, any);
    const auto row = rows.row(t);
    for (const auto& c : elems) {
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) buf[t + 1][j] = cur[j] + c * row[j];
      self(self, t + 1, buf[t + 1], true);
    }
  };
  rec(rec, 0, buf[0], false);
  return best;
}

}  // namespace detail

/// Code dimension by the inclusion-exclusion binomial sum.
inline long long dimension_formula(const CodeSpec& spec) {
  const std::size_t n = spec.availability();
  const int d = spec.degree_bound();
  mpz_class total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    long t = d;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) t -= spec.locality(i);
    if (t < 0) continue;
    const mpz_class term = detail::binom(static_cast<long>(n) + t, t);
    if (std::popcount(mask) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  assert(total.fits_slong_p());
  return static_cast<long long>(total.get_si());
}

/// Code dimension by direct enumeration of the exponent box.
inline long long dimension_by_count(const CodeSpec& spec) {
  return detail::count_box(spec, 0, spec.degree_bound());
}

/// Exhaustive minimum of prod(d_i - s_i) over the admissible tuples.  The
/// first minimizing tuple (odometer order) is written to *witness if given.
inline long long min_distance_search(const CodeSpec& spec, Exponents* witness = nullptr) {
  const std::size_t n = spec.availability();
  long long best = std::numeric_limits<long long>::max();
  Exponents cur(n, 0), best_tuple(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int budget, long long prod) -> void {
    if (i == n) {
      if (prod < best) {
        best = prod;
        best_tuple = cur;
      }
      return;
    }
    const int top = std::min(spec.locality(i) - 1, budget);
    for (int s = 0; s <= top; ++s) {
      cur[i] = s;
      self(self, i + 1, budget - s, prod * (static_cast<long long>(spec.subset_size(i)) - s));
    }
    cur[i] = 0;
  };
  rec(rec, 0, spec.degree_bound(), 1);
  if (witness) *witness = best_tuple;
  return best;
}

/// Whether the closed-form distance applies: deltas ascending in the
/// size-sorted direction order.
inline bool min_distance_closed_applicable(const CodeSpec& spec) {
  for (std::size_t i = 1; i < spec.availability(); ++i)
    if (spec.delta(i) < spec.delta(i - 1)) return false;
  return true;
}

/// Closed-form minimum distance: write d = sum_{i<=k}(d_i - delta_i) + l
/// with 0 <= l < d_{k+1} - delta_{k+1}; the distance is
/// delta_1 ... delta_k * (d_{k+1} - l) * prod_{i>k+1} d_i.
/// Throws std::domain_error when the ascending-delta hypothesis fails.
inline long long min_distance_closed(const CodeSpec& spec) {
  if (!min_distance_closed_applicable(spec))
    throw std::domain_error("closed-form distance requires ascending deltas");
  const std::size_t n = spec.availability();
  std::size_t k = 0;
  int rem = spec.degree_bound();
  while (k < n && rem >= spec.locality(k) - 1) {
    rem -= spec.locality(k) - 1;  // r_i - 1 = d_i - delta_i
    ++k;
  }
  long long v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= spec.delta(i);
  if (k < n) {
    v *= static_cast<long long>(spec.subset_size(k)) - rem;
    for (std::size_t i = k + 1; i < n; ++i) v *= static_cast<long long>(spec.subset_size(i));
  }
  return v;
}

/// Independent oracle: minimum Hamming weight over every nonzero codeword.
/// Guarded to q^kappa <= 10^6; throws ValidationError beyond that.
inline long long brute_force_min_weight(const CodeSpec& spec) {
  double combos = 1;
  for (std::size_t t = 0; t < spec.dimension(); ++t) {
    combos *= spec.field().order();
    if (combos > 1e6)
      throw ValidationError("brute-force guard exceeded: q^kappa > 10^6");
  }
  return detail::min_weight_of_span(spec.generator_matrix());
}

/// Graded-lex leading exponent tuple of a message polynomial.
inline Exponents leading_exponents(const CodeSpec& spec, std::span<const FieldElement> message) {
  if (message.size() != spec.dimension()) throw ValidationError("message length != dimension");
  const auto& basis = spec.monomial_basis();
  const Exponents* lead = nullptr;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (message[t].is_zero()) continue;
    if (!lead || grlex_less(*lead, basis[t])) lead = &basis[t];
  }
  if (!lead) throw ValidationError("zero message has no leading monomial");
  return *lead;
}

/// Weight bound from the leading monomial: encodes the message and returns
/// whether weight(codeword) >= prod(d_i - lead_i).
inline bool footprint_bound_check(const CodeSpec& spec, std::span<const FieldElement> message) {
  const Exponents lead = leading_exponents(spec, message);
  const Codeword w = encode(spec, message);
  long long weight = 0;
  for (const auto& e : w)
    if (!e.is_zero()) ++weight;
  long long bound = 1;
  for (std::size_t i = 0; i < spec.availability(); ++i)
    bound *= static_cast<long long>(spec.subset_size(i)) - lead[i];
  return weight >= bound;
}

/// Message whose polynomial is prod_i prod_{s < zeros[i]} (X_i - a_{i,s}),
/// the minimum-weight witness construction: its codeword has weight exactly
/// prod(d_i - zeros[i]).  Requires zeros[i] <= r_i - 1 and sum zeros <= d.
inline std::vector<FieldElement> extremal_low_weight_message(const CodeSpec& spec,
                                                             const Exponents& zeros) {
  const std::size_t n = spec.availability();
  if (zeros.size() != n) throw ValidationError("zeros tuple has wrong arity");
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (zeros[i] < 0 || zeros[i] > spec.locality(i) - 1)
      throw ValidationError("zeros tuple outside the exponent box");
    total += zeros[i];
  }
  if (total > spec.degree_bound()) throw ValidationError("zeros tuple exceeds the degree bound");

  // Expand the product into monomial coefficients.
  std::map<Exponents, FieldElement> coeffs;
  coeffs[Exponents(n, 0)] = spec.field().one();
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < zeros[i]; ++s) {
      const FieldElement a = spec.subset(i)[static_cast<std::size_t>(s)];
      std::map<Exponents, FieldElement> next;
      for (const auto& [e, c] : coeffs) {
        Exponents up = e;
        ++up[i];
        auto [it, fresh] = next.try_emplace(up, c);
        if (!fresh) it->second += c;
        auto [it0, fresh0] = next.try_emplace(e, -(a * c));
        if (!fresh0) it0->second -= a * c;
      }
      coeffs = std::move(next);
    }
  }

  const auto& basis = spec.monomial_basis();
  std::vector<FieldElement> message(basis.size(), spec.field().zero());
  for (const auto& [e, c] : coeffs) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), e, grlex_less);
    if (it == basis.end() || *it != e) throw std::logic_error("expanded monomial not in basis");
    message[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return message;
}

/// Parameters of the code restricted to one axis line.
struct LocalCodeReport {
  std::size_t direction = 0;
  std::vector<FieldElement> alpha;  // transversal coordinates, directions != i ascending
  std::size_t length = 0;           // d_i
  std::size_t dimension = 0;
  long long min_distance = 0;
  bool is_mds = false;
  bool distance_exhaustive = false;  // false: verified witness + rank spot checks
};

/// Restriction of the code to the axis-i line through the transversal point
/// alpha (one coordinate per direction != i, ascending).  The dimension is
/// the rank of the punctured generator matrix; the distance is brute-forced
/// when q^dim <= 10^6, otherwise established by a weight-(d_i - dim + 1)
/// witness plus nonsingularity spot checks on dim-column minors.
inline LocalCodeReport local_code(const CodeSpec& spec, std::size_t i,
                                  std::span<const FieldElement> alpha) {
  const std::size_t n = spec.availability();
  if (i >= n) throw ValidationError("direction out of range");
  if (alpha.size() + 1 != n) throw ValidationError("alpha must have one coordinate per other direction");

  // Positions of the line: fix alpha off-direction, sweep direction i.
  std::size_t base = 0;
  {
    std::size_t a = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (t == i) continue;
      base += spec.subset_slot(t, alpha[a]) * spec.stride(t);
      ++a;
    }
  }
  const std::size_t di = spec.subset_size(i);
  std::vector<std::size_t> positions(di);
  for (std::size_t s = 0; s < di; ++s) positions[s] = base + s * spec.stride(i);

  // Punctured generator, row-reduced to a basis of the restriction.
  const Matrix& g = spec.generator_matrix();
  Matrix punctured(spec.field(), g.rows(), di);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < di; ++c) punctured.at(r, c) = g.at(r, positions[c]);
  const std::size_t dim = row_reduce(punctured);

  const std::size_t expected_dim =
      static_cast<std::size_t>(std::min(spec.degree_bound(), spec.locality(i) - 1)) + 1;
  if (dim != expected_dim)
    throw std::logic_error("restricted dimension differs from min(d, r_i - 1) + 1");

  Matrix rows(spec.field(), dim, di);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < di; ++c) rows.at(r, c) = punctured.at(r, c);

  LocalCodeReport rep;
  rep.direction = i;
  rep.alpha.assign(alpha.begin(), alpha.end());
  rep.length = di;
  rep.dimension = dim;

  double combos = 1;
  bool small = true;
  for (std::size_t t = 0; t < dim && small; ++t) {
    combos *= spec.field().order();
    if (combos > 1e6) small = false;
  }
  const long long singleton_distance = static_cast<long long>(di) - static_cast<long long>(dim) + 1;
  if (small) {
    rep.min_distance = detail::min_weight_of_span(rows);
    rep.distance_exhaustive = true;
  } else {
    // Witness of weight d_i - dim + 1: the univariate polynomial vanishing
    // on the first dim - 1 elements of A_i, encoded through the full code.
    std::vector<FieldElement> poly{spec.field().one()};
    for (std::size_t s = 0; s + 1 < dim; ++s) {
      const FieldElement a = spec.subset(i)[s];
      std::vector<FieldElement> next(poly.size() + 1, spec.field().zero());
      for (std::size_t u = 0; u < poly.size(); ++u) {
        next[u + 1] += poly[u];
        next[u] -= a * poly[u];
      }
      poly = std::move(next);
    }
    std::vector<FieldElement> message(spec.dimension(), spec.field().zero());
    const auto& basis = spec.monomial_basis();
    for (std::size_t u = 0; u < poly.size(); ++u) {
      Exponents e(n, 0);
      e[i] = static_cast<int>(u);
      const auto it = std::lower_bound(basis.begin(), basis.end(), e, grlex_less);
      if (it == basis.end() || *it != e) throw std::logic_error("univariate monomial not in basis");
      message[static_cast<std::size_t>(it - basis.begin())] = poly[u];
    }
    const Codeword full = encode(spec, message);
    long long witness_weight = 0;
    for (std::size_t c = 0; c < di; ++c)
      if (!full[positions[c]].is_zero()) ++witness_weight;
    if (witness_weight != singleton_distance)
      throw std::logic_error("distance witness has unexpected weight");

    // Nonsingularity spot checks: random dim-column minors of the basis.
    SplitMix64 rng(SplitMix64::finalize(0xC0DEC0DEULL ^ (base * 2654435761ULL) ^ i));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> cols(di);
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      for (std::size_t s = 0; s < dim; ++s) {
        const std::size_t pick = s + static_cast<std::size_t>(rng.below(di - s));
        std::swap(cols[s], cols[pick]);
      }
      Matrix minor(spec.field(), dim, dim);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) minor.at(r, c) = rows.at(r, cols[c]);
      if (rank(std::move(minor)) != dim)
        throw std::logic_error("restriction failed a distance spot check");
    }
    rep.min_distance = singleton_distance;
    rep.distance_exhaustive = false;
  }

  rep.is_mds = rep.dimension + static_cast<std::size_t>(rep.min_distance) == rep.length + 1;
  return rep;
}

struct DirectionProfile {
  int locality = 0;  // r_i
  int delta = 0;
};

struct CodeMetrics {
  std::size_t length = 0;
  long long dimension = 0;
  long long min_distance = 0;
  std::size_t availability = 0;
  std::vector<DirectionProfile> profile;
  long long singleton_gap = 0;  // (m + 1) - (kappa + v)
};

/// Bundle of exact parameters: dimension from the formula (checked against
/// the count), distance from the closed form when applicable, else the
/// search.
inline CodeMetrics compute_metrics(const CodeSpec& spec) {
  CodeMetrics cm;
  cm.length = spec.length();
  cm.availability = spec.availability();
  cm.dimension = dimension_formula(spec);
  assert(cm.dimension == dimension_by_count(spec));
  cm.min_distance = min_distance_closed_applicable(spec) ? min_distance_closed(spec)
                                                         : min_distance_search(spec);
  for (std::size_t i = 0; i < spec.availability(); ++i)
    cm.profile.push_back({spec.locality(i), spec.delta(i)});
  cm.singleton_gap =
      static_cast<long long>(cm.length) + 1 - (cm.dimension + cm.min_distance);
  return cm;
}

}  // namespace lrc

#endif  // LRC_METRICS_HPP
