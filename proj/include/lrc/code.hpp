#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

// Construction of the evaluation code on a grid X = A_1 x ... x A_n over
// GF(q), with per-direction erasure tolerances delta_i and a total degree
// bound d.  Derived data:
//
//  * localities           r_i = |A_i| - delta_i + 1
//  * code length          m = prod |A_i|
//  * point enumeration    lexicographic in the subset slots, last
//                         coordinate fastest
//  * monomial basis       exponent tuples with e_i <= r_i - 1 and
//                         sum e_i <= d, in ascending graded-lex order
//  * generator matrix     row t = t-th basis monomial evaluated at all
//                         points (0^0 = 1)
//
// Directions are stored sorted by subset size (stable), as the analysis
// assumes |A_1| <= ... <= |A_n|; original_direction() maps back to the
// caller's ordering.  A CodeSpec is immutable and cheap to copy.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then left-to-right
/// exponent comparison.  The basis is listed ascending under this order and
/// leading monomials are maximal under it.
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class CodeSpec {
 public:
  /// Validates and canonicalizes the construction data.  Throws
  /// ValidationError on: subsets of size < 2, duplicate or foreign elements,
  /// delta_i < 2, r_i < 1, or d outside [0, sum(r_i - 1)].
  CodeSpec(const FiniteField& field, std::vector<std::vector<FieldElement>> subsets,
           std::vector<int> deltas, int degree_bound)
      : impl_(std::make_shared<Impl>(field, std::move(subsets), std::move(deltas), degree_bound)) {}

  const FiniteField& field() const noexcept { return impl_->field; }
  std::size_t availability() const noexcept { return impl_->subsets.size(); }  // n
  std::size_t length() const noexcept { return impl_->m; }                     // m

  const std::vector<FieldElement>& subset(std::size_t i) const { return impl_->subsets.at(i); }
  std::size_t subset_size(std::size_t i) const { return impl_->subsets.at(i).size(); }  // d_i
  int delta(std::size_t i) const { return impl_->deltas.at(i); }
  int locality(std::size_t i) const { return impl_->localities.at(i); }  // r_i
  int degree_bound() const noexcept { return impl_->degree_bound; }
  /// sum(r_i - 1), the largest admissible degree bound.
  int max_degree_bound() const noexcept { return impl_->max_degree; }

  /// Caller-side index of sorted direction i.
  std::size_t original_direction(std::size_t i) const { return impl_->perm.at(i); }

  // --- point enumeration ----------------------------------------------

  /// Coordinates of the j-th evaluation point, j in [0, m).
  std::vector<FieldElement> point(std::size_t j) const {
    if (j >= impl_->m) throw ValidationError("point index out of range");
    const std::size_t n = availability();
    std::vector<FieldElement> pt;
    pt.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      pt.push_back(impl_->subsets[i][j / impl_->strides[i] % impl_->subsets[i].size()]);
    return pt;
  }

  /// Inverse of point(): position of a grid point.
  std::size_t point_index(std::span<const FieldElement> pt) const {
    if (pt.size() != availability()) throw ValidationError("point has wrong arity");
    std::size_t j = 0;
    for (std::size_t i = 0; i < pt.size(); ++i)
      j += subset_slot(i, pt[i]) * impl_->strides[i];
    return j;
  }

  /// Slot of an element within A_i; throws if absent.
  std::size_t subset_slot(std::size_t i, FieldElement e) const {
    if (!impl_->field.contains(e)) throw ValidationError("element belongs to a different field");
    const int s = impl_->slot_of[i][e.rank()];
    if (s < 0)
      throw ValidationError("element " + std::to_string(e.rank()) + " is not in subset " +
                            std::to_string(i));
    return static_cast<std::size_t>(s);
  }

  std::size_t stride(std::size_t i) const { return impl_->strides.at(i); }

  // --- monomial basis and generator matrix -----------------------------

  /// Exponent tuples of the basis monomials, ascending graded-lex.
  const std::vector<Exponents>& monomial_basis() const noexcept { return impl_->basis; }

  /// Code dimension as the basis count.
  std::size_t dimension() const noexcept { return impl_->basis.size(); }

  /// dim x m evaluation matrix; built on first use, then cached.
  const Matrix& generator_matrix() const {
    std::call_once(impl_->gen_once, [this] { impl_->gen = build_generator(*impl_); });
    return *impl_->gen;
  }

  friend bool operator==(const CodeSpec& a, const CodeSpec& b) noexcept {
    return a.impl_ == b.impl_;
  }

 private:
  struct Impl {
    FiniteField field;
    std::vector<std::vector<FieldElement>> subsets;  // sorted by size, elements by rank
    std::vector<int> deltas;
    std::vector<int> localities;
    std::vector<std::size_t> perm;  // sorted direction -> original direction
    int degree_bound = 0;
    int max_degree = 0;
    std::size_t m = 1;
    std::vector<std::size_t> strides;
    std::vector<std::vector<int>> slot_of;  // per direction: element rank -> slot or -1
    std::vector<Exponents> basis;

    mutable std::once_flag gen_once;
    mutable std::unique_ptr<Matrix> gen;

    Impl(const FiniteField& f, std::vector<std::vector<FieldElement>> subs,
         std::vector<int> dels, int d)
        : field(f), subsets(std::move(subs)), deltas(std::move(dels)), degree_bound(d) {
      const std::size_t n = subsets.size();
      if (n == 0) throw ValidationError("at least one direction is required");
      if (deltas.size() != n) throw ValidationError("one delta per direction is required");

      // Stable size sort, tracking the caller's direction indices.
      perm.resize(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return subsets[a].size() < subsets[b].size();
      });
      {
        std::vector<std::vector<FieldElement>> s2;
        std::vector<int> d2;
        s2.reserve(n);
        d2.reserve(n);
        for (std::size_t i : perm) {
          s2.push_back(std::move(subsets[i]));
          d2.push_back(deltas[i]);
        }
        subsets = std::move(s2);
        deltas = std::move(d2);
      }

      slot_of.assign(n, std::vector<int>(field.order(), -1));
      for (std::size_t i = 0; i < n; ++i) {
        auto& a = subsets[i];
        for (const auto& e : a)
          if (!field.contains(e))
            throw ValidationError("subset " + std::to_string(i) +
                                  " contains an element of a different field");
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
          throw ValidationError("subset " + std::to_string(i) + " has duplicate elements");
        if (a.size() < 2)
          throw ValidationError("subset " + std::to_string(i) + " must have at least 2 elements");
        for (std::size_t s = 0; s < a.size(); ++s) slot_of[i][a[s].rank()] = static_cast<int>(s);

        const int di = static_cast<int>(a.size());
        if (deltas[i] < 2)
          throw ValidationError("delta must be >= 2 (direction " + std::to_string(i) + ")");
        const int r = di - deltas[i] + 1;
        if (r < 1)
          throw ValidationError("locality r = d - delta + 1 must be >= 1 (direction " +
                                std::to_string(i) + ")");
        localities.push_back(r);
        max_degree += r - 1;
      }

      if (degree_bound < 0) throw ValidationError("degree bound must be >= 0");
      if (degree_bound > max_degree)
        throw ValidationError("degree bound " + std::to_string(degree_bound) +
                              " exceeds sum(r_i - 1) = " + std::to_string(max_degree));

      constexpr std::size_t kMaxLength = std::size_t{1} << 24;
      for (const auto& a : subsets) {
        m *= a.size();
        if (m > kMaxLength) throw ValidationError("code length exceeds the 2^24 scope bound");
      }
      strides.assign(n, 1);
      for (std::size_t i = n - 1; i-- > 0;) strides[i] = strides[i + 1] * subsets[i + 1].size();

      // Basis: all exponent boxes e_i <= r_i - 1 with total degree <= d.
      Exponents cur(n, 0);
      enumerate_box(0, degree_bound, cur);
      std::sort(basis.begin(), basis.end(), grlex_less);
    }

    void enumerate_box(std::size_t i, int budget, Exponents& cur) {
      if (i == subsets.size()) {
        basis.push_back(cur);
        return;
      }
      const int top = std::min(localities[i] - 1, budget);
      for (int e = 0; e <= top; ++e) {
        cur[i] = e;
        enumerate_box(i + 1, budget - e, cur);
      }
      cur[i] = 0;
    }
  };

  static std::unique_ptr<Matrix> build_generator(const Impl& impl) {
    const std::size_t kappa = impl.basis.size();
    const std::size_t n = impl.subsets.size();
    auto g = std::make_unique<Matrix>(impl.field, kappa, impl.m);
    for (std::size_t t = 0; t < kappa; ++t) {
      const Exponents& e = impl.basis[t];
      for (std::size_t j = 0; j < impl.m; ++j) {
        FieldElement v = impl.field.one();
        for (std::size_t i = 0; i < n; ++i) {
          const FieldElement coord =
              impl.subsets[i][j / impl.strides[i] % impl.subsets[i].size()];
          if (e[i] != 0) v *= pow(coord, static_cast<std::uint64_t>(e[i]));
        }
        g->at(t, j) = v;
      }
    }
    return g;
  }

  std::shared_ptr<Impl> impl_;
};

}  // namespace lrc

#endif  // LRC_CODE_HPP
