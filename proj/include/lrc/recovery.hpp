#ifndef LRC_RECOVERY_HPP
#define LRC_RECOVERY_HPP

// Encoding and erasure recovery.
//
// Every position j lies on n axis-parallel lines of the grid, one per
// direction; the line in direction i is the recovery set R(i, j).  The code
// restricted to such a line is a polynomial of degree < r_i in the moving
// coordinate, so any r_i surviving entries of R(i, j) \ {j} determine the
// whole line: collect survivors, solve the Vandermonde system for the
// coefficients, evaluate back at j.  Distinct directions share only
// position j, so up to n recovery attempts are independent.
//
// recover_all() runs the peeling loop: scan erased positions in ascending
// order, try directions in ascending order, repeat until a pass makes no
// progress.  Repairs made early in a pass feed later repairs in the same
// pass.  The whole procedure is deterministic.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

using Codeword = std::vector<FieldElement>;
/// A codeword with lost positions; nullopt marks an erasure.
using ErasedWord = std::vector<std::optional<FieldElement>>;

/// Axis line through a position: the grid points differing from point j
/// only in coordinate `direction`.
struct RecoverySet {
  std::size_t direction = 0;
  std::size_t center = 0;                // j; always a member of positions
  std::vector<std::size_t> positions;    // ascending, |positions| = d_i
  int locality = 0;                      // r_i
  int tolerance = 0;                     // delta_i
};

/// message * generator matrix; message length must equal the dimension.
inline Codeword encode(const CodeSpec& spec, std::span<const FieldElement> message) {
  if (message.size() != spec.dimension())
    throw ValidationError("message length " + std::to_string(message.size()) +
                          " != code dimension " + std::to_string(spec.dimension()));
  const Matrix& g = spec.generator_matrix();
  Codeword word(spec.length(), spec.field().zero());
  for (std::size_t t = 0; t < message.size(); ++t) {
    if (message[t].is_zero()) continue;
    const auto row = g.row(t);
    for (std::size_t j = 0; j < word.size(); ++j) word[j] += message[t] * row[j];
  }
  return word;
}

inline ErasedWord to_erased(const Codeword& w) { return ErasedWord(w.begin(), w.end()); }

inline std::size_t erased_count(const ErasedWord& w) {
  std::size_t c = 0;
  for (const auto& e : w)
    if (!e) ++c;
  return c;
}

inline RecoverySet recovery_set(const CodeSpec& spec, std::size_t j, std::size_t i) {
  if (j >= spec.length()) throw ValidationError("position out of range");
  if (i >= spec.availability()) throw ValidationError("direction out of range");
  const std::size_t di = spec.subset_size(i);
  const std::size_t stride = spec.stride(i);
  const std::size_t slot = j / stride % di;
  const std::size_t base = j - slot * stride;
  RecoverySet rs;
  rs.direction = i;
  rs.center = j;
  rs.locality = spec.locality(i);
  rs.tolerance = spec.delta(i);
  rs.positions.reserve(di);
  for (std::size_t t = 0; t < di; ++t) rs.positions.push_back(base + t * stride);
  return rs;
}

namespace detail {

// Shared by the throwing entry point and the peeling loop.  Returns nullopt
// when fewer than r_i survivors exist in R(i, j) \ {j}; *available_out (if
// given) receives the survivor count.
inline std::optional<FieldElement> try_recover_entry(const CodeSpec& spec, const ErasedWord& word,
                                                     std::size_t j, std::size_t i,
                                                     std::size_t* available_out = nullptr) {
  const std::size_t di = spec.subset_size(i);
  const std::size_t stride = spec.stride(i);
  const std::size_t slot = j / stride % di;
  const std::size_t base = j - slot * stride;
  const std::size_t r = static_cast<std::size_t>(spec.locality(i));
  const auto& line = spec.subset(i);

  // Lowest-indexed r_i survivors, beta = the moving coordinate.
  std::vector<FieldElement> betas, values;
  betas.reserve(r);
  values.reserve(r);
  std::size_t available = 0;
  for (std::size_t t = 0; t < di; ++t) {
    if (t == slot) continue;
    const auto& entry = word[base + t * stride];
    if (!entry) continue;
    ++available;
    if (betas.size() < r) {
      betas.push_back(line[t]);
      values.push_back(*entry);
    }
  }
  if (available_out) *available_out = available;
  if (betas.size() < r) return std::nullopt;

  Matrix vand(spec.field(), r, r);
  for (std::size_t s = 0; s < r; ++s) {
    FieldElement acc = spec.field().one();
    for (std::size_t t = 0; t < r; ++t) {
      vand.at(s, t) = acc;
      acc *= betas[s];
    }
  }
  const auto coeffs = solve_square(vand, values);
  if (!coeffs) throw std::logic_error("Vandermonde system was singular");  // distinct betas

  FieldElement result = spec.field().zero();
  FieldElement acc = spec.field().one();
  const FieldElement beta_j = line[slot];
  for (std::size_t t = 0; t < r; ++t) {
    result += (*coeffs)[t] * acc;
    acc *= beta_j;
  }
  return result;
}

}  // namespace detail

/// Value of the codeword at position j, interpolated along direction i from
/// the r_i lowest-indexed survivors of R(i, j) \ {j}.  Position j itself may
/// be present (consistency check) or erased (repair).  Throws
/// InsufficientDataError when fewer than r_i survivors exist.
inline FieldElement recover_entry(const CodeSpec& spec, const ErasedWord& word, std::size_t j,
                                  std::size_t i) {
  if (word.size() != spec.length()) throw ValidationError("word length != code length");
  if (j >= spec.length()) throw ValidationError("position out of range");
  if (i >= spec.availability()) throw ValidationError("direction out of range");
  std::size_t available = 0;
  auto res = detail::try_recover_entry(spec, word, j, i, &available);
  if (!res) throw InsufficientDataError(i, static_cast<std::size_t>(spec.locality(i)), available);
  return *res;
}

struct RepairReport {
  bool complete = false;
  std::size_t passes = 0;
  std::size_t repaired = 0;
  std::vector<std::size_t> repairs_by_direction;   // successful repairs per direction
  std::vector<std::size_t> attempts_by_direction;  // recovery attempts per direction
  std::vector<std::size_t> stuck;                  // still-erased positions, ascending
};

struct RepairResult {
  ErasedWord word;
  RepairReport report;

  /// Defined only when report.complete.
  Codeword codeword() const {
    Codeword w;
    w.reserve(word.size());
    for (const auto& e : word) {
      if (!e) throw std::logic_error("codeword() on an incomplete repair");
      w.push_back(*e);
    }
    return w;
  }
};

/// Multi-round peeling repair.  Irrecoverable patterns are a result, not an
/// error: the report lists the stuck positions.
inline RepairResult recover_all(const CodeSpec& spec, ErasedWord word) {
  if (word.size() != spec.length()) throw ValidationError("word length != code length");
  const std::size_t n = spec.availability();
  RepairReport rep;
  rep.repairs_by_direction.assign(n, 0);
  rep.attempts_by_direction.assign(n, 0);

  std::vector<std::size_t> erased;
  for (std::size_t j = 0; j < word.size(); ++j)
    if (!word[j]) erased.push_back(j);

  while (!erased.empty()) {
    ++rep.passes;
    std::vector<std::size_t> still;
    bool progressed = false;
    for (std::size_t j : erased) {
      bool fixed = false;
      for (std::size_t i = 0; i < n && !fixed; ++i) {
        ++rep.attempts_by_direction[i];
        if (auto v = detail::try_recover_entry(spec, word, j, i)) {
          word[j] = *v;
          ++rep.repairs_by_direction[i];
          ++rep.repaired;
          fixed = true;
          progressed = true;
        }
      }
      if (!fixed) still.push_back(j);
    }
    erased = std::move(still);
    if (!progressed) break;
  }

  rep.complete = erased.empty();
  rep.stuck = std::move(erased);
  return {std::move(word), std::move(rep)};
}

}  // namespace lrc

#endif  // LRC_RECOVERY_HPP
