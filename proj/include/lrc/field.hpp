#ifndef LRC_FIELD_HPP
#define LRC_FIELD_HPP

// Exact arithmetic in GF(p^k), p prime, k >= 1, p^k <= 2^16.
//
// Representation conventions (these fix the wire/file formats, so they are
// part of the library contract):
//
//  * An element is a residue  c_0 + c_1 x + ... + c_{k-1} x^{k-1}  modulo a
//    monic irreducible polynomial of degree k over GF(p).  Its canonical
//    integer rank is  sum c_t * p^t, a value in [0, p^k).  Rank 0 is the
//    additive identity, rank 1 the multiplicative identity.
//  * Element enumeration is by increasing rank.
//  * The modulus is x^k + g(x) where g is the polynomial of smallest
//    canonical rank making x^k + g irreducible.  For k = 1 the modulus is x
//    and arithmetic is plain integer arithmetic mod p.  Example: GF(25) uses
//    x^2 + 2 (ranks 0 and 1 give reducible polynomials, rank 2 does not).
//
// Fields are immutable once constructed and interned by (p, k): two
// FiniteField objects with equal parameters share state, so elements of one
// can be combined with elements of the other.  For q <= 256 dense
// add/mul/inv tables are built; larger fields compute digit-wise with
// polynomial reduction and extended Euclidean inverses.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

namespace detail {

// Dense tables are built for fields up to this order.
inline constexpr std::uint32_t kFieldTableLimit = 256;
inline constexpr std::uint32_t kFieldOrderLimit = 1u << 16;

struct FieldState {
  std::uint32_t p = 0;              // characteristic
  std::uint32_t k = 0;              // extension degree
  std::uint32_t q = 0;              // order p^k
  std::vector<std::uint32_t> modulus;  // k+1 coefficients, low to high, monic

  bool tabulated = false;
  std::vector<std::uint16_t> add_tab;  // q*q
  std::vector<std::uint16_t> mul_tab;  // q*q
  std::vector<std::uint16_t> neg_tab;  // q
  std::vector<std::uint16_t> inv_tab;  // q, entry 0 unused

  std::vector<std::uint32_t> rank_to_digits(std::uint32_t r) const {
    std::vector<std::uint32_t> c(k, 0);
    for (std::uint32_t t = 0; t < k; ++t) {
      c[t] = r % p;
      r /= p;
    }
    return c;
  }

  std::uint32_t digits_to_rank(std::span<const std::uint32_t> c) const {
    std::uint32_t r = 0;
    for (std::size_t t = c.size(); t-- > 0;) r = r * p + c[t];
    return r;
  }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t t = 0; t < k; ++t) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }

  std::uint32_t neg_slow(std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t t = 0; t < k; ++t) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }

  // Product of two residues, reduced by the modulus.
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    const auto ca = rank_to_digits(a);
    const auto cb = rank_to_digits(b);
    std::vector<std::uint32_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (ca[i] == 0) continue;
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    }
    // Reduce degree >= k terms with x^k = -g(x).
    for (std::size_t t = prod.size(); t-- > k;) {
      const std::uint32_t c = prod[t];
      if (c == 0) continue;
      prod[t] = 0;
      for (std::uint32_t j = 0; j < k; ++j) {
        prod[t - k + j] = (prod[t - k + j] + c * (p - modulus[j] % p)) % p;
      }
    }
    prod.resize(k);
    return digits_to_rank(prod);
  }

  // Extended Euclid over GF(p)[x]: inverse of the residue a.
  std::uint32_t inv_slow(std::uint32_t a) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return tabulated ? add_tab[a * q + b] : add_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return tabulated ? neg_tab[a] : neg_slow(a); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tabulated ? mul_tab[a * q + b] : mul_slow(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const { return tabulated ? inv_tab[a] : inv_slow(a); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }
};

// --- polynomial helpers over GF(p), coefficients low to high ---------------

inline void poly_trim(std::vector<std::uint32_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> f,
                                           const std::vector<std::uint32_t>& g, std::uint32_t p) {
  poly_trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t j = 0; j <= dg; ++j) {
        f[shift + j] = (f[shift + j] + lead * (p - g[j] % p)) % p;
      }
    }
    f.pop_back();
    poly_trim(f);
  }
  return f;
}

inline bool poly_is_zero(const std::vector<std::uint32_t>& f) {
  for (auto c : f)
    if (c) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool poly_is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < dg; ++t) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      std::vector<std::uint32_t> g(dg + 1, 0);
      std::uint64_t rr = r;
      for (std::size_t t = 0; t < dg; ++t) {
        g[t] = static_cast<std::uint32_t>(rr % p);
        rr /= p;
      }
      g[dg] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

inline std::uint32_t FieldState::inv_slow(std::uint32_t a) const {
  if (a == 0) throw ValidationError("inverse of zero");
  // Invariants: r0 = s0 * a (mod modulus), r1 = s1 * a (mod modulus).
  std::vector<std::uint32_t> r0 = modulus;
  std::vector<std::uint32_t> r1 = rank_to_digits(a);
  poly_trim(r1);
  std::vector<std::uint32_t> s0{};  // zero
  std::vector<std::uint32_t> s1{1};

  auto scalar_inv_p = [this](std::uint32_t c) {
    // Fermat inverse in the prime field.
    std::uint32_t acc = 1, base = c % p, e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  };

  while (!poly_is_zero(r1)) {
    // q, rem of r0 / r1
    std::vector<std::uint32_t> rem = r0;
    std::vector<std::uint32_t> quot(rem.size(), 0);
    poly_trim(rem);
    const std::uint32_t lead_inv = scalar_inv_p(r1.back());
    while (rem.size() >= r1.size() && !poly_is_zero(rem)) {
      const std::size_t shift = rem.size() - r1.size();
      const std::uint32_t c = rem.back() * lead_inv % p;
      quot[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) {
        rem[shift + j] = (rem[shift + j] + c * (p - r1[j])) % p;
      }
      poly_trim(rem);
    }
    poly_trim(quot);
    // s_next = s0 - quot * s1
    std::vector<std::uint32_t> s_next(std::max<std::size_t>(s0.size(), quot.size() + s1.size()), 0);
    for (std::size_t t = 0; t < s0.size(); ++t) s_next[t] = s0[t];
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) {
        s_next[i + j] = (s_next[i + j] + quot[i] * (p - s1[j])) % p;
      }
    }
    poly_trim(s_next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  // r0 is now gcd = nonzero constant; inverse = s0 / r0.
  const std::uint32_t scale = scalar_inv_p(r0.empty() ? 1 : r0[0]);
  std::vector<std::uint32_t> res = poly_rem(std::move(s0), modulus, p);
  res.resize(k, 0);
  for (auto& c : res) c = c * scale % p;
  return digits_to_rank(res);
}

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::shared_ptr<const FieldState> make_field_state(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ValidationError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t t = 0; t < k; ++t) {
    q *= p;
    if (q > kFieldOrderLimit) throw ValidationError("field order exceeds 2^16");
  }

  auto st = std::make_shared<FieldState>();
  st->p = p;
  st->k = k;
  st->q = static_cast<std::uint32_t>(q);

  if (k == 1) {
    st->modulus = {0, 1};  // x
  } else {
    // Smallest-rank monic irreducible: scan x^k + g(x) by the rank of g.
    for (std::uint32_t low = 0;; ++low) {
      if (low >= st->q) throw std::logic_error("no irreducible modulus found");
      std::vector<std::uint32_t> cand = st->rank_to_digits(low);
      cand.push_back(1);
      if (poly_is_irreducible(cand, p)) {
        st->modulus = std::move(cand);
        break;
      }
    }
  }

  if (st->q <= kFieldTableLimit) {
    const std::uint32_t n = st->q;
    st->add_tab.resize(std::size_t(n) * n);
    st->mul_tab.resize(std::size_t(n) * n);
    st->neg_tab.resize(n);
    st->inv_tab.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      st->neg_tab[a] = static_cast<std::uint16_t>(st->neg_slow(a));
      for (std::uint32_t b = 0; b < n; ++b) {
        st->add_tab[a * n + b] = static_cast<std::uint16_t>(st->add_slow(a, b));
        const std::uint32_t m = st->mul_slow(a, b);
        st->mul_tab[a * n + b] = static_cast<std::uint16_t>(m);
        if (m == 1) st->inv_tab[a] = static_cast<std::uint16_t>(b);
      }
    }
    st->tabulated = true;
  }
  return st;
}

inline std::shared_ptr<const FieldState> intern_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldState>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = make_field_state(p, k);
  return slot;
}

}  // namespace detail

class FiniteField;

/// Value of GF(p^k), identified by its canonical rank.  Cheap to copy.
/// Arithmetic between elements of different fields throws ValidationError.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t rank() const noexcept { return rank_; }
  bool is_zero() const noexcept { return rank_ == 0; }
  bool is_one() const noexcept { return rank_ == 1; }

  /// k coefficients of the residue, low to high.
  std::vector<std::uint32_t> coefficients() const { return state()->rank_to_digits(rank_); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.joint(b), a.joint(b)->add(a.rank_, b.rank_));
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return FieldElement(a.joint(b), a.joint(b)->sub(a.rank_, b.rank_));
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return FieldElement(a.joint(b), a.joint(b)->mul(a.rank_, b.rank_));
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    if (b.rank_ == 0) throw ValidationError("division by zero");
    return FieldElement(a.joint(b), a.joint(b)->mul(a.rank_, b.state()->inv(b.rank_)));
  }
  FieldElement operator-() const { return FieldElement(state(), state()->neg(rank_)); }

  FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
  FieldElement& operator-=(FieldElement b) { return *this = *this - b; }
  FieldElement& operator*=(FieldElement b) { return *this = *this * b; }

  friend FieldElement inv(FieldElement a) {
    if (a.rank_ == 0) throw ValidationError("inverse of zero");
    return FieldElement(a.state(), a.state()->inv(a.rank_));
  }

  /// a^e with the convention a^0 = 1 (including 0^0 = 1).
  friend FieldElement pow(FieldElement a, std::uint64_t e) {
    return FieldElement(a.state(), a.state()->pow(a.rank_, e));
  }

  /// Elements of distinct fields are never equal.
  friend bool operator==(FieldElement a, FieldElement b) noexcept {
    return a.st_ == b.st_ && a.rank_ == b.rank_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) noexcept { return !(a == b); }
  /// Rank order; meaningful within one field.
  friend bool operator<(FieldElement a, FieldElement b) noexcept { return a.rank_ < b.rank_; }

  friend std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.rank_; }

  bool same_field(FieldElement other) const noexcept { return st_ == other.st_; }

 private:
  friend class FiniteField;
  FieldElement(const detail::FieldState* st, std::uint32_t rank) : st_(st), rank_(rank) {}

  const detail::FieldState* state() const {
    if (!st_) throw ValidationError("use of default-constructed field element");
    return st_;
  }
  const detail::FieldState* joint(FieldElement b) const {
    if (st_ != b.st_ || !st_) throw ValidationError("elements belong to different fields");
    return st_;
  }

  const detail::FieldState* st_ = nullptr;
  std::uint32_t rank_ = 0;
};

/// GF(p^k).  Immutable; copies share state.  The scope bound is p^k <= 2^16.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, std::uint32_t k = 1) : st_(detail::intern_field(p, k)) {}

  std::uint32_t characteristic() const noexcept { return st_->p; }
  std::uint32_t degree() const noexcept { return st_->k; }
  std::uint32_t order() const noexcept { return st_->q; }

  /// Modulus coefficients, low to high (k+1 entries, monic).
  const std::vector<std::uint32_t>& modulus() const noexcept { return st_->modulus; }

  FieldElement zero() const noexcept { return FieldElement(st_.get(), 0); }
  FieldElement one() const noexcept { return FieldElement(st_.get(), 1); }

  FieldElement element(std::uint32_t rank) const {
    if (rank >= st_->q)
      throw ValidationError("rank " + std::to_string(rank) + " out of range for field of order " +
                            std::to_string(st_->q));
    return FieldElement(st_.get(), rank);
  }

  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > st_->k) throw ValidationError("too many coefficients for this field");
    std::uint32_t r = 0;
    for (std::size_t t = coeffs.size(); t-- > 0;) {
      if (coeffs[t] >= st_->p) throw ValidationError("coefficient not reduced modulo p");
      r = r * st_->p + coeffs[t];
    }
    return FieldElement(st_.get(), r);
  }

  /// All q elements in increasing rank: 0, 1, ...
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(st_->q);
    for (std::uint32_t r = 0; r < st_->q; ++r) out.emplace_back(FieldElement(st_.get(), r));
    return out;
  }

  bool contains(FieldElement e) const noexcept { return e.same_field(zero()); }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.st_ == b.st_;
  }
  friend bool operator!=(const FiniteField& a, const FiniteField& b) noexcept {
    return !(a == b);
  }

 private:
  std::shared_ptr<const detail::FieldState> st_;
};

}  // namespace lrc

#endif  // LRC_FIELD_HPP
