#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

/// The numerical semigroup <p,q> = {ap + bq : a,b >= 0} of T_{p,q}.
class Semigroup {
public:
  Semigroup(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
      throw std::invalid_argument("semigroup generators must be coprime positive integers, got <" +
                                  std::to_string(p) + "," + std::to_string(q) + ">");
    }
    if (p_ > q_) std::swap(p_, q_);
    q_inv_mod_p_ = inverse_mod(q_ % p_, p_);
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  /// Every integer >= (p-1)(q-1) lies in the semigroup.
  std::int64_t conductor() const { return (p_ - 1) * (q_ - 1); }

  /// x = ap + bq has a unique candidate b in [0,p) with bq = x (mod p);
  /// x is a member iff that b satisfies bq <= x.
  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (p_ == 1) return true;
    const std::int64_t b = ((x % p_) * q_inv_mod_p_) % p_;
    return b * q_ <= x;
  }

  /// Members of [0, bound], increasing.
  std::vector<std::int64_t> initial_segment(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x <= bound; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

private:
  static std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::int64_t tmp = old_r - quot * r;
      old_r = r;
      r = tmp;
      tmp = old_s - quot * s;
      old_s = s;
      s = tmp;
    }
    return ((old_s % m) + m) % m;
  }

  std::int64_t p_;
  std::int64_t q_;
  std::int64_t q_inv_mod_p_ = 0;
};

inline bool contains(const Semigroup& s, std::int64_t x) { return s.contains(x); }

inline std::vector<std::int64_t> initial_segment(const Semigroup& s, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("initial_segment bound must be nonnegative");
  return s.initial_segment(bound);
}

namespace detail {

/// Members of [lo, hi] by enumerating ap + bq directly.
inline std::vector<std::int64_t> enumerate_members(std::int64_t p, std::int64_t q, std::int64_t lo,
                                                   std::int64_t hi) {
  std::vector<char> hit(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t a = 0; a * p <= hi; ++a) {
    for (std::int64_t b = 0; a * p + b * q <= hi; ++b) {
      const std::int64_t x = a * p + b * q;
      if (x >= lo) hit[static_cast<std::size_t>(x - lo)] = 1;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (hit[static_cast<std::size_t>(x - lo)]) out.push_back(x);
  }
  return out;
}

}  // namespace detail

struct Window {
  std::vector<std::int64_t> members;  // increasing
  bool verified = false;              // closed form agrees with enumeration
};

/// <p, p+r> ∩ [lp, (l+1)p] = {lp, lp+r, ..., lp+lr, (l+1)p} for 0 <= l <= floor(p/r).
inline Window window(const Semigroup& s, std::int64_t l) {
  const std::int64_t p = s.p();
  const std::int64_t r = s.q() - p;
  if (r < 1 || r >= p) {
    throw std::invalid_argument("window needs q = p + r with 0 < r < p, got <" + std::to_string(p) +
                                "," + std::to_string(s.q()) + ">");
  }
  if (l < 0 || l > p / r) {
    throw std::invalid_argument("window index l=" + std::to_string(l) + " outside [0," +
                                std::to_string(p / r) + "]");
  }
  Window w;
  for (std::int64_t j = 0; j <= l; ++j) w.members.push_back(l * p + j * r);
  if (w.members.back() != (l + 1) * p) w.members.push_back((l + 1) * p);
  w.verified = w.members == detail::enumerate_members(p, s.q(), l * p, (l + 1) * p);
  return w;
}

}  // namespace knotconc
