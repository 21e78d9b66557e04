#pragma once

#include "knotconc/check_result.hpp"
#include "knotconc/knot_expr.hpp"
#include "knotconc/numeric.hpp"
#include "knotconc/staircase.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace knotconc {

/// Finitely supported integer sequence (phi_j)_{j>=1}, stored sparsely.
class PhiSequence {
public:
  using Entries = std::map<std::int64_t, BigInt>;

  PhiSequence() = default;

  void add(std::int64_t j, const BigInt& v) {
    if (j < 1) throw std::invalid_argument("phi indices start at 1");
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace(j, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  BigInt operator[](std::int64_t j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  PhiSequence& operator+=(const PhiSequence& o) {
    for (const auto& [j, v] : o.entries_) add(j, v);
    return *this;
  }
  PhiSequence& operator-=(const PhiSequence& o) {
    for (const auto& [j, v] : o.entries_) add(j, -v);
    return *this;
  }
  PhiSequence& operator*=(const BigInt& c) {
    if (c == 0) entries_.clear();
    for (auto& [j, v] : entries_) v *= c;
    return *this;
  }

  friend PhiSequence operator+(PhiSequence a, const PhiSequence& b) { return a += b; }
  friend PhiSequence operator-(PhiSequence a, const PhiSequence& b) { return a -= b; }
  friend PhiSequence operator*(const BigInt& c, PhiSequence a) { return a *= c; }

  bool operator==(const PhiSequence&) const = default;

  /// "{1: 1, 2: -2}"
  std::string render() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [j, v] : entries_) {
      if (!first) out += ", ";
      out += std::to_string(j) + ": " + v.str();
      first = false;
    }
    return out + "}";
  }

  /// "(1, 0, -2)": zero-padded up to the largest support index.
  std::string render_padded() const {
    if (entries_.empty()) return "()";
    std::string out = "(";
    const std::int64_t last = entries_.rbegin()->first;
    for (std::int64_t j = 1; j <= last; ++j) {
      if (j > 1) out += ", ";
      out += (*this)[j].str();
    }
    return out + ")";
  }

private:
  Entries entries_;
};

/// phi_j counts the odd-index steps b_1, b_3, ... of length j.
inline PhiSequence phi_staircase(const StaircaseParams& sp) {
  PhiSequence out;
  const auto& b = sp.steps();
  for (std::size_t k = 0; k < b.size(); k += 2) out.add(b[k], 1);
  return out;
}

inline PhiSequence phi_of(const TorusKnot& k) {
  if (k.is_unknot()) return {};
  return phi_staircase(staircase_of(k));
}

inline PhiSequence phi_of(const KnotFormula& f) {
  PhiSequence sum;
  for (const auto& [k, c] : f.terms()) sum += c * phi_of(k);
  return sum;
}

namespace detail {

inline PhiSequence phi_pq(std::int64_t p, std::int64_t q) { return phi_of(make_torus_knot(p, q)); }

inline CheckResult compare_phi(const PhiSequence& lhs, const PhiSequence& rhs, const std::string& label) {
  if (lhs == rhs) return {true, label + ": equal " + lhs.render()};
  return {false, label + ": lhs " + lhs.render() + " != rhs " + rhs.render()};
}

}  // namespace detail

/// phi(T_{p,kp+r}) == (k+1)phi(T_{r,p}) + k phi(T_{p-r,p}) + k(phi(T_{p,p+1}) - phi(T_{p-1,p})).
inline CheckResult check_phi_recursion(std::int64_t p, std::int64_t r, std::int64_t k) {
  if (r < 1 || r >= p || k < 0 || std::gcd(p, r) != 1) {
    throw std::invalid_argument("phi recursion needs coprime 1 <= r < p and k >= 0");
  }
  using detail::phi_pq;
  const PhiSequence lhs = phi_pq(p, k * p + r);
  const PhiSequence rhs = BigInt(k + 1) * phi_pq(r, p) + BigInt(k) * phi_pq(p - r, p) +
                          BigInt(k) * (phi_pq(p, p + 1) - phi_pq(p - 1, p));
  return detail::compare_phi(lhs, rhs,
                             "p=" + std::to_string(p) + " r=" + std::to_string(r) + " k=" + std::to_string(k));
}

/// Shifted forms of the phi recursion for the J/K families; n > 0.
inline CheckResult check_phi_shift(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("phi shift identities require n > 0");
  using detail::phi_pq;
  const PhiSequence f23 = phi_pq(2, 3);
  const PhiSequence f34 = phi_pq(3, 4);
  const BigInt two_n = 2 * n;
  const CheckResult a = detail::compare_phi(
      phi_pq(3 * n + 1, 3 * n + 4),
      two_n * f34 + phi_pq(3 * n - 2, 3 * n + 1) + phi_pq(3 * n + 1, 3 * n + 2) - phi_pq(3 * n, 3 * n + 1),
      "T(3n+1,3n+4)");
  const CheckResult b = detail::compare_phi(
      phi_pq(3 * n + 2, 3 * n + 5),
      BigInt(2) * f23 + two_n * f34 + phi_pq(3 * n - 1, 3 * n + 2) + phi_pq(3 * n + 2, 3 * n + 3) -
          phi_pq(3 * n + 1, 3 * n + 2),
      "T(3n+2,3n+5)");
  const CheckResult c = detail::compare_phi(
      phi_pq(2 * n + 1, 2 * n + 3),
      two_n * f23 + phi_pq(2 * n - 1, 2 * n + 1) + phi_pq(2 * n + 1, 2 * n + 2) - phi_pq(2 * n, 2 * n + 1),
      "T(2n+1,2n+3)");
  return {a.holds && b.holds && c.holds,
          "n=" + std::to_string(n) + "; " + a.report + "; " + b.report + "; " + c.report};
}

}  // namespace knotconc
