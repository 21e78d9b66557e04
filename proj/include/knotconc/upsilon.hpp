#pragma once

#include "knotconc/check_result.hpp"
#include "knotconc/knot_expr.hpp"
#include "knotconc/pl_function.hpp"
#include "knotconc/staircase.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

/// Upsilon(t) = -2 min over even generators (A,B) of (t/2)A + (1 - t/2)B.
///
/// Each generator contributes the line B + t(A - B)/2. The minimum is swept
/// left to right: at each breakpoint the active line hands over to the
/// flatter line whose crossing comes first (ties go to the flattest).
inline PLFunction upsilon_staircase(const StaircaseParams& sp) {
  struct Line {
    Rational intercept;
    Rational slope;
  };
  std::vector<Line> lines;
  for (const auto& lv : even_generator_levels(sp)) {
    lines.push_back({Rational(lv.j), Rational(lv.i - lv.j, 2)});
  }

  auto better_at_zero = [](const Line& a, const Line& b) {
    return a.intercept < b.intercept || (a.intercept == b.intercept && a.slope < b.slope);
  };
  std::size_t cur = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (better_at_zero(lines[k], lines[cur])) cur = k;
  }

  const Rational two(2);
  std::vector<PLFunction::Point> pts;
  Rational t(0);
  pts.push_back({t, -2 * lines[cur].intercept});
  for (;;) {
    std::optional<std::size_t> next;
    Rational next_t;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (!(lines[k].slope < lines[cur].slope)) continue;
      const Rational cross =
          (lines[k].intercept - lines[cur].intercept) / (lines[cur].slope - lines[k].slope);
      if (!(cross > t)) continue;
      if (!next || cross < next_t || (cross == next_t && lines[k].slope < lines[*next].slope)) {
        next = k;
        next_t = cross;
      }
    }
    if (!next || next_t >= two) break;
    t = next_t;
    cur = *next;
    pts.push_back({t, -2 * (lines[cur].intercept + lines[cur].slope * t)});
  }
  pts.push_back({two, -2 * (lines[cur].intercept + lines[cur].slope * two)});
  return PLFunction::from_points(std::move(pts));
}

inline PLFunction upsilon_of(const TorusKnot& k) {
  if (k.is_unknot()) return PLFunction();
  return upsilon_staircase(staircase_of(k));
}

/// Coefficient-weighted sum over the formula's terms.
inline PLFunction upsilon_of(const KnotFormula& f) {
  PLFunction sum;
  for (const auto& [k, c] : f.terms()) sum += pl_scale(upsilon_of(k), c);
  return sum;
}

namespace detail {

inline PLFunction upsilon_pq(std::int64_t p, std::int64_t q) { return upsilon_of(make_torus_knot(p, q)); }

inline CheckResult compare_pl(const PLFunction& lhs, const PLFunction& rhs, const std::string& label) {
  CheckResult r;
  r.holds = lhs == rhs;
  if (r.holds) {
    r.report = label + ": equal (" + std::to_string(lhs.piece_count()) + " linear pieces)";
  } else {
    const auto t = first_discrepancy(lhs, rhs);
    r.report = label + ": differ";
    if (t) {
      r.report += " first at t=" + to_string(*t) + " (lhs " + to_string(lhs(*t)) + ", rhs " +
                  to_string(rhs(*t)) + ")";
    }
  }
  return r;
}

}  // namespace detail

/// Upsilon(T_{p,kp+r}) == Upsilon(T_{r,p}) + k Upsilon(T_{p,p+1}), exactly.
inline CheckResult check_upsilon_recursion(std::int64_t p, std::int64_t r, std::int64_t k) {
  if (p < 1 || r < 1 || k < 0 || std::gcd(p, r) != 1) {
    throw std::invalid_argument("upsilon recursion needs coprime p,r >= 1 and k >= 0");
  }
  const PLFunction lhs = detail::upsilon_pq(p, k * p + r);
  const PLFunction rhs = detail::upsilon_pq(r, p) + pl_scale(detail::upsilon_pq(p, p + 1), k);
  return detail::compare_pl(lhs, rhs,
                            "p=" + std::to_string(p) + " r=" + std::to_string(r) + " k=" + std::to_string(k));
}

/// The three shifted forms of the recursion used for the J/K families:
///   T(3n+1,3n+4) = n T(3,4) + T(3n+1,3n+2)
///   T(3n+2,3n+5) = T(2,3) + n T(3,4) + T(3n+2,3n+3)
///   T(2n+1,2n+3) = n T(2,3) + T(2n+1,2n+2)
inline CheckResult check_upsilon_shift(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("upsilon shift identities need n >= 0");
  using detail::upsilon_pq;
  const PLFunction u23 = upsilon_pq(2, 3);
  const PLFunction u34 = upsilon_pq(3, 4);
  const CheckResult a = detail::compare_pl(upsilon_pq(3 * n + 1, 3 * n + 4),
                                           pl_scale(u34, n) + upsilon_pq(3 * n + 1, 3 * n + 2),
                                           "T(3n+1,3n+4)");
  const CheckResult b = detail::compare_pl(upsilon_pq(3 * n + 2, 3 * n + 5),
                                           u23 + pl_scale(u34, n) + upsilon_pq(3 * n + 2, 3 * n + 3),
                                           "T(3n+2,3n+5)");
  const CheckResult c = detail::compare_pl(upsilon_pq(2 * n + 1, 2 * n + 3),
                                           pl_scale(u23, n) + upsilon_pq(2 * n + 1, 2 * n + 2),
                                           "T(2n+1,2n+3)");
  return {a.holds && b.holds && c.holds,
          "n=" + std::to_string(n) + "; " + a.report + "; " + b.report + "; " + c.report};
}

}  // namespace knotconc
