#pragma once

#include "knotconc/knot_expr.hpp"
#include "knotconc/semigroup.hpp"

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

/// Bifiltration level (i, j) of a staircase generator.
struct FiltrationLevel {
  std::int64_t i = 0;
  std::int64_t j = 0;
  auto operator<=>(const FiltrationLevel&) const = default;
};

struct GeneratorFiltration {
  std::size_t index = 0;
  FiltrationLevel level;
};

/// Step lengths b_1..b_{2m} of a palindromic staircase complex.
class StaircaseParams {
public:
  /// Validates positivity, even length and the palindrome condition.
  explicit StaircaseParams(std::vector<std::int64_t> steps) : b_(std::move(steps)) {
    if (b_.empty() || b_.size() % 2 != 0) {
      throw std::invalid_argument("staircase needs a nonempty even number of steps");
    }
    for (std::size_t k = 0; k < b_.size(); ++k) {
      if (b_[k] < 1) throw std::invalid_argument("staircase steps must be positive");
      if (b_[k] != b_[b_.size() - 1 - k]) throw std::invalid_argument("staircase steps must be a palindrome");
    }
    genus_ = std::accumulate(b_.begin(), b_.begin() + static_cast<std::ptrdiff_t>(half_length()),
                             std::int64_t{0});
  }

  const std::vector<std::int64_t>& steps() const { return b_; }
  std::size_t half_length() const { return b_.size() / 2; }
  std::int64_t genus() const { return genus_; }

  bool operator==(const StaircaseParams&) const = default;

private:
  std::vector<std::int64_t> b_;
  std::int64_t genus_ = 0;
};

/// Runs the semigroup induction on partial sums until the partial sum reaches
/// the genus: even steps jump to the next member, odd steps to the next gap.
inline StaircaseParams staircase_of(const TorusKnot& k) {
  if (k.is_unknot()) throw std::invalid_argument("the unknot has no staircase");
  const Semigroup s(k.p(), k.q());
  const std::int64_t g = k.genus();
  std::vector<std::int64_t> half;
  std::int64_t sum = 0;
  while (sum < g) {
    const bool even_slot = (half.size() + 1) % 2 == 0;
    std::int64_t a = 1;
    while (s.contains(sum + a) != even_slot) ++a;
    half.push_back(a);
    sum += a;
  }
  if (sum != g) {
    throw std::logic_error("staircase partial sums overshoot the genus for " + k.render());
  }
  std::vector<std::int64_t> full = half;
  full.insert(full.end(), half.rbegin(), half.rend());
  StaircaseParams sp(std::move(full));
  if (sp.genus() != g || sp.steps().front() != 1) {
    throw std::logic_error("staircase invariants violated for " + k.render());
  }
  return sp;
}

inline StaircaseParams staircase_of(std::int64_t p, std::int64_t q) {
  if (std::min(p, q) == 1) throw std::invalid_argument("the unknot has no staircase");
  return staircase_of(make_torus_knot(p, q));
}

/// Levels of x_0, x_2, ..., x_{2m}: i increases from 0 to g while j decreases from g to 0.
inline std::vector<FiltrationLevel> even_generator_levels(const StaircaseParams& sp) {
  const auto& b = sp.steps();
  const std::size_t m = sp.half_length();
  std::vector<FiltrationLevel> out;
  out.reserve(m + 1);
  std::int64_t i_coord = 0;
  std::int64_t j_coord = 0;
  for (std::size_t t = 1; t <= m; ++t) j_coord += b[2 * t - 1];
  out.push_back({i_coord, j_coord});
  for (std::size_t t = 1; t <= m; ++t) {
    i_coord += b[2 * t - 2];
    j_coord -= b[2 * t - 1];
    out.push_back({i_coord, j_coord});
  }
  return out;
}

/// All 2m+1 generators; x_{2t-1} sits at (i of x_{2t}, j of x_{2t-2}).
inline std::vector<GeneratorFiltration> generator_filtration(const StaircaseParams& sp) {
  const auto even = even_generator_levels(sp);
  std::vector<GeneratorFiltration> out;
  for (std::size_t t = 0; t < even.size(); ++t) {
    if (t > 0) out.push_back({2 * t - 1, {even[t].i, even[t - 1].j}});
    out.push_back({2 * t, even[t]});
  }
  return out;
}

inline std::vector<std::int64_t> first_half(const StaircaseParams& sp) {
  const auto& b = sp.steps();
  return {b.begin(), b.begin() + static_cast<std::ptrdiff_t>(sp.half_length())};
}

}  // namespace knotconc
