#pragma once

// Brackets [a_1, ..., a_k]: the epsilon-class of the staircase
// St(a_1, ..., a_k, a_k, ..., a_1). Every bracket is positive in the ordered
// group. This header holds the rewrite rules that combine two brackets into
// their concatenation and the ordering rules that certify x << y.

#include "knotconc/certificate.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

class Bracket {
public:
  Bracket() = default;
  Bracket(std::initializer_list<std::int64_t> entries) : a_(entries) { validate(); }
  explicit Bracket(std::vector<std::int64_t> entries) : a_(std::move(entries)) { validate(); }

  const std::vector<std::int64_t>& entries() const { return a_; }
  std::size_t size() const { return a_.size(); }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }

  Bracket concat(const Bracket& other) const {
    std::vector<std::int64_t> out = a_;
    out.insert(out.end(), other.a_.begin(), other.a_.end());
    return Bracket(std::move(out));
  }

  /// Entries [from, to) as a bracket.
  Bracket slice(std::size_t from, std::size_t to) const {
    return Bracket(std::vector<std::int64_t>(a_.begin() + static_cast<std::ptrdiff_t>(from),
                                             a_.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  auto operator<=>(const Bracket&) const = default;

  Json to_json() const { return Json(a_); }

  static Bracket from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("bracket must be a JSON array");
    std::vector<std::int64_t> v;
    for (const auto& e : j) {
      if (!e.is_number_integer()) throw std::invalid_argument("bracket entries must be integers");
      v.push_back(e.get<std::int64_t>());
    }
    return Bracket(std::move(v));
  }

  /// "[1,2,1,7]"; with abbreviate, runs of two or more (1,a) pairs print as "(1,a)^k".
  std::string render(bool abbreviate = true) const {
    std::string out = "[";
    std::size_t i = 0;
    bool first = true;
    auto emit = [&](const std::string& s) {
      if (!first) out += ",";
      out += s;
      first = false;
    };
    while (i < a_.size()) {
      if (abbreviate && a_[i] == 1 && i + 1 < a_.size()) {
        const std::int64_t a = a_[i + 1];
        std::size_t k = 0;
        while (i + 2 * k + 1 < a_.size() && a_[i + 2 * k] == 1 && a_[i + 2 * k + 1] == a) ++k;
        if (k >= 2) {
          emit("(1," + std::to_string(a) + ")^" + std::to_string(k));
          i += 2 * k;
          continue;
        }
      }
      emit(std::to_string(a_[i]));
      ++i;
    }
    return out + "]";
  }

private:
  void validate() const {
    if (a_.empty()) throw std::invalid_argument("bracket must be nonempty");
    for (auto v : a_) {
      if (v < 1) throw std::invalid_argument("bracket entries must be positive");
    }
  }

  std::vector<std::int64_t> a_;
};

/// [(1,a)^k, 1, c]. For k = 0 the letter a is unconstrained.
struct LadderForm {
  std::int64_t k = 0;
  std::optional<std::int64_t> a;
  std::int64_t c = 0;
};

inline std::optional<LadderForm> ladder_form(const Bracket& b) {
  const auto& e = b.entries();
  if (e.size() % 2 != 0) return std::nullopt;
  for (std::size_t i = 0; i < e.size(); i += 2) {
    if (e[i] != 1) return std::nullopt;
  }
  LadderForm f;
  f.k = static_cast<std::int64_t>(e.size() / 2) - 1;
  f.c = e.back();
  if (f.k > 0) {
    f.a = e[1];
    for (std::size_t i = 1; i + 1 < e.size(); i += 2) {
      if (e[i] != *f.a) return std::nullopt;
    }
  }
  return f;
}

inline Bracket make_ladder(std::int64_t a, std::int64_t k, std::int64_t c) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 0; i < k; ++i) {
    v.push_back(1);
    v.push_back(a);
  }
  v.push_back(1);
  v.push_back(c);
  return Bracket(std::move(v));
}

namespace detail {

inline Json bracket_list_json(const std::vector<Bracket>& bs) {
  Json out = Json::array();
  for (const auto& b : bs) out.push_back(b.to_json());
  return out;
}

inline Certificate atom_certificate(const Bracket& b) {
  Certificate c;
  c.rule = rule::kAtom;
  c.conclusion = {{"bracket", b.to_json()}, {"atoms", Json::array({b.to_json()})}};
  return c;
}

/// Interval rule: [a_1..a_m] + [b_1..b_n] = [a.., b..] when m is even and
/// max{odd-position a} <= b_j <= min{even-position a} for every j.
inline std::optional<Json> concat_interval_witness(const Bracket& left, const Bracket& right) {
  const auto& a = left.entries();
  if (a.size() % 2 != 0) return std::nullopt;
  std::int64_t max_odd = 0;
  std::int64_t min_even = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % 2 == 0) {
      max_odd = std::max(max_odd, a[i]);
    } else {
      min_even = std::min(min_even, a[i]);
    }
  }
  for (auto v : right.entries()) {
    if (v < max_odd || v > min_even) return std::nullopt;
  }
  return Json{{"left", left.to_json()}, {"right", right.to_json()}, {"max_odd", max_odd}, {"min_even", min_even}};
}

/// Ladder rule: [(1,a)^m,1,b] + [(1,a)^{n_1},1,c_1,...,(1,a)^{n_k},1,c_k] is the
/// concatenation when a <= c_j <= b and m <= min n_j (k >= 1). Only m >= 1 is
/// attempted; for m = 0 the interval rule already covers every case.
inline std::optional<Json> concat_ladder_witness(const Bracket& left, const Bracket& right) {
  const auto lf = ladder_form(left);
  if (!lf || lf->k == 0) return std::nullopt;
  const std::int64_t a = *lf->a;
  const std::int64_t b = lf->c;
  const auto& e = right.entries();
  if (e.size() % 2 != 0) return std::nullopt;
  for (std::size_t i = 0; i < e.size(); i += 2) {
    if (e[i] != 1) return std::nullopt;
  }
  // Every even-position value other than a must close a group; the last one
  // always does. Absorbing all a's into the following group maximizes min n_j.
  Json groups = Json::array();
  std::int64_t run = 0;
  std::int64_t min_n = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i < e.size(); i += 2) {
    const std::int64_t v = e[i];
    if (v < a || v > b) return std::nullopt;
    if (v != a || i + 1 == e.size()) {
      groups.push_back(Json::array({run, v}));
      min_n = std::min(min_n, run);
      run = 0;
    } else {
      ++run;
    }
  }
  if (lf->k > min_n) return std::nullopt;
  return Json{{"left", left.to_json()}, {"right", right.to_json()}, {"a", a}, {"b", b}, {"m", lf->k}, {"groups", groups}};
}

}  // namespace detail

/// Result of combining two brackets: the concatenation plus a one-step
/// certificate whose children are ATOM leaves for the two summands.
struct Concatenation {
  Bracket sum;
  Certificate certificate;
};

/// left + right as a single bracket when a concatenation rule applies
/// (interval rule first, then the ladder rule); nullopt means "inapplicable".
inline std::optional<Concatenation> concat_sum(const Bracket& left, const Bracket& right) {
  Certificate c;
  if (auto w = detail::concat_interval_witness(left, right)) {
    c.rule = rule::kConcat;
    c.inputs = std::move(*w);
  } else if (auto w2 = detail::concat_ladder_witness(left, right)) {
    c.rule = rule::kConcatLadder;
    c.inputs = std::move(*w2);
  } else {
    return std::nullopt;
  }
  const Bracket sum = left.concat(right);
  c.conclusion = {{"bracket", sum.to_json()}, {"atoms", detail::bracket_list_json({left, right})}};
  c.children = {detail::atom_certificate(left), detail::atom_certificate(right)};
  return Concatenation{sum, std::move(c)};
}

/// Certificate that lesser << greater, if one of the ordering rules fires:
///   LEAD-GT       first entries a_1 > b_1
///   SECOND-LT     a_1 = b_1 and a_2 < b_2
///   LADDER-ORDER  [(1,a)^n,1,c] << [(1,a)^m,1,b] when a < b, a <= c, m < n,
///                 or a <= c < b, m = n
inline std::optional<Certificate> prove_dominated(const Bracket& lesser, const Bracket& greater) {
  Certificate c;
  c.conclusion = {{"lesser", lesser.to_json()}, {"greater", greater.to_json()}};
  if (lesser[0] > greater[0]) {
    c.rule = rule::kLeadGt;
    c.inputs = {{"lesser_first", lesser[0]}, {"greater_first", greater[0]}};
    return c;
  }
  if (lesser.size() >= 2 && greater.size() >= 2 && lesser[0] == greater[0] && lesser[1] < greater[1]) {
    c.rule = rule::kSecondLt;
    c.inputs = {{"first", lesser[0]}, {"lesser_second", lesser[1]}, {"greater_second", greater[1]}};
    return c;
  }
  const auto x = ladder_form(lesser);
  const auto y = ladder_form(greater);
  if (x && y) {
    if (x->a && y->a && *x->a != *y->a) return std::nullopt;
    const std::int64_t a = x->a ? *x->a : (y->a ? *y->a : 1);
    const std::int64_t n = x->k, cc = x->c, m = y->k, b = y->c;
    if ((a < b && a <= cc && m < n) || (a <= cc && cc < b && m == n)) {
      c.rule = rule::kLadderOrder;
      c.inputs = {{"a", a}, {"n", n}, {"c", cc}, {"m", m}, {"b", b}};
      return c;
    }
  }
  return std::nullopt;
}

struct Comparison {
  enum class Relation { kLess, kGreater, kEqual, kUnknown };
  Relation relation = Relation::kUnknown;
  std::optional<Certificate> certificate;  // present for kLess / kGreater
};

/// kLess means a << b, kGreater means b << a. Never guesses: kUnknown when no
/// rule fires in either direction.
inline Comparison compare(const Bracket& a, const Bracket& b) {
  if (a == b) return {Comparison::Relation::kEqual, std::nullopt};
  auto ab = prove_dominated(a, b);
  auto ba = prove_dominated(b, a);
  if (ab && ba) {
    throw std::logic_error("ordering rules contradict each other on " + a.render(false) + " and " +
                           b.render(false));
  }
  if (ab) return {Comparison::Relation::kLess, std::move(ab)};
  if (ba) return {Comparison::Relation::kGreater, std::move(ba)};
  return {};
}

inline std::string to_string(Comparison::Relation r) {
  switch (r) {
    case Comparison::Relation::kLess: return "<<";
    case Comparison::Relation::kGreater: return ">>";
    case Comparison::Relation::kEqual: return "=";
    default: return "unknown";
  }
}

}  // namespace knotconc
