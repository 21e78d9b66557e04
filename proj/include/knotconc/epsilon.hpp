#pragma once

// Certified calculus on epsilon-classes of sums of torus knots.
//
// A knot formula maps to a formal sum of bracket atoms. Every rewrite and every
// ordering claim carries a certificate; when no rule applies the procedures
// report "inapplicable", "unknown" or "undecided" rather than guessing.

#include "knotconc/bracket.hpp"
#include "knotconc/certificate.hpp"
#include "knotconc/knot_expr.hpp"
#include "knotconc/staircase.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotconc {

/// First half of the staircase of T(p,q) as a bracket.
inline Bracket bracket_of(std::int64_t p, std::int64_t q) {
  return Bracket(first_half(staircase_of(p, q)));
}

/// Finite formal sum of brackets with nonzero integer coefficients.
class ClassExpr {
public:
  using Terms = std::map<Bracket, BigInt>;

  void add(const Bracket& b, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Bracket& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  ClassExpr& operator+=(const ClassExpr& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  ClassExpr& operator-=(const ClassExpr& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
  friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
  friend ClassExpr operator-(ClassExpr a) {
    for (auto& [b, c] : a.terms_) c = -c;
    return a;
  }
  bool operator==(const ClassExpr&) const = default;

  /// "[1,2,1,7] - [1,4] + 2*[2]", or "0".
  std::string render(bool abbreviate = true) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [b, c] = *it;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += mag.str() + "*";
      out += b.render(abbreviate);
      first = false;
    }
    return out;
  }

  /// [[bracket, coeff], ...] in ascending bracket order.
  Json to_json() const {
    Json out = Json::array();
    for (const auto& [b, c] : terms_) out.push_back(Json::array({b.to_json(), bigint_to_json(c)}));
    return out;
  }

private:
  Terms terms_;
};

/// A bracket written as an ordered list of atoms, with its certificate.
struct Decomposition {
  std::vector<Bracket> atoms;
  Certificate certificate;
};

namespace detail {

/// Brackets the splitter never breaks up: ladders [(1,a)^k,1,c] with c >= a,
/// and "lumps" whose first two entries already place them in the order.
inline bool is_coarse_atom(const Bracket& b) {
  if (const auto lf = ladder_form(b)) {
    if (lf->k == 0 || lf->c >= *lf->a) return true;
  }
  return b.size() == 1 || b[0] >= 2 || (b[0] == 1 && b[1] == 1);
}

inline Decomposition join(const Bracket& whole, Concatenation&& step, Decomposition left, Decomposition right) {
  Decomposition d;
  d.atoms = std::move(left.atoms);
  d.atoms.insert(d.atoms.end(), right.atoms.begin(), right.atoms.end());
  d.certificate = std::move(step.certificate);
  d.certificate.conclusion = {{"bracket", whole.to_json()}, {"atoms", bracket_list_json(d.atoms)}};
  d.certificate.children = {std::move(left.certificate), std::move(right.certificate)};
  return d;
}

inline Decomposition atom_decomposition(const Bracket& b) { return {{b}, atom_certificate(b)}; }

inline Decomposition t25_decomposition() {
  Certificate c;
  c.rule = rule::kT25;
  c.conclusion = {{"bracket", Json::array({1, 1})}, {"atoms", Json::array({Json::array({1}), Json::array({1})})}};
  return {{Bracket{1}, Bracket{1}}, std::move(c)};
}

}  // namespace detail

/// Splits a bracket into a sum of atoms, each join certified by a
/// concatenation rule. Atoms are left intact; otherwise the largest certified
/// atom suffix is peeled off, falling back to the shortest certified prefix.
inline Decomposition split(const Bracket& b) {
  if (detail::is_coarse_atom(b)) return detail::atom_decomposition(b);
  for (std::size_t k = 2; k < b.size(); k += 2) {
    const Bracket suffix = b.slice(k, b.size());
    if (!detail::is_coarse_atom(suffix)) continue;
    const Bracket prefix = b.slice(0, k);
    if (auto step = concat_sum(prefix, suffix)) {
      return detail::join(b, std::move(*step), split(prefix), detail::atom_decomposition(suffix));
    }
  }
  for (std::size_t k = 2; k < b.size(); k += 2) {
    const Bracket prefix = b.slice(0, k);
    const Bracket suffix = b.slice(k, b.size());
    if (auto step = concat_sum(prefix, suffix)) {
      return detail::join(b, std::move(*step), split(prefix), split(suffix));
    }
  }
  return detail::atom_decomposition(b);
}

/// Finest available split: shortest certified prefix at every level, then
/// [1,1] = [1] + [1]. Used only when deciding whether a class vanishes.
inline Decomposition fine_split(const Bracket& b) {
  for (std::size_t k = 2; k < b.size(); k += 2) {
    const Bracket prefix = b.slice(0, k);
    const Bracket suffix = b.slice(k, b.size());
    if (auto step = concat_sum(prefix, suffix)) {
      return detail::join(b, std::move(*step), fine_split(prefix), fine_split(suffix));
    }
  }
  if (b == Bracket{1, 1}) return detail::t25_decomposition();
  return detail::atom_decomposition(b);
}

struct ClassResult {
  ClassExpr expr;
  Certificate certificate;
};

/// Splits every term and cancels identical atoms; no refinement.
inline ClassResult atom_class(const KnotFormula& f) {
  ClassResult r;
  r.certificate.rule = rule::kCancel;
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    const Bracket b = bracket_of(k.p(), k.q());
    Decomposition d = split(b);
    for (const auto& a : d.atoms) r.expr.add(a, c);
    terms.push_back(Json::array({k.p(), k.q(), bigint_to_json(c)}));
    Certificate st;
    st.rule = rule::kStaircase;
    st.inputs = {{"p", k.p()}, {"q", k.q()}};
    st.conclusion = {{"bracket", b.to_json()}, {"atoms", detail::bracket_list_json(d.atoms)}};
    st.children.push_back(std::move(d.certificate));
    r.certificate.children.push_back(std::move(st));
  }
  r.certificate.inputs = {{"formula", f.render()}, {"terms", terms}};
  r.certificate.conclusion = {{"class", r.expr.to_json()}};
  return r;
}

/// The class of a formula. When the coarse atoms do not cancel, every atom is
/// refined; if the refinement cancels to zero that certified zero is returned,
/// otherwise the coarse form.
inline ClassResult class_of(const KnotFormula& f) {
  ClassResult coarse = atom_class(f);
  if (coarse.expr.is_zero()) return coarse;
  ClassResult fine;
  fine.certificate.rule = rule::kRefine;
  std::vector<Certificate> parts;
  for (const auto& [b, c] : coarse.expr.terms()) {
    Decomposition d = fine_split(b);
    for (const auto& a : d.atoms) fine.expr.add(a, c);
    parts.push_back(std::move(d.certificate));
  }
  if (!fine.expr.is_zero()) return coarse;
  fine.certificate.conclusion = {{"class", fine.expr.to_json()}};
  fine.certificate.children.push_back(std::move(coarse.certificate));
  for (auto& p : parts) fine.certificate.children.push_back(std::move(p));
  return fine;
}

/// A class taken as given (no derivation), e.g. one typed in by hand.
inline ClassResult given_class(ClassExpr e) {
  ClassResult r;
  r.certificate.rule = rule::kGiven;
  r.certificate.conclusion = {{"class", e.to_json()}};
  r.expr = std::move(e);
  return r;
}

struct DominantForm {
  Bracket leader;
  BigInt coefficient;
  bool certified = false;
  /// When not certified: a (term, leader) pair the ordering rules cannot decide.
  std::optional<std::pair<Bracket, Bracket>> unresolved;
  Certificate certificate;

  int sign() const { return coefficient.sign(); }
};

/// Writes e = c*L + O with every other atom x satisfying x << L, so |O| << L
/// and the sign of e is the sign of c.
inline DominantForm dominant_form(const ClassResult& cls) {
  const auto& terms = cls.expr.terms();
  if (terms.empty()) throw std::invalid_argument("dominant_form needs a nonzero class");

  std::optional<Bracket> best;
  std::size_t best_wins = 0;
  std::optional<std::pair<Bracket, Bracket>> best_gap;
  for (const auto& [cand, cc] : terms) {
    std::size_t wins = 0;
    std::optional<std::pair<Bracket, Bracket>> gap;
    for (const auto& [x, xc] : terms) {
      if (x == cand) continue;
      if (compare(x, cand).relation == Comparison::Relation::kLess) {
        ++wins;
      } else if (!gap) {
        gap = std::make_pair(x, cand);
      }
    }
    if (!best || wins > best_wins) {
      best = cand;
      best_wins = wins;
      best_gap = gap;
    }
  }

  DominantForm out;
  out.leader = *best;
  out.coefficient = terms.at(*best);
  if (best_wins + 1 != terms.size()) {
    out.unresolved = best_gap;
    return out;
  }
  out.certified = true;
  Certificate& c = out.certificate;
  c.rule = rule::kSumDom;
  c.inputs = {{"leader", out.leader.to_json()}, {"coefficient", bigint_to_json(out.coefficient)}};
  c.conclusion = {{"leader", out.leader.to_json()}, {"sign", out.sign()}};
  c.children.push_back(cls.certificate);
  for (const auto& [x, xc] : terms) {
    if (x == out.leader) continue;
    Certificate s;
    s.rule = rule::kScaleDom;
    s.inputs = {{"coefficient", bigint_to_json(xc)}};
    s.conclusion = {{"lesser", x.to_json()}, {"greater", out.leader.to_json()}};
    s.children.push_back(*compare(x, out.leader).certificate);
    c.children.push_back(std::move(s));
  }
  return out;
}

inline DominantForm dominant_form(const ClassExpr& e) { return dominant_form(given_class(e)); }

struct EpsilonResult {
  enum class Sign { kNegative, kZero, kPositive, kUndecided };
  Sign sign = Sign::kUndecided;
  ClassResult cls;
  std::optional<DominantForm> dominant;
  std::optional<Certificate> certificate;  // absent when undecided
};

inline std::string to_string(EpsilonResult::Sign s) {
  switch (s) {
    case EpsilonResult::Sign::kNegative: return "-1";
    case EpsilonResult::Sign::kZero: return "0";
    case EpsilonResult::Sign::kPositive: return "+1";
    default: return "undecided";
  }
}

inline EpsilonResult epsilon_sign(const KnotFormula& f) {
  EpsilonResult r;
  r.cls = class_of(f);
  if (r.cls.expr.is_zero()) {
    r.sign = EpsilonResult::Sign::kZero;
    Certificate z;
    z.rule = rule::kZero;
    z.conclusion = {{"sign", 0}};
    z.children.push_back(r.cls.certificate);
    r.certificate = std::move(z);
    return r;
  }
  r.dominant = dominant_form(r.cls);
  if (r.dominant->certified) {
    r.sign = r.dominant->sign() > 0 ? EpsilonResult::Sign::kPositive : EpsilonResult::Sign::kNegative;
    r.certificate = r.dominant->certificate;
  }
  return r;
}

/// Certifies that W(n_1) << W(n_2) << ... for ascending distinct n_i >= 1,
/// which makes the classes linearly independent. Throws std::runtime_error
/// naming the comparison that could not be certified.
inline Certificate independence_certify(const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw std::invalid_argument("independence_certify needs at least one index");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("family indices must be >= 1");
    if (i > 0 && ns[i] <= ns[i - 1]) throw std::invalid_argument("family indices must be strictly ascending");
  }
  Certificate chain;
  chain.rule = rule::kChain;
  chain.inputs = {{"ns", ns}};
  chain.conclusion = {{"independent", ns}};

  std::vector<ClassResult> classes;
  std::vector<DominantForm> forms;
  for (auto n : ns) {
    classes.push_back(class_of(family_W(n)));
    forms.push_back(dominant_form(classes.back()));
    const auto& d = forms.back();
    if (!d.certified || d.sign() <= 0) {
      std::string why = "W(" + std::to_string(n) + ") has no certified positive leader";
      if (d.unresolved) {
        why += ": cannot order " + d.unresolved->first.render() + " against " + d.unresolved->second.render();
      }
      throw std::runtime_error(why);
    }
    chain.children.push_back(d.certificate);
  }
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    const Bracket& lead = forms[i + 1].leader;
    Certificate step;
    step.rule = rule::kStepDom;
    step.inputs = {{"lower", ns[i]}, {"upper", ns[i + 1]}, {"leader", lead.to_json()}};
    step.conclusion = {{"lesser", family_W(ns[i]).render()}, {"greater", family_W(ns[i + 1]).render()}};
    for (const auto& [x, xc] : classes[i].expr.terms()) {
      const Comparison cmp = compare(x, lead);
      if (cmp.relation != Comparison::Relation::kLess) {
        throw std::runtime_error("cannot certify " + x.render() + " << " + lead.render() + " (W(" +
                                 std::to_string(ns[i]) + ") against W(" + std::to_string(ns[i + 1]) + "))");
      }
      step.children.push_back(*cmp.certificate);
    }
    chain.children.push_back(std::move(step));
  }
  return chain;
}

/// The three head decompositions of T(m,m+d):
///   d = 3: [1,m-1] + [1,2,1,m-4] + O, 0 <= O << [1,2,1,m-4]   (m >= 7, 3 does not divide m)
///   d = 2: [1,m-1] + O,               0 <  O << [1,2,1,3]     (m >= 5 odd)
///   d = 1: [1,m-1] + O,               0 <= O << [1,2,1,3]     (m >= 3)
enum class HeadFamily { kPlus3, kPlus2, kPlus1 };

inline std::int64_t head_offset(HeadFamily f) {
  return f == HeadFamily::kPlus3 ? 3 : f == HeadFamily::kPlus2 ? 2 : 1;
}

inline std::string to_string(HeadFamily f) { return "m+" + std::to_string(head_offset(f)); }

struct HeadCheck {
  bool holds = false;
  std::string report;
  ClassResult cls;
  std::optional<Certificate> certificate;
};

inline HeadCheck check_head_decomposition(HeadFamily family, std::int64_t m) {
  switch (family) {
    case HeadFamily::kPlus3:
      if (m < 7 || m % 3 == 0) throw std::invalid_argument("T(m,m+3) head decomposition needs m >= 7 and 3 not dividing m");
      break;
    case HeadFamily::kPlus2:
      if (m < 5 || m % 2 == 0) throw std::invalid_argument("T(m,m+2) head decomposition needs odd m >= 5");
      break;
    case HeadFamily::kPlus1:
      if (m < 3) throw std::invalid_argument("T(m,m+1) head decomposition needs m >= 3");
      break;
  }
  std::vector<Bracket> heads{Bracket{1, m - 1}};
  Bracket bound = make_ladder(2, 1, 3);
  if (family == HeadFamily::kPlus3) {
    bound = make_ladder(2, 1, m - 4);
    heads.push_back(bound);
  }
  const bool strict = family == HeadFamily::kPlus2;
  const std::string label = "T(" + std::to_string(m) + "," + std::to_string(m + head_offset(family)) + ")";

  HeadCheck out;
  KnotFormula f;
  f.add(make_torus_knot(m, m + head_offset(family)), 1);
  out.cls = class_of(f);
  const auto& terms = out.cls.expr.terms();
  for (const auto& h : heads) {
    if (out.cls.expr.coefficient(h) != 1) {
      out.report = label + ": head " + h.render() + " has coefficient " + out.cls.expr.coefficient(h).str();
      return out;
    }
  }
  Certificate c;
  c.rule = rule::kHead;
  c.inputs = {{"family", head_offset(family)},
              {"m", m},
              {"heads", detail::bracket_list_json(heads)},
              {"bound", bound.to_json()},
              {"strict", strict}};
  c.conclusion = {{"holds", true}};
  c.children.push_back(out.cls.certificate);
  std::size_t rest = 0;
  for (const auto& [x, xc] : terms) {
    if (std::find(heads.begin(), heads.end(), x) != heads.end()) continue;
    ++rest;
    if (xc <= 0) {
      out.report = label + ": remainder term " + x.render() + " has coefficient " + xc.str();
      return out;
    }
    const Comparison cmp = compare(x, bound);
    if (cmp.relation != Comparison::Relation::kLess) {
      out.report = label + ": cannot certify " + x.render() + " << " + bound.render();
      return out;
    }
    Certificate s;
    s.rule = rule::kScaleDom;
    s.inputs = {{"coefficient", bigint_to_json(xc)}};
    s.conclusion = {{"lesser", x.to_json()}, {"greater", bound.to_json()}};
    s.children.push_back(*cmp.certificate);
    c.children.push_back(std::move(s));
  }
  if (strict && rest == 0) {
    out.report = label + ": remainder is zero but must be positive";
    return out;
  }
  out.holds = true;
  out.certificate = std::move(c);
  std::string heads_text;
  for (const auto& h : heads) heads_text += h.render() + " + ";
  out.report = label + " = " + heads_text + "O, " + (strict ? "0 < O << " : "0 <= O << ") + bound.render() + " (" +
               std::to_string(rest) + " remainder atoms)";
  return out;
}

struct SortedConcat {
  Bracket sum;
  Certificate certificate;
};

/// Sums positive brackets by sorting them from greatest to least (each step
/// certified by an ordering rule) and concatenating from the right.
/// nullopt when some pair cannot be ordered or some join has no rule.
inline std::optional<SortedConcat> concat_sorted(const std::vector<Bracket>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_sorted needs at least one bracket");
  std::vector<Bracket> sorted = parts;
  // Insertion sort driven only by certified comparisons.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const auto rel = compare(sorted[j - 1], sorted[j]).relation;
      if (rel == Comparison::Relation::kLess) {
        std::swap(sorted[j - 1], sorted[j]);
      } else if (rel == Comparison::Relation::kUnknown) {
        return std::nullopt;
      } else {
        break;
      }
    }
  }
  Certificate c;
  c.rule = rule::kSortedConcat;
  c.inputs = {{"parts", detail::bracket_list_json(parts)}};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const Comparison cmp = compare(sorted[i + 1], sorted[i]);
    if (cmp.relation != Comparison::Relation::kLess) return std::nullopt;
    c.children.push_back(*cmp.certificate);
  }
  Decomposition acc = detail::atom_decomposition(sorted.back());
  Bracket sum = sorted.back();
  for (std::size_t i = sorted.size() - 1; i-- > 0;) {
    auto step = concat_sum(sorted[i], sum);
    if (!step) return std::nullopt;
    const Bracket whole = sorted[i].concat(sum);
    acc = detail::join(whole, std::move(*step), detail::atom_decomposition(sorted[i]), std::move(acc));
    sum = whole;
  }
  c.conclusion = {{"bracket", sum.to_json()}, {"atoms", detail::bracket_list_json(sorted)}};
  c.children.push_back(std::move(acc.certificate));
  return SortedConcat{sum, std::move(c)};
}

}  // namespace knotconc
