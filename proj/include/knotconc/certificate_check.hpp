#pragma once

// Independent replay of certificates. Nothing here calls the engine's rule
// implementations: side conditions, staircases and canonical witnesses are
// recomputed from scratch and every stored value must match them exactly.

#include "knotconc/certificate.hpp"
#include "knotconc/check_result.hpp"
#include "knotconc/knot_expr.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotconc {

namespace check_detail {

using Seq = std::vector<std::int64_t>;
using ClassMap = std::map<Seq, BigInt>;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string where(const std::string& path, const Certificate& c) { return path + " (" + c.rule + ")"; }

[[noreturn]] inline void fail(const std::string& path, const Certificate& c, const std::string& msg) {
  throw Failure(where(path, c) + ": " + msg);
}

inline void require(bool ok, const std::string& path, const Certificate& c, const std::string& msg) {
  if (!ok) fail(path, c, msg);
}

inline std::string child_path(const std::string& path, std::size_t i) {
  return path + "/children[" + std::to_string(i) + "]";
}

inline Json seq_json(const Seq& s) { return Json(s); }

inline Json seqs_json(const std::vector<Seq>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(seq_json(s));
  return out;
}

inline Json class_json(const ClassMap& m) {
  Json out = Json::array();
  for (const auto& [s, c] : m) out.push_back(Json::array({seq_json(s), bigint_to_json(c)}));
  return out;
}

inline Seq read_seq(const Json& j, const std::string& path, const Certificate& c) {
  require(j.is_array() && !j.empty(), path, c, "bracket must be a nonempty array");
  Seq out;
  for (const auto& e : j) {
    require(e.is_number_integer() && e.get<std::int64_t>() >= 1, path, c, "bracket entries must be positive integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

inline void add_to(ClassMap& m, const Seq& s, const BigInt& v) {
  if (v == 0) return;
  auto& slot = m[s];
  slot += v;
  if (slot == 0) m.erase(s);
}

inline Seq cat(Seq a, const Seq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// First half of the staircase of T(p,q) straight from the semigroup: the
/// alternating run lengths of members and gaps starting at 0, up to the genus.
inline Seq brute_first_half(std::int64_t p, std::int64_t q) {
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  const std::int64_t limit = 2 * g + 2;
  std::vector<char> member(static_cast<std::size_t>(limit + 1), 0);
  for (std::int64_t a = 0; a * p <= limit; ++a) {
    for (std::int64_t b = 0; a * p + b * q <= limit; ++b) member[static_cast<std::size_t>(a * p + b * q)] = 1;
  }
  Seq out;
  std::int64_t x = 0;
  while (x < g) {
    const char kind = member[static_cast<std::size_t>(x)];
    std::int64_t run = 0;
    while (x + run <= limit && member[static_cast<std::size_t>(x + run)] == kind) ++run;
    out.push_back(run);
    x += run;
  }
  if (x != g) throw std::logic_error("semigroup runs overshoot the genus");
  return out;
}

/// [(1,a)^k,1,c] -> (k, a or 0 when k = 0, c).
struct Ladder {
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::int64_t c = 0;
};

inline bool as_ladder(const Seq& s, Ladder& out) {
  if (s.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (s[i] != 1) return false;
  }
  out.k = static_cast<std::int64_t>(s.size() / 2) - 1;
  out.c = s.back();
  out.a = out.k > 0 ? s[1] : 0;
  for (std::size_t i = 1; i + 1 < s.size(); i += 2) {
    if (s[i] != out.a) return false;
  }
  return true;
}

class Replayer {
public:
  struct Decomp {
    Seq bracket;
    std::vector<Seq> atoms;
  };
  struct Class {
    ClassMap terms;
    std::string formula;  // empty when GIVEN
  };
  struct Order {
    Seq lesser;
    Seq greater;
  };
  struct Dominance {
    Class cls;
    Seq leader;
    int sign = 0;
  };

  std::size_t nodes = 0;

  Decomp decomposition(const Certificate& c, const std::string& path) {
    ++nodes;
    Decomp d;
    if (c.rule == rule::kAtom) {
      require(c.inputs.empty() && c.children.empty(), path, c, "atom carries no inputs or children");
      d.bracket = read_seq(c.conclusion.value("bracket", Json()), path, c);
      d.atoms = {d.bracket};
    } else if (c.rule == rule::kT25) {
      require(c.inputs.empty() && c.children.empty(), path, c, "T25 carries no inputs or children");
      d.bracket = {1, 1};
      d.atoms = {{1}, {1}};
    } else if (c.rule == rule::kConcat || c.rule == rule::kConcatLadder) {
      require(c.children.size() == 2, path, c, "concatenation needs two children");
      const Decomp l = decomposition(c.children[0], child_path(path, 0));
      const Decomp r = decomposition(c.children[1], child_path(path, 1));
      const Json expected = c.rule == rule::kConcat ? interval_inputs(l.bracket, r.bracket, path, c)
                                                    : ladder_inputs(l.bracket, r.bracket, path, c);
      require(c.inputs == expected, path, c, "stored side-condition values differ from recomputed " + expected.dump());
      d.bracket = cat(l.bracket, r.bracket);
      d.atoms = l.atoms;
      d.atoms.insert(d.atoms.end(), r.atoms.begin(), r.atoms.end());
    } else if (c.rule == rule::kStaircase) {
      require(c.inputs.is_object() && c.inputs.size() == 2 && c.inputs.contains("p") && c.inputs.contains("q") &&
                  c.inputs["p"].is_number_integer() && c.inputs["q"].is_number_integer(),
              path, c, "staircase needs integer p and q");
      const auto p = c.inputs["p"].get<std::int64_t>();
      const auto q = c.inputs["q"].get<std::int64_t>();
      require(p >= 2 && q > p && q <= 100000 && std::gcd(p, q) == 1, path, c, "need coprime 2 <= p < q");
      require(c.children.size() == 1, path, c, "staircase needs one decomposition child");
      const Decomp sub = decomposition(c.children[0], child_path(path, 0));
      const Seq half = brute_first_half(p, q);
      require(sub.bracket == half, path, c, "child bracket is not the staircase of T(p,q), expected " + seq_json(half).dump());
      d = sub;
    } else {
      fail(path, c, "not a decomposition rule");
    }
    const Json expected = {{"bracket", seq_json(d.bracket)}, {"atoms", seqs_json(d.atoms)}};
    require(c.conclusion == expected, path, c, "conclusion differs from recomputed " + expected.dump());
    return d;
  }

  Class klass(const Certificate& c, const std::string& path) {
    ++nodes;
    Class out;
    if (c.rule == rule::kCancel) {
      require(c.inputs.contains("formula") && c.inputs["formula"].is_string(), path, c, "missing formula");
      KnotFormula f;
      try {
        f = parse_formula(c.inputs["formula"].get<std::string>());
      } catch (const std::exception& e) {
        fail(path, c, std::string("formula does not parse: ") + e.what());
      }
      Json terms = Json::array();
      for (const auto& [k, coeff] : f.terms()) terms.push_back(Json::array({k.p(), k.q(), bigint_to_json(coeff)}));
      const Json expected = {{"formula", c.inputs["formula"]}, {"terms", terms}};
      require(c.inputs == expected, path, c, "terms differ from the formula, expected " + expected.dump());
      require(c.children.size() == f.terms().size(), path, c, "need one staircase child per term");
      std::size_t i = 0;
      for (const auto& [k, coeff] : f.terms()) {
        const Certificate& st = c.children[i];
        const std::string sp = child_path(path, i);
        require(st.rule == rule::kStaircase, sp, st, "expected a staircase node");
        require(st.inputs == Json{{"p", k.p()}, {"q", k.q()}}, sp, st, "staircase is not for " + k.render());
        const Decomp d = decomposition(st, sp);
        for (const auto& a : d.atoms) add_to(out.terms, a, coeff);
        ++i;
      }
      out.formula = c.inputs["formula"].get<std::string>();
    } else if (c.rule == rule::kRefine) {
      require(c.inputs.empty(), path, c, "refine carries no inputs");
      require(!c.children.empty(), path, c, "refine needs the coarse class");
      const Class coarse = klass(c.children[0], child_path(path, 0));
      require(c.children.size() == coarse.terms.size() + 1, path, c, "need one refinement per coarse term");
      std::size_t i = 1;
      for (const auto& [s, coeff] : coarse.terms) {
        const Decomp d = decomposition(c.children[i], child_path(path, i));
        require(d.bracket == s, child_path(path, i), c.children[i], "refines the wrong term");
        for (const auto& a : d.atoms) add_to(out.terms, a, coeff);
        ++i;
      }
      out.formula = coarse.formula;
    } else if (c.rule == rule::kGiven) {
      require(c.inputs.empty() && c.children.empty(), path, c, "given class carries no inputs or children");
      const Json& list = c.conclusion.value("class", Json());
      require(list.is_array(), path, c, "class must be an array");
      for (const auto& t : list) {
        require(t.is_array() && t.size() == 2, path, c, "class terms are [bracket, coefficient]");
        add_to(out.terms, read_seq(t[0], path, c), bigint_from_json(t[1]));
      }
    } else {
      fail(path, c, "not a class rule");
    }
    const Json expected = {{"class", class_json(out.terms)}};
    require(c.conclusion == expected, path, c, "conclusion differs from recomputed " + expected.dump());
    return out;
  }

  Order order(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.children.empty(), path, c, "ordering rules are leaves");
    Order o;
    o.lesser = read_seq(c.conclusion.value("lesser", Json()), path, c);
    o.greater = read_seq(c.conclusion.value("greater", Json()), path, c);
    require(c.conclusion.size() == 2, path, c, "unexpected conclusion fields");
    const Seq& x = o.lesser;
    const Seq& y = o.greater;
    Json expected;
    if (c.rule == rule::kLeadGt) {
      require(x[0] > y[0], path, c, "first entries are not decreasing");
      expected = {{"lesser_first", x[0]}, {"greater_first", y[0]}};
    } else if (c.rule == rule::kSecondLt) {
      require(x.size() >= 2 && y.size() >= 2 && x[0] == y[0] && x[1] < y[1], path, c,
              "need equal first entries and a smaller second entry");
      expected = {{"first", x[0]}, {"lesser_second", x[1]}, {"greater_second", y[1]}};
    } else if (c.rule == rule::kLadderOrder) {
      Ladder lx, ly;
      require(as_ladder(x, lx) && as_ladder(y, ly), path, c, "both sides must be ladders");
      require(lx.k == 0 || ly.k == 0 || lx.a == ly.a, path, c, "ladders use different letters");
      const std::int64_t a = lx.k > 0 ? lx.a : ly.k > 0 ? ly.a : 1;
      const std::int64_t n = lx.k, cc = lx.c, m = ly.k, b = ly.c;
      require((a < b && a <= cc && m < n) || (a <= cc && cc < b && m == n), path, c, "ladder order conditions fail");
      expected = {{"a", a}, {"n", n}, {"c", cc}, {"m", m}, {"b", b}};
    } else {
      fail(path, c, "not an ordering rule");
    }
    require(c.inputs == expected, path, c, "stored side-condition values differ from recomputed " + expected.dump());
    return o;
  }

  /// SCALE-DOM: coefficient * lesser << greater.
  std::pair<BigInt, Order> scaled(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.rule == rule::kScaleDom, path, c, "expected SCALE-DOM");
    require(c.inputs.is_object() && c.inputs.size() == 1 && c.inputs.contains("coefficient"), path, c,
            "needs exactly a coefficient");
    BigInt k;
    try {
      k = bigint_from_json(c.inputs["coefficient"]);
    } catch (const std::exception& e) {
      fail(path, c, e.what());
    }
    require(k != 0, path, c, "coefficient must be nonzero");
    require(c.children.size() == 1, path, c, "needs one ordering child");
    const Order o = order(c.children[0], child_path(path, 0));
    const Json expected = {{"lesser", seq_json(o.lesser)}, {"greater", seq_json(o.greater)}};
    require(c.conclusion == expected, path, c, "conclusion differs from the ordering child");
    return {k, o};
  }

  Dominance dominance(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.rule == rule::kSumDom, path, c, "expected SUM-DOM");
    require(!c.children.empty(), path, c, "needs a class child");
    Dominance d;
    d.cls = klass(c.children[0], child_path(path, 0));
    d.leader = read_seq(c.inputs.value("leader", Json()), path, c);
    auto it = d.cls.terms.find(d.leader);
    require(it != d.cls.terms.end(), path, c, "leader is not a term of the class");
    const BigInt coeff = it->second;
    d.sign = coeff.sign();
    const Json expected_in = {{"leader", seq_json(d.leader)}, {"coefficient", bigint_to_json(coeff)}};
    require(c.inputs == expected_in, path, c, "inputs differ from recomputed " + expected_in.dump());
    const Json expected_out = {{"leader", seq_json(d.leader)}, {"sign", d.sign}};
    require(c.conclusion == expected_out, path, c, "conclusion differs from recomputed " + expected_out.dump());
    require(c.children.size() == d.cls.terms.size(), path, c, "need one SCALE-DOM per non-leading term");
    std::size_t i = 1;
    for (const auto& [s, k] : d.cls.terms) {
      if (s == d.leader) continue;
      const auto [kk, o] = scaled(c.children[i], child_path(path, i));
      require(kk == k && o.lesser == s && o.greater == d.leader, child_path(path, i), c.children[i],
              "does not bound term " + seq_json(s).dump() + " by the leader");
      ++i;
    }
    return d;
  }

  void zero(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.inputs.empty(), path, c, "zero carries no inputs");
    require(c.conclusion == Json{{"sign", 0}}, path, c, "conclusion must be sign 0");
    require(c.children.size() == 1, path, c, "needs one class child");
    const Class k = klass(c.children[0], child_path(path, 0));
    require(k.terms.empty(), path, c, "class does not vanish");
  }

  void chain(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.inputs.is_object() && c.inputs.size() == 1 && c.inputs.contains("ns") && c.inputs["ns"].is_array(), path,
            c, "needs the index list ns");
    std::vector<std::int64_t> ns;
    for (const auto& e : c.inputs["ns"]) {
      require(e.is_number_integer() && e.get<std::int64_t>() >= 1 && e.get<std::int64_t>() <= 1000000, path, c,
              "indices must be positive integers");
      ns.push_back(e.get<std::int64_t>());
      require(ns.size() == 1 || ns[ns.size() - 2] < ns.back(), path, c, "indices must ascend");
    }
    require(!ns.empty(), path, c, "empty index list");
    require(c.conclusion == Json{{"independent", ns}}, path, c, "conclusion differs from inputs");
    require(c.children.size() == 2 * ns.size() - 1, path, c, "need a leader per index and a step per pair");
    std::vector<Dominance> doms;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      doms.push_back(dominance(c.children[i], child_path(path, i)));
      const std::string w = family_W(ns[i]).render();
      require(doms.back().cls.formula == w, child_path(path, i), c.children[i], "class is not of " + w);
      require(doms.back().sign > 0, child_path(path, i), c.children[i], "leader is not positive");
    }
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
      const std::size_t idx = ns.size() + i;
      const Certificate& s = c.children[idx];
      const std::string sp = child_path(path, idx);
      ++nodes;
      require(s.rule == rule::kStepDom, sp, s, "expected STEP-DOM");
      const Seq& lead = doms[i + 1].leader;
      const Json expected_in = {{"lower", ns[i]}, {"upper", ns[i + 1]}, {"leader", seq_json(lead)}};
      require(s.inputs == expected_in, sp, s, "inputs differ from recomputed " + expected_in.dump());
      const Json expected_out = {{"lesser", family_W(ns[i]).render()}, {"greater", family_W(ns[i + 1]).render()}};
      require(s.conclusion == expected_out, sp, s, "conclusion differs from recomputed");
      const auto& lower = doms[i].cls.terms;
      require(s.children.size() == lower.size(), sp, s, "need one ordering per term of the lower class");
      std::size_t j = 0;
      for (const auto& [t, k] : lower) {
        const Order o = order(s.children[j], child_path(sp, j));
        require(o.lesser == t && o.greater == lead, child_path(sp, j), s.children[j], "orders the wrong pair");
        ++j;
      }
    }
  }

  void head(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.inputs.is_object() && c.inputs.contains("family") && c.inputs.contains("m") &&
                c.inputs["family"].is_number_integer() && c.inputs["m"].is_number_integer(),
            path, c, "needs integer family and m");
    const auto d = c.inputs["family"].get<std::int64_t>();
    const auto m = c.inputs["m"].get<std::int64_t>();
    require(d >= 1 && d <= 3 && m <= 1000000, path, c, "family offset must be 1, 2 or 3");
    if (d == 3) require(m >= 7 && m % 3 != 0, path, c, "hypothesis m >= 7, 3 not dividing m");
    if (d == 2) require(m >= 5 && m % 2 == 1, path, c, "hypothesis m >= 5 odd");
    if (d == 1) require(m >= 3, path, c, "hypothesis m >= 3");
    std::vector<Seq> heads{{1, m - 1}};
    Seq bound{1, 2, 1, 3};
    if (d == 3) {
      bound = {1, 2, 1, m - 4};
      heads.push_back(bound);
    }
    const bool strict = d == 2;
    const Json expected_in = {
        {"family", d}, {"m", m}, {"heads", seqs_json(heads)}, {"bound", seq_json(bound)}, {"strict", strict}};
    require(c.inputs == expected_in, path, c, "inputs differ from recomputed " + expected_in.dump());
    require(c.conclusion == Json{{"holds", true}}, path, c, "conclusion must be holds=true");
    require(!c.children.empty(), path, c, "needs a class child");
    const Class k = klass(c.children[0], child_path(path, 0));
    const std::string knot = "T(" + std::to_string(m) + "," + std::to_string(m + d) + ")";
    require(k.formula == knot, path, c, "class is not of " + knot);
    for (const auto& h : heads) {
      auto it = k.terms.find(h);
      require(it != k.terms.end() && it->second == 1, path, c, "head " + seq_json(h).dump() + " lacks coefficient 1");
    }
    require(c.children.size() == k.terms.size() - heads.size() + 1, path, c, "need one bound per remainder term");
    std::size_t i = 1;
    for (const auto& [s, coeff] : k.terms) {
      if (std::find(heads.begin(), heads.end(), s) != heads.end()) continue;
      require(coeff > 0, path, c, "remainder coefficient is not positive");
      const auto [kk, o] = scaled(c.children[i], child_path(path, i));
      require(kk == coeff && o.lesser == s && o.greater == bound, child_path(path, i), c.children[i],
              "does not bound the remainder term " + seq_json(s).dump());
      ++i;
    }
    require(!strict || i > 1, path, c, "remainder must be nonzero");
  }

  void sorted_concat(const Certificate& c, const std::string& path) {
    ++nodes;
    require(c.inputs.is_object() && c.inputs.size() == 1 && c.inputs.contains("parts") && c.inputs["parts"].is_array() &&
                !c.inputs["parts"].empty(),
            path, c, "needs the list of parts");
    std::vector<Seq> parts;
    for (const auto& p : c.inputs["parts"]) parts.push_back(read_seq(p, path, c));
    require(c.conclusion.is_object() && c.conclusion.contains("atoms") && c.conclusion["atoms"].is_array(), path, c,
            "conclusion needs atoms");
    std::vector<Seq> order_list;
    for (const auto& p : c.conclusion["atoms"]) order_list.push_back(read_seq(p, path, c));
    auto a = parts, b = order_list;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    require(a == b, path, c, "atoms are not a rearrangement of the parts");
    require(c.children.size() == parts.size(), path, c, "need the orderings and one decomposition");
    for (std::size_t i = 0; i + 1 < order_list.size(); ++i) {
      const Order o = order(c.children[i], child_path(path, i));
      require(o.lesser == order_list[i + 1] && o.greater == order_list[i], child_path(path, i), c.children[i],
              "parts are not sorted from greatest to least");
    }
    const std::size_t last = parts.size() - 1;
    const Decomp d = decomposition(c.children[last], child_path(path, last));
    require(d.atoms == order_list, path, c, "decomposition atoms differ from the sorted parts");
    const Json expected = {{"bracket", seq_json(d.bracket)}, {"atoms", seqs_json(order_list)}};
    require(c.conclusion == expected, path, c, "conclusion differs from recomputed " + expected.dump());
  }

  void any(const Certificate& c, const std::string& path) {
    const std::string& r = c.rule;
    if (r == rule::kAtom || r == rule::kConcat || r == rule::kConcatLadder || r == rule::kT25 || r == rule::kStaircase) {
      decomposition(c, path);
    } else if (r == rule::kCancel || r == rule::kRefine || r == rule::kGiven) {
      klass(c, path);
    } else if (r == rule::kLeadGt || r == rule::kSecondLt || r == rule::kLadderOrder) {
      order(c, path);
    } else if (r == rule::kScaleDom) {
      scaled(c, path);
    } else if (r == rule::kSumDom) {
      dominance(c, path);
    } else if (r == rule::kZero) {
      zero(c, path);
    } else if (r == rule::kChain) {
      chain(c, path);
    } else if (r == rule::kHead) {
      head(c, path);
    } else if (r == rule::kSortedConcat) {
      sorted_concat(c, path);
    } else {
      fail(path, c, "unknown rule");
    }
  }

private:
  static Json interval_inputs(const Seq& l, const Seq& r, const std::string& path, const Certificate& c) {
    require(l.size() % 2 == 0, path, c, "left part must have even length");
    std::int64_t max_odd = 0;
    std::int64_t min_even = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < l.size(); i += 2) max_odd = std::max(max_odd, l[i]);
    for (std::size_t i = 1; i < l.size(); i += 2) min_even = std::min(min_even, l[i]);
    for (auto v : r) require(max_odd <= v && v <= min_even, path, c, "right entry " + std::to_string(v) + " outside the interval");
    return {{"left", seq_json(l)}, {"right", seq_json(r)}, {"max_odd", max_odd}, {"min_even", min_even}};
  }

  static Json ladder_inputs(const Seq& l, const Seq& r, const std::string& path, const Certificate& c) {
    Ladder left;
    require(as_ladder(l, left) && left.k >= 1, path, c, "left part must be a ladder [(1,a)^m,1,b] with m >= 1");
    const std::int64_t a = left.a, b = left.c;
    require(r.size() % 2 == 0, path, c, "right part must have even length");
    Json groups = Json::array();
    std::int64_t run = 0;
    std::int64_t min_n = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < r.size(); i += 2) {
      require(r[i] == 1, path, c, "right part must have 1 in every odd position");
      const std::int64_t v = r[i + 1];
      require(a <= v && v <= b, path, c, "right value " + std::to_string(v) + " outside [a,b]");
      if (v != a || i + 2 == r.size()) {
        groups.push_back(Json::array({run, v}));
        min_n = std::min(min_n, run);
        run = 0;
      } else {
        ++run;
      }
    }
    require(left.k <= min_n, path, c, "ladder exponent exceeds a group exponent");
    return {{"left", seq_json(l)}, {"right", seq_json(r)}, {"a", a}, {"b", b}, {"m", left.k}, {"groups", groups}};
  }
};

}  // namespace check_detail

/// Replays a certificate; the report names the first failing step.
inline CheckResult check_certificate(const Certificate& cert) {
  check_detail::Replayer r;
  try {
    r.any(cert, "root");
  } catch (const check_detail::Failure& e) {
    return {false, e.what()};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
  return {true, "valid " + cert.rule + " certificate (" + std::to_string(r.nodes) + " steps)"};
}

}  // namespace knotconc
