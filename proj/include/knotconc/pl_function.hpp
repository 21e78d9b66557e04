#pragma once

#include "knotconc/numeric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotconc {

/// Continuous piecewise-linear function on [0,2] with exact rational
/// breakpoints. Always held in canonical form: breakpoints strictly increase
/// from 0 to 2 and no interior breakpoint joins two pieces of equal slope, so
/// equality of functions is equality of breakpoint lists.
class PLFunction {
public:
  struct Point {
    Rational t;
    Rational v;
    bool operator==(const Point&) const = default;
  };

  /// The zero function.
  PLFunction() : pts_{{Rational(0), Rational(0)}, {Rational(2), Rational(0)}} {}

  /// Interpolates the given points; t must strictly increase from 0 to 2.
  static PLFunction from_points(std::vector<Point> pts) {
    if (pts.size() < 2 || pts.front().t != 0 || pts.back().t != 2) {
      throw std::invalid_argument("PLFunction breakpoints must start at 0 and end at 2");
    }
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (!(pts[k - 1].t < pts[k].t)) {
        throw std::invalid_argument("PLFunction breakpoints must strictly increase");
      }
    }
    PLFunction f;
    f.pts_ = std::move(pts);
    f.canonicalize();
    return f;
  }

  const std::vector<Point>& breakpoints() const { return pts_; }
  std::size_t piece_count() const { return pts_.size() - 1; }
  bool is_zero() const { return pts_.size() == 2 && pts_[0].v == 0 && pts_[1].v == 0; }

  Rational operator()(const Rational& t) const {
    if (t < 0 || t > 2) throw std::out_of_range("PLFunction evaluated outside [0,2]");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), t,
                               [](const Point& p, const Rational& x) { return p.t < x; });
    if (it->t == t) return it->v;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.v + (hi.v - lo.v) * (t - lo.t) / (hi.t - lo.t);
  }

  Rational slope(std::size_t piece) const {
    const Point& a = pts_.at(piece);
    const Point& b = pts_.at(piece + 1);
    return (b.v - a.v) / (b.t - a.t);
  }

  PLFunction& operator+=(const PLFunction& other) {
    std::vector<Point> merged;
    merged.reserve(pts_.size() + other.pts_.size());
    std::size_t a = 0, b = 0;
    while (a < pts_.size() || b < other.pts_.size()) {
      Rational t;
      if (b == other.pts_.size() || (a < pts_.size() && pts_[a].t < other.pts_[b].t)) {
        t = pts_[a++].t;
      } else if (a == pts_.size() || other.pts_[b].t < pts_[a].t) {
        t = other.pts_[b++].t;
      } else {
        t = pts_[a].t;
        ++a;
        ++b;
      }
      merged.push_back({t, Rational(0)});
    }
    for (auto& p : merged) p.v = (*this)(p.t) + other(p.t);
    pts_ = std::move(merged);
    canonicalize();
    return *this;
  }

  PLFunction& operator*=(const BigInt& c) {
    if (c == 0) return *this = PLFunction();
    for (auto& p : pts_) p.v *= c;
    return *this;
  }

  friend PLFunction operator+(PLFunction a, const PLFunction& b) { return a += b; }
  friend PLFunction operator-(PLFunction a, const PLFunction& b) {
    PLFunction nb = b;
    nb *= BigInt(-1);
    return a += nb;
  }
  friend PLFunction operator-(PLFunction a) { return a *= BigInt(-1); }

  bool operator==(const PLFunction&) const = default;

  /// First breakpoint of either function where the two disagree, if any.
  friend std::optional<Rational> first_discrepancy(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    for (const auto& p : f.pts_) ts.push_back(p.t);
    for (const auto& p : g.pts_) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    for (const auto& t : ts) {
      if (f(t) != g(t)) return t;
    }
    return std::nullopt;
  }

  /// Evenly spaced floating-point samples for plotting; n >= 2.
  std::vector<std::pair<double, double>> samples(std::size_t n) const {
    if (n < 2) throw std::invalid_argument("need at least 2 samples");
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Rational t(BigInt(2 * k), BigInt(n - 1));
      out.emplace_back(t.convert_to<double>(), (*this)(t).convert_to<double>());
    }
    return out;
  }

private:
  void canonicalize() {
    std::vector<Point> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) {
      while (out.size() >= 2) {
        const Point& a = out[out.size() - 2];
        const Point& b = out.back();
        if ((b.v - a.v) * (p.t - b.t) == (p.v - b.v) * (b.t - a.t)) {
          out.pop_back();
        } else {
          break;
        }
      }
      out.push_back(p);
    }
    pts_ = std::move(out);
  }

  std::vector<Point> pts_;
};

inline PLFunction pl_add(const PLFunction& f, const PLFunction& g) { return f + g; }

inline PLFunction pl_scale(PLFunction f, const BigInt& c) { return f *= c; }

/// "a → b : <affine expression in t>" per linear piece, e.g. "0 → 1 : -t".
inline std::string render_affine(const Rational& slope, const Rational& intercept) {
  std::string out;
  if (slope != 0) {
    if (slope == 1) {
      out = "t";
    } else if (slope == -1) {
      out = "-t";
    } else {
      out = to_string(slope) + "*t";
    }
  }
  if (intercept != 0 || out.empty()) {
    if (out.empty()) return to_string(intercept);
    out += intercept < 0 ? " - " + to_string(Rational(-intercept)) : " + " + to_string(intercept);
  }
  return out;
}

inline std::vector<std::string> render_pieces(const PLFunction& f) {
  std::vector<std::string> out;
  const auto& pts = f.breakpoints();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Rational s = f.slope(k);
    const Rational c = pts[k].v - s * pts[k].t;
    out.push_back(to_string(pts[k].t) + " → " + to_string(pts[k + 1].t) + " : " + render_affine(s, c));
  }
  return out;
}

}  // namespace knotconc
