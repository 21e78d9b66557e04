#pragma once

// Formal integer combinations of positive torus knots, the J/K/L/W families,
// and the textual expression language used by the command-line tool.

#include "knotconc/numeric.hpp"

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotconc {

/// T_{p,q} with coprime 1 <= p <= q. The unknot is stored as (1,1).
class TorusKnot {
public:
  TorusKnot() = default;

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_unknot() const { return p_ == 1; }
  std::int64_t genus() const { return (p_ - 1) * (q_ - 1) / 2; }

  std::string render() const {
    return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  auto operator<=>(const TorusKnot&) const = default;

private:
  TorusKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  friend TorusKnot make_torus_knot(std::int64_t, std::int64_t);

  std::int64_t p_ = 1;
  std::int64_t q_ = 1;
};

/// Validates and canonicalizes (p,q); throws std::invalid_argument naming the pair.
inline TorusKnot make_torus_knot(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("torus knot parameters must be positive, got (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  }
  const std::int64_t g = std::gcd(p, q);
  if (g != 1) {
    throw std::invalid_argument("gcd(" + std::to_string(p) + "," + std::to_string(q) +
                                ")=" + std::to_string(g));
  }
  if (p > q) std::swap(p, q);
  if (p == 1) return TorusKnot(1, 1);
  return TorusKnot(p, q);
}

/// Finite map TorusKnot -> nonzero coefficient. Unknot terms never stored.
class KnotFormula {
public:
  using Terms = std::map<TorusKnot, BigInt>;

  KnotFormula() = default;
  explicit KnotFormula(const TorusKnot& k, const BigInt& coeff = 1) { add(k, coeff); }

  void add(const TorusKnot& k, const BigInt& coeff) {
    if (k.is_unknot() || coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const TorusKnot& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  KnotFormula& operator+=(const KnotFormula& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  KnotFormula& operator-=(const KnotFormula& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  KnotFormula& operator*=(const BigInt& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend KnotFormula operator+(KnotFormula a, const KnotFormula& b) { return a += b; }
  friend KnotFormula operator-(KnotFormula a, const KnotFormula& b) { return a -= b; }
  friend KnotFormula operator*(const BigInt& s, KnotFormula a) { return a *= s; }
  friend KnotFormula operator-(KnotFormula a) { return a *= BigInt(-1); }

  bool operator==(const KnotFormula&) const = default;

  /// "T(3,4) - 2*T(9,10) + T(10,11)"; the zero formula renders as "0".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1) out += mag.str() + "*";
      out += k.render();
      first = false;
    }
    return out;
  }

private:
  Terms terms_;
};

namespace detail {

inline std::int64_t family_offset(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("family index must be nonnegative");
  if (n > (std::numeric_limits<std::int64_t>::max() / 12)) {
    throw std::invalid_argument("family index too large");
  }
  return 6 * n;
}

inline void add_pair(KnotFormula& f, std::int64_t p, std::int64_t q, int coeff) {
  f.add(make_torus_knot(p, q), coeff);
}

}  // namespace detail

inline KnotFormula family_J(std::int64_t n) {
  const std::int64_t s = detail::family_offset(n);
  KnotFormula f;
  detail::add_pair(f, s + 5, s + 8, +1);
  detail::add_pair(f, s + 2, s + 5, -1);
  detail::add_pair(f, s + 4, s + 7, -1);
  detail::add_pair(f, s + 1, s + 4, +1);
  return f;
}

inline KnotFormula family_K(std::int64_t n) {
  const std::int64_t s = detail::family_offset(n);
  KnotFormula f;
  detail::add_pair(f, s + 5, s + 7, +1);
  detail::add_pair(f, s + 3, s + 5, -1);
  detail::add_pair(f, s + 3, s + 5, -1);
  detail::add_pair(f, s + 1, s + 3, +1);
  return f;
}

inline KnotFormula family_L(std::int64_t n) {
  const std::int64_t s = detail::family_offset(n);
  KnotFormula f;
  detail::add_pair(f, s + 4, s + 5, +1);
  detail::add_pair(f, s + 3, s + 4, -2);
  detail::add_pair(f, s + 2, s + 3, +1);
  return f;
}

/// J(n) - K(n) + L(n): zero Upsilon and phi, nonzero epsilon class for n >= 1.
inline KnotFormula family_W(std::int64_t n) { return family_J(n) - family_K(n) + family_L(n); }

/// Thrown by parse_formula. position() is a 0-based offset into the input.
class FormulaError : public std::invalid_argument {
public:
  enum class Kind { kSyntax, kSemantic };

  FormulaError(Kind kind, std::size_t position, const std::string& message)
      : std::invalid_argument((kind == Kind::kSyntax ? "syntax error at " : "semantic error at ") +
                              std::to_string(position) + ": " + message),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

namespace detail {

// formula := term (("+"|"-") term)*
// term    := [int "*"] atom | "-" term
// atom    := "T(" int "," int ")" | ("J"|"K"|"L"|"W") "(" int ")" | "(" formula ")"
// A lone "0" is also accepted as the empty formula so render() round-trips.
class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  KnotFormula parse() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return {};
      pos_ = save;
    }
    KnotFormula f = formula();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  KnotFormula formula() {
    KnotFormula f = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        f += term();
      } else if (peek() == '-') {
        ++pos_;
        f -= term();
      } else {
        return f;
      }
    }
  }

  KnotFormula term() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -term();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const BigInt k = integer();
      skip_ws();
      expect('*');
      return k * atom();
    }
    return atom();
  }

  KnotFormula atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      KnotFormula f = formula();
      skip_ws();
      expect(')');
      return f;
    }
    if (c == 'T') {
      ++pos_;
      skip_ws();
      expect('(');
      const std::size_t p_pos = skip_ws_pos();
      const BigInt p = integer();
      skip_ws();
      expect(',');
      skip_ws();
      const BigInt q = integer();
      skip_ws();
      expect(')');
      try {
        return KnotFormula(make_torus_knot(small(p, p_pos), small(q, p_pos)));
      } catch (const FormulaError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw FormulaError(FormulaError::Kind::kSemantic, start, e.what());
      }
    }
    if (c == 'J' || c == 'K' || c == 'L' || c == 'W') {
      ++pos_;
      skip_ws();
      expect('(');
      const std::size_t n_pos = skip_ws_pos();
      const BigInt n = integer();
      skip_ws();
      expect(')');
      const std::int64_t idx = small(n, n_pos);
      try {
        switch (c) {
          case 'J': return family_J(idx);
          case 'K': return family_K(idx);
          case 'L': return family_L(idx);
          default: return family_W(idx);
        }
      } catch (const std::invalid_argument& e) {
        throw FormulaError(FormulaError::Kind::kSemantic, start, e.what());
      }
    }
    if (at_end()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t small(const BigInt& v, std::size_t where) const {
    if (v > BigInt(std::numeric_limits<std::int32_t>::max())) {
      throw FormulaError(FormulaError::Kind::kSemantic, where, "integer " + v.str() + " too large");
    }
    return v.convert_to<std::int64_t>();
  }

  void expect(char c) {
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormulaError(FormulaError::Kind::kSyntax, pos_, msg);
  }

  std::size_t skip_ws_pos() {
    skip_ws();
    return pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline KnotFormula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

}  // namespace knotconc
