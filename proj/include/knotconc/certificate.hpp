#pragma once

// Replayable proof objects. A certificate is a tree of rule applications; every
// node records the concrete values its side conditions were checked against,
// so an independent checker can re-verify each step from the stored data.
//
// Serialized form (JSON):
//   {"rule": "...", "inputs": {...}, "conclusion": {...}, "children": [...]}

#include "knotconc/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

using Json = nlohmann::json;

namespace rule {
// Decompositions: conclusion {"bracket": B, "atoms": [A1, ...]} meaning B = A1 + ...
inline constexpr const char* kAtom = "ATOM";
inline constexpr const char* kConcat = "CONCAT";               // concatenation, interval condition
inline constexpr const char* kConcatLadder = "CONCAT-LADDER";  // concatenation, (1,a)-ladder pattern
inline constexpr const char* kT25 = "T25";                     // [1,1] = [1] + [1]
inline constexpr const char* kStaircase = "STAIRCASE";         // T(p,q) -> first half of its staircase
// Classes: conclusion {"class": [[bracket, coeff], ...]}
inline constexpr const char* kCancel = "CANCEL";
inline constexpr const char* kRefine = "REFINE";
inline constexpr const char* kGiven = "GIVEN";
// Orderings: conclusion {"lesser": x, "greater": y} meaning x << y
inline constexpr const char* kLeadGt = "LEAD-GT";
inline constexpr const char* kSecondLt = "SECOND-LT";
inline constexpr const char* kLadderOrder = "LADDER-ORDER";
// Dominance and signs
inline constexpr const char* kScaleDom = "SCALE-DOM";
inline constexpr const char* kSumDom = "SUM-DOM";
inline constexpr const char* kZero = "ZERO";
inline constexpr const char* kStepDom = "STEP-DOM";
inline constexpr const char* kChain = "CHAIN";
inline constexpr const char* kHead = "HEAD";
inline constexpr const char* kSortedConcat = "SORTED-CONCAT";
}  // namespace rule

struct Certificate {
  std::string rule;
  Json inputs = Json::object();
  Json conclusion = Json::object();
  std::vector<Certificate> children;

  Json to_json() const {
    Json kids = Json::array();
    for (const auto& c : children) kids.push_back(c.to_json());
    return Json{{"rule", rule}, {"inputs", inputs}, {"conclusion", conclusion}, {"children", kids}};
  }

  static Certificate from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rule") || !j.at("rule").is_string()) {
      throw std::invalid_argument("certificate node needs a string 'rule'");
    }
    Certificate c;
    c.rule = j.at("rule").get<std::string>();
    c.inputs = j.value("inputs", Json::object());
    c.conclusion = j.value("conclusion", Json::object());
    if (j.contains("children")) {
      if (!j.at("children").is_array()) throw std::invalid_argument("'children' must be an array");
      for (const auto& k : j.at("children")) c.children.push_back(from_json(k));
    }
    return c;
  }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
  }
};

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as strings.
inline Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace knotconc
