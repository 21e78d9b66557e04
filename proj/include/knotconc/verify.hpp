#pragma once

// Batch verification suites behind `verify recursions` and `verify family`.

#include "knotconc/certificate_check.hpp"
#include "knotconc/epsilon.hpp"
#include "knotconc/phi.hpp"
#include "knotconc/semigroup.hpp"
#include "knotconc/staircase.hpp"
#include "knotconc/upsilon.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace knotconc {

struct VerificationCheck {
  std::string id;
  std::string parameters;
  bool pass = false;
  std::string detail;
  std::string certificate;  // file name, when one was written
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const VerificationCheck& c) { return !c.pass; }));
  }

  Json to_json() const {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json j = {{"id", c.id}, {"parameters", c.parameters}, {"pass", c.pass}, {"detail", c.detail}};
      if (!c.certificate.empty()) j["certificate"] = c.certificate;
      list.push_back(std::move(j));
    }
    return {{"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"checks", list}};
  }
};

namespace detail {

/// Palindrome and genus sum of the staircase of T(p,q).
inline CheckResult check_staircase_invariants(std::int64_t p, std::int64_t q) {
  const auto sp = staircase_of(p, q);
  const auto& b = sp.steps();
  const bool palindrome = std::equal(b.begin(), b.end(), b.rbegin());
  const std::int64_t half = std::accumulate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(sp.half_length()),
                                            std::int64_t{0});
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  return {palindrome && half == g,
          "length " + std::to_string(b.size()) + ", half sum " + std::to_string(half) + ", genus " + std::to_string(g)};
}

/// Closed-form window against brute-force enumeration, for every valid l.
inline CheckResult check_windows(std::int64_t p, std::int64_t r) {
  const Semigroup s(p, p + r);
  for (std::int64_t l = 0; l <= p / r; ++l) {
    const Window w = window(s, l);
    const auto brute = enumerate_members(p, p + r, l * p, (l + 1) * p);
    if (!w.verified || w.members != brute) return {false, "l=" + std::to_string(l) + " differs"};
  }
  return {true, std::to_string(p / r + 1) + " windows"};
}

inline std::string pq(std::int64_t p, std::int64_t q) {
  return "p=" + std::to_string(p) + " q=" + std::to_string(q);
}

}  // namespace detail

/// Staircase invariants over coprime 2 <= p < q <= max_p*(max_k+1), windows and
/// both recursions over coprime r < p <= max_p with k <= max_k, and the shifted
/// identities for n <= max_k + 1.
inline VerificationReport verify_recursions(std::int64_t max_p, std::int64_t max_k) {
  VerificationReport rep;
  rep.suite = "recursions";
  const std::int64_t max_q = max_p * (max_k + 1);
  for (std::int64_t p = 2; p <= max_q; ++p) {
    for (std::int64_t q = p + 1; q <= max_q; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto r = detail::check_staircase_invariants(p, q);
      rep.checks.push_back({"staircase", detail::pq(p, q), r.holds, r.report, {}});
    }
  }
  for (std::int64_t p = 2; p <= max_p; ++p) {
    for (std::int64_t r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      const auto w = detail::check_windows(p, r);
      rep.checks.push_back({"window", "p=" + std::to_string(p) + " r=" + std::to_string(r), w.holds, w.report, {}});
    }
  }
  for (std::int64_t p = 2; p <= max_p; ++p) {
    for (std::int64_t r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (std::int64_t k = 0; k <= max_k; ++k) {
        const auto u = check_upsilon_recursion(p, r, k);
        rep.checks.push_back({"upsilon-recursion", u.report, u.holds, {}, {}});
        const auto f = check_phi_recursion(p, r, k);
        rep.checks.push_back({"phi-recursion", f.report, f.holds, {}, {}});
      }
    }
  }
  for (std::int64_t n = 0; n <= max_k + 1; ++n) {
    const auto u = check_upsilon_shift(n);
    rep.checks.push_back({"upsilon-shift", "n=" + std::to_string(n), u.holds, u.report, {}});
    if (n > 0) {
      const auto f = check_phi_shift(n);
      rep.checks.push_back({"phi-shift", "n=" + std::to_string(n), f.holds, f.report, {}});
    }
  }
  return rep;
}

namespace detail {

/// Replays the certificate and, if a directory is given, writes it there.
inline void attach_certificate(VerificationCheck& check, const Certificate& cert,
                               const std::optional<std::filesystem::path>& dir, const std::string& name) {
  const CheckResult replay = check_certificate(cert);
  if (!replay.holds) {
    check.pass = false;
    check.detail += "; replay failed: " + replay.report;
  }
  if (dir) {
    std::filesystem::create_directories(*dir);
    const auto file = *dir / (name + ".json");
    std::ofstream(file) << cert.to_json().dump(1) << '\n';
    check.certificate = file.string();
  }
}

}  // namespace detail

/// Vanishing of Upsilon and phi on W(0..max_n), the zero class of W(0), the
/// certified leaders of W(1..max_n), the head decompositions for every m up to
/// max(13, 6*max_n+5), and the independence chain W(1) << ... << W(max_n).
inline VerificationReport verify_family(std::int64_t max_n,
                                        const std::optional<std::filesystem::path>& cert_dir = std::nullopt) {
  if (max_n < 0) throw std::invalid_argument("--max-n must be >= 0");
  VerificationReport rep;
  rep.suite = "family";
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const KnotFormula w = family_W(n);
    const std::string ns = "n=" + std::to_string(n);
    rep.checks.push_back({"upsilon(W(" + std::to_string(n) + ")) = 0", ns, upsilon_of(w).is_zero(), {}, {}});
    rep.checks.push_back({"phi(W(" + std::to_string(n) + ")) = 0", ns, phi_of(w).is_zero(), {}, {}});
  }

  {
    const EpsilonResult e = epsilon_sign(family_W(0));
    VerificationCheck c{"class(W(0)) = 0", "n=0", e.sign == EpsilonResult::Sign::kZero, e.cls.expr.render(), {}};
    if (e.certificate) detail::attach_certificate(c, *e.certificate, cert_dir, "class_W0");
    rep.checks.push_back(std::move(c));
  }

  for (std::int64_t n = 1; n <= max_n; ++n) {
    const ClassResult cls = class_of(family_W(n));
    const DominantForm d = dominant_form(cls);
    const Bracket expected = make_ladder(2, 1, 6 * n + 1);
    VerificationCheck c{"leader(W(" + std::to_string(n) + "))", "n=" + std::to_string(n),
                        d.certified && d.leader == expected && d.coefficient == 1,
                        "leader " + d.leader.render() + ", coefficient " + d.coefficient.str(), {}};
    if (d.certified) detail::attach_certificate(c, d.certificate, cert_dir, "leader_W" + std::to_string(n));
    rep.checks.push_back(std::move(c));
  }

  const std::int64_t max_m = std::max<std::int64_t>(13, 6 * max_n + 5);
  auto head = [&](HeadFamily f, std::int64_t m) {
    const HeadCheck h = check_head_decomposition(f, m);
    VerificationCheck c{"head " + to_string(f), "m=" + std::to_string(m), h.holds, h.report, {}};
    if (h.certificate) {
      detail::attach_certificate(c, *h.certificate, cert_dir,
                                 "head_plus" + std::to_string(head_offset(f)) + "_m" + std::to_string(m));
    }
    rep.checks.push_back(std::move(c));
  };
  for (std::int64_t m = 7; m <= max_m; ++m) {
    if (m % 3 != 0) head(HeadFamily::kPlus3, m);
  }
  for (std::int64_t m = 5; m <= max_m; m += 2) head(HeadFamily::kPlus2, m);
  for (std::int64_t m = 3; m <= max_m; ++m) head(HeadFamily::kPlus1, m);

  if (max_n >= 1) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= max_n; ++n) ns.push_back(n);
    VerificationCheck c{"independence chain", "n=1.." + std::to_string(max_n), true, {}, {}};
    try {
      const Certificate cert = independence_certify(ns);
      c.detail = std::to_string(ns.size() - 1) + " links";
      detail::attach_certificate(c, cert, cert_dir, "independence");
    } catch (const std::runtime_error& e) {
      c.pass = false;
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace knotconc
