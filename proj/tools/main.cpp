#include "knotconc/certificate_check.hpp"
#include "knotconc/epsilon.hpp"
#include "knotconc/phi.hpp"
#include "knotconc/staircase.hpp"
#include "knotconc/upsilon.hpp"
#include "knotconc/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace knotconc;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

Json pl_json(const PLFunction& f) {
  Json pts = Json::array();
  for (const auto& p : f.breakpoints()) pts.push_back(Json::array({to_string(p.t), to_string(p.v)}));
  return {{"breakpoints", pts}};
}

Json phi_json(const PhiSequence& s) {
  Json out = Json::object();
  for (const auto& [j, v] : s.entries()) out[std::to_string(j)] = bigint_to_json(v);
  return out;
}

int run_staircase(std::int64_t p, std::int64_t q, bool json) {
  const TorusKnot k = make_torus_knot(p, q);
  const StaircaseParams sp = staircase_of(k);
  const Bracket b(first_half(sp));
  if (json) {
    Json gens = Json::array();
    for (const auto& g : generator_filtration(sp)) gens.push_back(Json::array({g.index, g.level.i, g.level.j}));
    std::cout << Json{{"knot", k.render()},
                      {"genus", sp.genus()},
                      {"steps", sp.steps()},
                      {"bracket", b.to_json()},
                      {"generators", gens}}
                     .dump()
              << '\n';
    return kOk;
  }
  std::string steps;
  for (auto s : sp.steps()) steps += (steps.empty() ? "" : ",") + std::to_string(s);
  std::cout << k.render() << "  genus " << sp.genus() << '\n'
            << "staircase (" << steps << ")\n"
            << "bracket " << b.render() << '\n';
  for (const auto& g : generator_filtration(sp)) {
    std::cout << "  x" << g.index << " at (" << g.level.i << "," << g.level.j << ")\n";
  }
  return kOk;
}

int run_upsilon(const std::string& expr, std::optional<std::size_t> samples, bool json) {
  const PLFunction f = upsilon_of(parse_formula(expr));
  if (samples) {
    const auto pts = f.samples(*samples);
    if (json) {
      Json out = Json::array();
      for (const auto& [t, v] : pts) out.push_back(Json::array({t, v}));
      std::cout << Json{{"samples", out}}.dump() << '\n';
    } else {
      std::cout << "t,upsilon\n";
      for (const auto& [t, v] : pts) std::cout << t << ',' << v << '\n';
    }
    return kOk;
  }
  if (json) {
    std::cout << pl_json(f).dump() << '\n';
  } else {
    for (const auto& line : render_pieces(f)) std::cout << line << '\n';
  }
  return kOk;
}

int run_phi(const std::string& expr, bool json) {
  const PhiSequence s = phi_of(parse_formula(expr));
  if (json) {
    std::cout << phi_json(s).dump() << '\n';
  } else {
    std::cout << "phi " << s.render() << '\n' << "sequence " << s.render_padded() << '\n';
  }
  return kOk;
}

int run_epsilon(const std::string& expr, bool show_cert, const std::string& cert_out, bool json) {
  const KnotFormula f = parse_formula(expr);
  const EpsilonResult e = epsilon_sign(f);
  if (!cert_out.empty() && e.certificate) {
    std::ofstream out(cert_out);
    if (!out) {
      std::cerr << "error: cannot write " << cert_out << '\n';
      return kUsage;
    }
    out << e.certificate->to_json().dump(1) << '\n';
  }
  if (json) {
    Json out = {{"formula", f.render()}, {"sign", to_string(e.sign)}, {"class", e.cls.expr.to_json()}};
    if (e.dominant) {
      out["leader"] = e.dominant->leader.to_json();
      out["leader_coefficient"] = bigint_to_json(e.dominant->coefficient);
      out["certified"] = e.dominant->certified;
      if (e.dominant->unresolved) {
        out["unresolved"] = Json::array({e.dominant->unresolved->first.to_json(), e.dominant->unresolved->second.to_json()});
      }
    }
    if (show_cert && e.certificate) out["certificate"] = e.certificate->to_json();
    std::cout << out.dump() << '\n';
    return kOk;
  }
  switch (e.sign) {
    case EpsilonResult::Sign::kZero:
      std::cout << "epsilon sign: 0, class cancels to zero\n";
      break;
    case EpsilonResult::Sign::kUndecided:
      std::cout << "epsilon sign: undecided";
      if (e.dominant && e.dominant->unresolved) {
        std::cout << ", cannot order " << e.dominant->unresolved->first.render() << " against "
                  << e.dominant->unresolved->second.render();
      }
      std::cout << '\n';
      break;
    default:
      std::cout << "epsilon sign: " << to_string(e.sign) << ", leader " << e.dominant->leader.render();
      if (e.dominant->coefficient != 1) std::cout << " (coefficient " << e.dominant->coefficient.str() << ")";
      std::cout << '\n';
  }
  std::cout << "class: " << e.cls.expr.render() << '\n';
  if (show_cert && e.certificate) std::cout << e.certificate->to_json().dump(1) << '\n';
  return kOk;
}

void print_report(const VerificationReport& rep, bool grouped) {
  if (grouped) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    std::vector<std::string> order;
    for (const auto& c : rep.checks) {
      if (!counts.count(c.id)) order.push_back(c.id);
      auto& [pass, total] = counts[c.id];
      ++total;
      if (c.pass) ++pass;
    }
    for (const auto& id : order) {
      const auto [pass, total] = counts[id];
      std::cout << id << ": " << pass << "/" << total << " : " << (pass == total ? "pass" : "fail") << '\n';
    }
    for (const auto& c : rep.checks) {
      if (!c.pass) std::cout << "  FAIL " << c.id << " [" << c.parameters << "] " << c.detail << '\n';
    }
  } else {
    for (const auto& c : rep.checks) {
      std::cout << c.id << " : " << (c.pass ? "pass" : "fail") << "  [" << c.parameters << "]";
      if (!c.detail.empty()) std::cout << " " << c.detail;
      std::cout << '\n';
    }
  }
  std::cout << "overall: " << (rep.passed() ? "pass" : "fail") << " (" << rep.checks.size() << " checks, "
            << rep.failures() << " failed)\n";
}

int emit_report(const VerificationReport& rep, bool json, bool grouped) {
  if (json) {
    std::cout << rep.to_json().dump() << '\n';
  } else {
    print_report(rep, grouped);
  }
  return rep.passed() ? kOk : kFailed;
}

int run_check_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what() << '\n';
    return kUsage;
  }
  if (j.is_object() && j.contains("certificate") && !j.contains("rule")) j = j["certificate"];
  Certificate cert;
  try {
    cert = Certificate::from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << " is not a certificate: " << e.what() << '\n';
    return kUsage;
  }
  const CheckResult r = check_certificate(cert);
  if (r.holds) {
    std::cout << r.report << '\n';
    return kOk;
  }
  std::cout << "invalid: " << r.report << '\n';
  return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus knot concordance invariants: staircases, Upsilon, phi and certified epsilon classes"};
  app.require_subcommand(1);

  bool json = false;

  std::int64_t p = 0, q = 0;
  auto* st = app.add_subcommand("staircase", "Staircase, generators and bracket of T(p,q)");
  st->add_option("p", p)->required();
  st->add_option("q", q)->required();
  st->add_flag("--json", json, "Machine-readable output");

  std::string expr;
  std::size_t n_samples = 0;
  auto* up = app.add_subcommand("upsilon", "Upsilon of a formula as exact breakpoints or CSV samples");
  up->add_option("expr", expr, "Formula, e.g. \"T(3,4) - 2*T(2,3)\" or \"W(1)\"")->required();
  auto* bp_flag = up->add_flag("--breakpoints", "Print linear pieces (default)");
  auto* samples_opt = up->add_option("--samples", n_samples, "Evenly spaced samples on [0,2]")->check(CLI::Range(2, 1000000));
  bp_flag->excludes(samples_opt);
  up->add_flag("--json", json, "Machine-readable output");

  auto* ph = app.add_subcommand("phi", "phi sequence of a formula");
  ph->add_option("expr", expr)->required();
  ph->add_flag("--json", json, "Machine-readable output");

  bool show_cert = false;
  std::string cert_out;
  auto* ep = app.add_subcommand("epsilon", "Certified epsilon sign and class decomposition");
  ep->add_option("expr", expr)->required();
  ep->add_flag("--certificate", show_cert, "Print the certificate");
  ep->add_option("--certificate-out", cert_out, "Write the certificate to a file");
  ep->add_flag("--json", json, "Machine-readable output");

  auto* ve = app.add_subcommand("verify", "Batch verification suites");
  ve->require_subcommand(1);
  std::int64_t max_n = 0;
  std::string cert_dir;
  auto* vf = ve->add_subcommand("family", "Vanishing, leaders, head decompositions and independence of W(n)");
  vf->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 50));
  vf->add_option("--certificate-dir", cert_dir, "Write every certificate here");
  vf->add_flag("--json", json, "Machine-readable output");
  std::int64_t max_p = 12, max_k = 4;
  auto* vr = ve->add_subcommand("recursions", "Staircase, window and recursion identities on a grid");
  vr->add_option("--max-p", max_p)->required()->check(CLI::Range(2, 200));
  vr->add_option("--max-k", max_k)->required()->check(CLI::Range(0, 50));
  vr->add_flag("--json", json, "Machine-readable output");

  std::string cert_path;
  auto* cc = app.add_subcommand("check-certificate", "Replay a certificate file");
  cc->add_option("file", cert_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (st->parsed()) return run_staircase(p, q, json);
    if (up->parsed()) return run_upsilon(expr, samples_opt->count() ? std::optional<std::size_t>(n_samples) : std::nullopt, json);
    if (ph->parsed()) return run_phi(expr, json);
    if (ep->parsed()) return run_epsilon(expr, show_cert, cert_out, json);
    if (vf->parsed()) {
      std::optional<std::filesystem::path> dir;
      if (!cert_dir.empty()) dir = cert_dir;
      return emit_report(verify_family(max_n, dir), json, false);
    }
    if (vr->parsed()) return emit_report(verify_recursions(max_p, max_k), json, true);
    if (cc->parsed()) return run_check_certificate(cert_path);
  } catch (const FormulaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
