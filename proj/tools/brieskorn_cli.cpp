// brieskorn: command-line front end for the invariants library.
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 computation error, 2 usage/validation error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brieskorn/classify.hpp"
#include "brieskorn/floer_tables.hpp"
#include "brieskorn/mec.hpp"
#include "brieskorn/search.hpp"
#include "brieskorn/signature.hpp"
#include "brieskorn/topology.hpp"

using namespace brieskorn;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  int jobs = 0;
  std::optional<std::uint64_t> budget;

  CountOptions counts() const {
    CountOptions o;
    o.jobs = jobs;
    if (budget) {
      o.budget = *budget;
    } else if (const char* env = std::getenv("BRIESKORN_BUDGET")) {
      o.budget = std::stoull(env);
    }
    return o;
  }
};

// --- rendering helpers ------------------------------------------------------

std::string human(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  return to_string(q) + " (~" + to_decimal(q) + ")";
}

Json json_rational(const Rational& q) {
  return Json{{"num", to_string(Integer(q.get_num()))}, {"den", to_string(Integer(q.get_den()))}};
}

Json json_tuple(const ExponentTuple& a) { return Json(std::vector<std::int64_t>(a.begin(), a.end())); }

Json json_counts(const SignatureCount& c) {
  return Json{{"sigma_plus", c.sigma_plus},
              {"sigma_minus", c.sigma_minus},
              {"sigma_zero", c.sigma_zero},
              {"mu", c.mu},
              {"sigma", c.signature()}};
}

Json json_ac(const AcClass& c) {
  Json j{{"group", to_string(c.group.shape)}, {"primary", to_string(c.primary)}};
  if (c.secondary) j["secondary"] = *c.secondary;
  if (c.group.modulus) j["modulus"] = to_string(*c.group.modulus);
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_counts(const SignatureCount& c) {
  std::cout << "mu        " << c.mu << "\n"
            << "sigma+    " << c.sigma_plus << "\n"
            << "sigma-    " << c.sigma_minus << "\n"
            << "sigma0    " << c.sigma_zero << "\n"
            << "sigma     " << c.signature() << "\n";
}

// Runs f and turns an inapplicable section into a message instead of a failure.
template <class F>
std::optional<std::string> section(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

// --- subcommands -------------------------------------------------------------

int cmd_signature(const Globals& g, const ExponentTuple& a, const std::string& method) {
  const auto opts = g.counts();
  if (method == "clt") {
    const auto est = signature_estimate_clt(a);
    if (g.json) {
      print_json(Json{{"exponents", json_tuple(a)},
                      {"method", "clt"},
                      {"sigma_plus", est.sigma_plus},
                      {"sigma_minus", est.sigma_minus},
                      {"mean", est.mean},
                      {"variance", est.variance},
                      {"degenerate", est.degenerate}});
    } else {
      std::cout << "exponents " << a.to_string() << "\n"
                << "estimate  (heuristic, normal approximation)\n"
                << "sigma+    ~" << est.sigma_plus << "\n"
                << "sigma-    ~" << est.sigma_minus << "\n";
    }
    return 0;
  }
  const SignatureCount c = method == "naive" ? signature_counts_naive(a, opts) : signature_counts_fast(a, opts);
  if (g.json) {
    Json j{{"exponents", json_tuple(a)}, {"method", method}};
    j.update(json_counts(c));
    print_json(j);
  } else {
    std::cout << "exponents " << a.to_string() << "\n";
    print_counts(c);
  }
  return 0;
}

Json mec_json(const MecResult& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back(Json{{"subtuple", json_tuple(s.sub)},
                          {"period", s.L},
                          {"dim", s.dim},
                          {"rs", s.rs},
                          {"chi_s1", s.chi_s1},
                          {"frequency", s.frequency},
                          {"sign", s.sign},
                          {"contribution", to_string(s.contribution())}});
  }
  return Json{{"mu_principal", r.mu_principal}, {"strata", strata}, {"chi_m", json_rational(r.value)}};
}

void print_mec(const MecResult& r) {
  std::cout << std::left << std::setw(28) << "stratum" << std::right << std::setw(12) << "period" << std::setw(8)
            << "rs" << std::setw(8) << "chiS1" << std::setw(12) << "frequency" << std::setw(6) << "sign"
            << std::setw(14) << "contribution" << "\n";
  for (const auto& s : r.strata) {
    std::cout << std::left << std::setw(28) << ("Sigma" + s.sub.to_string()) << std::right << std::setw(12) << s.L
              << std::setw(8) << s.rs << std::setw(8) << s.chi_s1 << std::setw(12) << s.frequency << std::setw(6)
              << (s.sign > 0 ? "+" : "-") << std::setw(14) << to_string(s.contribution()) << "\n";
  }
  std::cout << "mu_P      " << r.mu_principal << "\n"
            << "chi_m     " << human(r.value) << "\n";
}

int cmd_chi_m(const Globals& g, const ExponentTuple& a) {
  const auto r = mean_euler_characteristic(a, g.jobs);
  if (g.json) {
    Json j{{"exponents", json_tuple(a)}};
    j.update(mec_json(r));
    print_json(j);
  } else {
    std::cout << "exponents " << a.to_string() << "\n";
    print_mec(r);
  }
  return 0;
}

int cmd_classify(const Globals& g, const ExponentTuple& a) {
  const auto opts = g.counts();
  const DiffeoClass dc = diffeo_class(a, opts);
  Json j{{"exponents", json_tuple(a)}, {"dimension", dc.dimension}};
  std::ostringstream text;
  text << "exponents " << a.to_string() << "\n"
       << "dimension " << dc.dimension << "\n";

  if (a.n() >= 3) {
    const auto v = sphere_criterion(a);
    j["sphere"] = v.is_sphere;
    j["sphere_condition"] = to_string(v.condition);
    j["witness"] = v.witness;
    text << "sphere    " << (v.is_sphere ? "yes" : "no") << " (" << to_string(v.condition) << ")\n";
  } else {
    j["sphere"] = nullptr;
    text << "sphere    not applicable (n < 3)\n";
  }
  if (dc.bp_index) {
    j["bp_index"] = to_string(*dc.bp_index);
    j["standard_smooth"] = *dc.is_standard_smooth;
    text << "bP index  " << to_string(*dc.bp_index) << (*dc.is_standard_smooth ? " (standard)" : " (exotic)") << "\n";
  }
  AcClass ac = make_ac_class(ac_group(std::max(a.n(), 2)), 0);
  if (auto err = section([&] { ac = almost_contact_class(a, opts); })) {
    j["ac"] = nullptr;
    j["ac_note"] = *err;
    text << "ac        not applicable: " << *err << "\n";
  } else {
    j["ac"] = json_ac(ac);
    j["homotopically_standard"] = ac.is_zero();
    text << "ac        " << ac.to_string() << " in " << to_string(ac.group.shape) << "\n";
  }
  if (g.json)
    print_json(j);
  else
    std::cout << text.str();
  return 0;
}

int cmd_invariants(const Globals& g, const ExponentTuple& a) {
  const auto opts = g.counts();
  const SignatureCount c = signature_counts_fast(a, opts);
  Json j{{"exponents", json_tuple(a)}, {"dimension", a.dimension()}};
  j.update(json_counts(c));
  std::ostringstream text;
  text << "exponents " << a.to_string() << "\n"
       << "dimension " << a.dimension() << "\n"
       << "mu        " << c.mu << "\n"
       << "sigma+    " << c.sigma_plus << "\n"
       << "sigma-    " << c.sigma_minus << "\n"
       << "sigma0    " << c.sigma_zero << "\n"
       << "sigma     " << c.signature() << "\n";

  if (a.n() >= 3) {
    const auto v = sphere_criterion(a);
    j["sphere"] = v.is_sphere;
    text << "sphere    " << (v.is_sphere ? "yes" : "no") << "\n";
    if (v.is_sphere && a.n() % 2 == 0) {
      const DiffeoClass dc = diffeo_class(a, opts);
      j["bp_index"] = to_string(*dc.bp_index);
      j["standard_smooth"] = *dc.is_standard_smooth;
      text << "bP index  " << to_string(*dc.bp_index) << (*dc.is_standard_smooth ? " (standard)" : " (exotic)")
           << "\n";
    }
  } else {
    j["sphere"] = nullptr;
    text << "sphere    not applicable (n < 3)\n";
  }

  AcClass ac = make_ac_class(ac_group(std::max(a.n(), 2)), 0);
  if (auto err = section([&] { ac = almost_contact_class(a, opts); })) {
    j["ac"] = nullptr;
    text << "ac        not applicable\n";
  } else {
    j["ac"] = json_ac(ac);
    text << "ac        " << ac.to_string() << "\n";
  }

  MecResult mec;
  if (auto err = section([&] { mec = mean_euler_characteristic(a, g.jobs); })) {
    j["chi_m"] = nullptr;
    j["chi_m_note"] = *err;
    text << "chi_m     not defined: " << *err << "\n";
  } else {
    j["chi_m"] = json_rational(mec.value);
    text << "chi_m     " << human(mec.value) << "\n";
  }
  if (g.json)
    print_json(j);
  else
    std::cout << text.str();
  return 0;
}

Json table_json(const std::string& kind, const GradedRankTable& t) {
  Json ranks = Json::object();
  for (const auto& [d, r] : t.ranks()) ranks[std::to_string(d)] = r;
  return Json{{"kind", kind}, {"max_degree", t.max_degree()}, {"coefficients", t.coefficient_label()}, {"ranks", ranks}};
}

void print_table(const GradedRankTable& t) {
  std::cout << "degree  rank   (" << t.coefficient_label() << ")\n";
  for (const auto& [d, r] : t.ranks()) std::cout << std::setw(6) << d << "  " << r << "\n";
}

int cmd_sh_table(const Globals& g, const std::string& kind, std::int64_t ell, int n, std::int64_t max_degree,
                 std::int64_t p) {
  if (kind == "generators") {
    if (n != 3) throw Error(ErrorCode::BadDimension, "generator table is for n = 3");
    const auto gens = generator_table(ell, max_degree);
    if (g.json) {
      Json arr = Json::array();
      for (const auto& e : gens)
        arr.push_back(Json{{"degree", e.degree}, {"orbit", e.label.to_string()}, {"critical", e.is_max ? "max" : "min"}});
      print_json(Json{{"kind", kind}, {"ell", ell}, {"max_degree", max_degree}, {"generators", arr}});
    } else {
      std::cout << "degree  generator\n";
      for (const auto& e : gens)
        std::cout << std::setw(6) << e.degree << "  " << e.label.to_string() << (e.is_max ? "_M" : "_m") << "\n";
    }
    return 0;
  }
  if (kind == "lp-known") {
    const auto t = sh_plus_lp_known(ell, p);
    if (g.json) {
      Json ranks = Json::object();
      for (const auto& [d, r] : t.known) ranks[std::to_string(d)] = r;
      print_json(Json{{"kind", kind}, {"coefficients", t.coefficient_label}, {"ranks", ranks}});
    } else {
      std::cout << "degree  rank   (" << t.coefficient_label << ", known degrees only)\n";
      for (const auto& [d, r] : t.known) std::cout << std::setw(6) << d << "  " << r << "\n";
    }
    return 0;
  }

  std::optional<GradedRankTable> table;
  if (kind == "chain")
    table = sc_plus_ranks(ell, n, max_degree);
  else if (kind == "homology")
    table = n == 3 ? sh_plus_dim5(ell, max_degree) : sh_plus_high_dim(ell, n, max_degree);
  else if (kind == "ch")
    table = ch_ranks_lp(p, max_degree);
  else if (kind == "relative")
    table = relative_homology_ranks(ell, n);
  else
    throw Error(ErrorCode::InvalidArgument, "unknown table kind " + kind);

  if (g.json)
    print_json(table_json(kind, *table));
  else
    print_table(*table);
  return 0;
}

Json hit_json(const SearchHit& h) {
  return Json{{"s", h.s},
              {"exponents", json_tuple(h.tuple)},
              {"sigma_plus", h.sigma.sigma_plus},
              {"sigma_minus", h.sigma.sigma_minus},
              {"sphere", h.sphere},
              {"ac_zero", h.ac_zero}};
}

int cmd_search(const Globals& g, std::int64_t s_min, std::int64_t s_max) {
  SearchOptions opts;
  opts.jobs = g.jobs;
  opts.on_s_done = [&](std::int64_t, const std::vector<SearchHit>& hits) {
    for (const auto& h : hits) {
      if (g.json) {
        std::cout << hit_json(h).dump() << "\n";
      } else {
        std::cout << "s=" << std::left << std::setw(4) << h.s << std::right << "Sigma" << h.tuple.to_string()
                  << "  sigma+=" << h.sigma.sigma_plus << " sigma-=" << h.sigma.sigma_minus
                  << (h.ac_zero ? "  ac=0" : "") << "\n";
      }
    }
    std::cout.flush();
  };
  const auto hits = search_exotic_spheres(s_min, s_max, opts);
  if (!g.json) std::cout << hits.size() << " hit(s) for s in [" << s_min << "," << s_max << "]\n";
  return 0;
}

int cmd_combo(const Globals& g, const ExponentTuple& s1, const ExponentTuple& s2) {
  const auto r = find_trivial_ac_combo(s1, s2, g.counts());
  if (g.json) {
    print_json(Json{{"sigma1", json_tuple(r.sigma1)},
                    {"sigma2", json_tuple(r.sigma2)},
                    {"ac1", to_string(r.ac1)},
                    {"ac2", to_string(r.ac2)},
                    {"gcd", to_string(r.gcd)},
                    {"count1", to_string(r.count1)},
                    {"count2", to_string(r.count2)},
                    {"chi1", json_rational(r.chi1)},
                    {"chi2", json_rational(r.chi2)},
                    {"chi_m", json_rational(r.chi_m)},
                    {"ac_total", json_ac(r.ac_total)},
                    {"nontrivial", r.nontrivial}});
  } else {
    std::cout << "Sigma1    " << r.sigma1.to_string() << "  ac1 = " << to_string(r.ac1) << "\n"
              << "Sigma2    " << r.sigma2.to_string() << "  ac2 = " << to_string(r.ac2) << "\n"
              << "recipe    " << to_string(r.count1) << " Sigma1 # " << to_string(r.count2)
              << " Sigma2  (gcd " << to_string(r.gcd) << ")\n"
              << "chi_m(1)  " << human(r.chi1) << "\n"
              << "chi_m(2)  " << human(r.chi2) << "\n"
              << "chi_m     " << human(r.chi_m) << "\n"
              << "ac total  " << r.ac_total.to_string() << "\n"
              << "exotic    " << (r.nontrivial ? "yes (chi_m != -1/2)" : "not detected") << "\n";
  }
  return 0;
}

int cmd_family(const Globals& g, const ExponentTuple& base, std::optional<std::int64_t> modulus, int sign,
               std::int64_t k) {
  const auto opts = g.counts();
  const std::int64_t mod = modulus.value_or(lcm_of(base.exponents()));
  const FamilySignature law = family_signature(base, mod, sign, opts);
  const ExponentTuple member = law.member(k);
  const SignatureCount c = law.at(k);
  std::optional<AcClass> ac;
  if (member.n() % 2 == 0 && member.n() >= 3 && sphere_criterion(member).is_sphere) {
    const Integer sigma(static_cast<long>(c.signature()));
    const Integer order = sigma_m_const(member.n() / 2) / 8;
    if (sigma % 8 == 0 && Integer(sigma / 8) % order == 0) ac = morita_formula(member.n(), sigma, milnor_number(member));
  }
  if (g.json) {
    Json j{{"base", json_tuple(base)}, {"modulus", mod}, {"sign", sign}, {"k", k}, {"member", json_tuple(member)}};
    j.update(json_counts(c));
    j["per_k"] = json_counts(law.per_k);
    j["offset"] = json_counts(law.offset);
    j["ac"] = ac ? json_ac(*ac) : Json(nullptr);
    print_json(j);
  } else {
    std::cout << "family    a0(k) = " << mod << "k" << (sign > 0 ? "+1" : "-1") << " over " << base.to_string() << "\n"
              << "member    " << member.to_string() << "\n";
    print_counts(c);
    std::cout << "per k     sigma+ " << law.per_k.sigma_plus << ", sigma- " << law.per_k.sigma_minus << "\n"
              << "ac        " << (ac ? ac->to_string() : std::string("not applicable")) << "\n";
  }
  return 0;
}

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::EntryTooSmall:
    case ErrorCode::TooShort:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidFamily:
    case ErrorCode::NotCommonMultiple:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Brieskorn manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t budget = 0;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--jobs", g.jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  auto* budget_opt = app.add_option("--budget", budget, "enumeration budget in tuple visits");

  std::vector<std::int64_t> exps;
  auto add_exps = [&](CLI::App* sub) { sub->add_option("exponents", exps, "a_0 ... a_n")->required(); };

  auto* inv = app.add_subcommand("invariants", "all invariants of Sigma(a)");
  add_exps(inv);

  std::string method = "fast";
  auto* sig = app.add_subcommand("signature", "sigma+, sigma-, sigma0 of the Milnor filling");
  add_exps(sig);
  sig->add_option("--method", method)->check(CLI::IsMember({"fast", "naive", "clt"}));

  auto* chi = app.add_subcommand("chi-m", "mean Euler characteristic with per-stratum audit");
  add_exps(chi);

  auto* cls = app.add_subcommand("classify", "sphere, diffeomorphism and almost contact class");
  add_exps(cls);

  std::string kind = "homology";
  std::int64_t ell = 2, max_degree = 20, p = 2;
  int n = 3;
  auto* sh = app.add_subcommand("sh-table", "graded rank tables");
  sh->add_option("--kind", kind)->check(CLI::IsMember({"chain", "homology", "generators", "ch", "relative", "lp-known"}));
  sh->add_option("--ell", ell);
  sh->add_option("--n", n);
  sh->add_option("--max-degree", max_degree);
  sh->add_option("--p", p);

  std::int64_t s_min = 1, s_max = 1;
  auto* srch = app.add_subcommand("search", "search for exotic homotopically standard 7-spheres");
  srch->add_option("--s-min", s_min)->required();
  srch->add_option("--s-max", s_max)->required();

  std::vector<std::int64_t> e1, e2;
  auto* combo = app.add_subcommand("combo", "connected sum with trivial almost contact class");
  combo->add_option("--sigma1", e1)->required();
  combo->add_option("--sigma2", e2)->required();

  std::vector<std::int64_t> base;
  std::int64_t modulus = 0, k = 1;
  int sign = 1;
  auto* fam = app.add_subcommand("family", "member k of a0(k) = k*modulus + sign");
  fam->add_option("--base", base)->required();
  auto* mod_opt = fam->add_option("--modulus", modulus);
  fam->add_option("--sign", sign)->check(CLI::IsMember({-1, 1}));
  fam->add_option("--k", k)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (budget_opt->count() > 0) g.budget = budget;

  try {
    if (*inv) return cmd_invariants(g, ExponentTuple(exps));
    if (*sig) return cmd_signature(g, ExponentTuple(exps), method);
    if (*chi) return cmd_chi_m(g, ExponentTuple(exps));
    if (*cls) return cmd_classify(g, ExponentTuple(exps));
    if (*sh) return cmd_sh_table(g, kind, ell, n, max_degree, p);
    if (*srch) return cmd_search(g, s_min, s_max);
    if (*combo) return cmd_combo(g, ExponentTuple(e1), ExponentTuple(e2));
    if (*fam)
      return cmd_family(g, ExponentTuple(base), mod_opt->count() ? std::optional(modulus) : std::nullopt, sign, k);
  } catch (const Error& e) {
    std::cerr << "brieskorn: " << e.what() << "\n";
    return usage_code(e.code()) ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "brieskorn: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
