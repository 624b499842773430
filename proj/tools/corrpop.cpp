// Command-line front end: enumeration, population counts, realization,
// lattice structure, border statistics, and a self-verification report.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrpop/analytics.hpp"
#include "corrpop/lattice.hpp"
#include "corrpop/population.hpp"
#include "corrpop/realize.hpp"

using json = nlohmann::ordered_json;
using namespace corrpop;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBudget = 4;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CORRPOP_BUDGET_CAP")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("CORRPOP_BUDGET_CAP is not a number");
    }
  }
  return kDefaultBruteBudget;
}

std::string rat_str(const BigRat& r, int digits = 12) {
  // Fixed-point decimal, round half up.
  BigInt scale = pow_int(10, static_cast<std::size_t>(digits));
  BigInt num = boost::multiprecision::numerator(r) * scale * 2;
  BigInt den = boost::multiprecision::denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scaled = (num / den + 1) / 2;
  std::string s = scaled.str();
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

std::string rat_exact(const BigRat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

void emit_members(const std::vector<Correlation>& members,
                  const std::string& format, const std::string& key) {
  if (format == "csv") {
    std::cout << key << "\n";
    for (const auto& m : members) std::cout << m.str() << "\n";
  } else {
    json out = json::array();
    for (const auto& m : members) out.push_back(m.str());
    std::cout << json{{key, out}}.dump(2) << "\n";
  }
}

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

std::vector<VerifyCheck> run_verify(std::size_t n, unsigned sigma,
                                    const BruteOptions& opts) {
  std::vector<VerifyCheck> checks;
  DeltaSet delta = enumerate_delta(n);
  auto brute = brute_population_table(n, sigma, opts);
  auto g_table = brute_g_table(n, sigma, opts);

  VerifyCheck agree{"method-agreement", true, ""};
  VerifyCheck ptg{"p(t)=g(t)", true, ""};
  VerifyCheck round{"realization-round-trip", true, ""};
  BigInt sum = 0;
  for (const Correlation& t : delta.members) {
    BigInt r1 = pop_corr(t, sigma, PopMethod::rec1);
    BigInt r2 = pop_corr(t, sigma, PopMethod::rec2);
    BigInt r3 = pop_corr(t, sigma, PopMethod::nfc);
    BigInt b = brute.count(t) ? brute.at(t) : BigInt(0);
    if (!(r1 == r2 && r2 == r3 && r3 == b)) {
      agree.pass = false;
      agree.details += t.str() + " ";
    }
    BigInt g = g_table.count(t) ? g_table.at(t) : BigInt(0);
    if (r1 != g) {
      ptg.pass = false;
      ptg.details += t.str() + " ";
    }
    if (!verify_realization(t, realize_correlation(t))) {
      round.pass = false;
      round.details += t.str() + " ";
    }
    sum += r1;
  }
  agree.details = agree.pass ? std::to_string(delta.members.size()) +
                                   " correlations checked"
                             : "mismatch at " + agree.details;
  checks.push_back(agree);
  checks.push_back(ptg);
  checks.push_back(round);

  VerifyCheck norm{"normalization", sum == pow_int(sigma, 2 * n),
                   "sum = " + sum.str()};
  checks.push_back(norm);

  // p_r(t) against the brute-force count of admissible right words.
  VerifyCheck right{"right-population", true, ""};
  std::map<Correlation, std::set<Word>> right_words;
  for (const Correlation& t : delta.members)
    if (t.leading_zeros() < n) right_words[t] = {};
  {
    std::vector<std::pair<Word, Word>> all;
    for (const Correlation& t : delta.members) {
      if (t.leading_zeros() == n) continue;
      for (const auto& [u, v] : brute_population_pairs(t, sigma, opts))
        right_words[t].insert(v);
    }
  }
  for (auto& [t, words] : right_words) {
    if (pop_right(t, sigma) != BigInt(words.size())) {
      right.pass = false;
      right.details += t.str() + " ";
    }
  }
  if (right.pass)
    right.details = std::to_string(right_words.size()) + " correlations checked";
  checks.push_back(right);
  return checks;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"correlations of word pairs: enumeration, exact population "
               "sizes, realization, and border statistics"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  std::uint64_t budget = default_budget();
  app.add_option("--budget", budget, "brute-force enumeration cap");
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for brute force");

  // gamma / delta / card
  std::size_t n_gamma = 0, n_delta = 0, n_card = 0;
  auto* cmd_gamma = app.add_subcommand("gamma", "enumerate Gamma_n");
  cmd_gamma->add_option("n", n_gamma)->required();
  auto* cmd_delta = app.add_subcommand("delta", "enumerate Delta_n");
  cmd_delta->add_option("n", n_delta)->required();
  auto* cmd_card = app.add_subcommand("card", "cardinalities up to n_max");
  cmd_card->add_option("n_max", n_card)->required();

  // pop
  std::string pop_corr_text, pop_method = "rec1";
  unsigned pop_sigma = 2;
  auto* cmd_pop = app.add_subcommand("pop", "population size of a correlation");
  cmd_pop->add_option("--corr", pop_corr_text)->required();
  cmd_pop->add_option("--sigma", pop_sigma);
  cmd_pop->add_option("--method", pop_method)
      ->check(CLI::IsMember({"rec1", "rec2", "nfc", "brute"}));

  // pop-table
  std::size_t pt_n = 0;
  std::vector<unsigned> pt_sigmas;
  auto* cmd_pt = app.add_subcommand("pop-table", "population table for Delta_n");
  cmd_pt->add_option("n", pt_n)->required();
  cmd_pt->add_option("--sigma", pt_sigmas, "alphabet size (repeatable)");

  // realize
  std::string rz_text;
  bool rz_auto = false;
  auto* cmd_rz = app.add_subcommand("realize", "witness pair for a correlation");
  cmd_rz->add_option("bits", rz_text)->required();
  cmd_rz->add_flag("--auto", rz_auto, "realize as an autocorrelation");

  // lattice
  std::size_t lat_n = 0;
  bool lat_gamma = false, lat_jd = false;
  std::string lat_dot;
  auto* cmd_lat = app.add_subcommand("lattice", "Hasse diagram of Delta_n");
  cmd_lat->add_option("n", lat_n)->required();
  cmd_lat->add_flag("--gamma", lat_gamma, "use Gamma_n instead of Delta_n");
  cmd_lat->add_flag("--check-jd", lat_jd, "check the Jordan-Dedekind condition");
  cmd_lat->add_option("--dot", lat_dot, "write DOT text to a file");

  // borders
  std::size_t bd_n = 0;
  unsigned bd_sigma = 2;
  std::string bd_range;
  auto* cmd_bd = app.add_subcommand("borders", "longest-border counts L_j");
  cmd_bd->add_option("n", bd_n)->required();
  cmd_bd->add_option("--sigma", bd_sigma);
  cmd_bd->add_option("--range", bd_range, "sum L_j over i:k");

  // expect
  std::size_t ex_n = 0;
  unsigned ex_sigma = 2, ex_threshold = 4;
  bool ex_equal = false;
  auto* cmd_ex = app.add_subcommand("expect", "expected longest border length");
  cmd_ex->add_option("n", ex_n)->required();
  cmd_ex->add_option("--sigma", ex_sigma);
  cmd_ex->add_option("--J", ex_threshold, "threshold for the asymptotic bounds");
  cmd_ex->add_flag("--include-equal-pairs", ex_equal,
                   "add the u = v mass at length n");

  // ratio
  std::string rt_suffix;
  unsigned rt_sigma = 2;
  std::size_t rt_nmax = 0, rt_precision = 64;
  auto* cmd_rt = app.add_subcommand("ratio", "asymptotic population ratios");
  cmd_rt->add_option("--suffix", rt_suffix, "fixed suffix s (empty = epsilon)");
  cmd_rt->add_option("--sigma", rt_sigma);
  cmd_rt->add_option("--n-max", rt_nmax, "also probe exact ratios up to n");
  cmd_rt->add_option("--precision", rt_precision, "series truncation length");

  // verify
  std::size_t vf_n = 0;
  unsigned vf_sigma = 2;
  auto* cmd_vf = app.add_subcommand("verify", "cross-check all identities at n");
  cmd_vf->add_option("n", vf_n)->required();
  cmd_vf->add_option("--sigma", vf_sigma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  BruteOptions opts{budget, threads};

  if (*cmd_gamma) {
    emit_members(enumerate_gamma(n_gamma).members, format, "gamma");
  } else if (*cmd_delta) {
    emit_members(enumerate_delta(n_delta).members, format, "delta");
  } else if (*cmd_card) {
    auto rows = cardinalities(n_card);
    if (format == "csv") {
      std::cout << "n,kappa,delta,ln_kappa_over_ln2_n\n";
      for (const auto& r : rows)
        std::cout << r.n << "," << r.kappa << "," << r.delta << ","
                  << std::setprecision(6) << r.normalized_kappa << "\n";
    } else {
      json out = json::array();
      for (const auto& r : rows)
        out.push_back({{"n", r.n},
                       {"kappa", r.kappa},
                       {"delta", r.delta},
                       {"ln_kappa_over_ln2_n", r.normalized_kappa}});
      std::cout << json{{"cardinalities", out}}.dump(2) << "\n";
    }
  } else if (*cmd_pop) {
    Correlation t = Correlation::parse(pop_corr_text);
    BigInt p = pop_corr(t, pop_sigma, parse_pop_method(pop_method), opts);
    if (format == "text")
      std::cout << p.str() << "\n";
    else
      std::cout << json{{"correlation", t.str()},
                        {"sigma", pop_sigma},
                        {"method", pop_method},
                        {"population", p.str()}}
                       .dump(2)
                << "\n";
  } else if (*cmd_pt) {
    if (pt_sigmas.empty()) pt_sigmas.push_back(2);
    DeltaSet delta = enumerate_delta(pt_n);
    if (format == "csv") {
      std::cout << "correlation";
      for (unsigned s : pt_sigmas) std::cout << ",sigma=" << s;
      std::cout << "\n";
      for (const Correlation& t : delta.members) {
        std::cout << t.str();
        for (unsigned s : pt_sigmas)
          std::cout << "," << pop_corr(t, s, PopMethod::rec1).str();
        std::cout << "\n";
      }
    } else {
      json out = json::array();
      for (const Correlation& t : delta.members) {
        json row{{"correlation", t.str()}};
        for (unsigned s : pt_sigmas)
          row["sigma=" + std::to_string(s)] =
              pop_corr(t, s, PopMethod::rec1).str();
        out.push_back(row);
      }
      std::cout << json{{"n", pt_n}, {"populations", out}}.dump(2) << "\n";
    }
  } else if (*cmd_rz) {
    Correlation t = Correlation::parse(rz_text);
    if (rz_auto) {
      Word w = realize_autocorrelation(t);
      bool ok = autocorrelation(w) == t;
      if (format == "text")
        std::cout << w.str() << (ok ? " (verified)" : " (MISMATCH)") << "\n";
      else
        std::cout << json{{"correlation", t.str()},
                          {"word", w.str()},
                          {"verified", ok}}
                         .dump(2)
                  << "\n";
    } else {
      WordPair pair = realize_correlation(t);
      bool ok = verify_realization(t, pair);
      if (format == "text")
        std::cout << "(" << pair.u.str() << ", " << pair.v.str() << ")"
                  << (ok ? " (verified)" : " (MISMATCH)") << "\n";
      else
        std::cout << json{{"correlation", t.str()},
                          {"u", pair.u.str()},
                          {"v", pair.v.str()},
                          {"verified", ok}}
                         .dump(2)
                  << "\n";
    }
  } else if (*cmd_lat) {
    std::vector<Correlation> members =
        lat_gamma ? enumerate_gamma(lat_n).members
                  : enumerate_delta(lat_n).members;
    HasseDiagram d = hasse(members);
    if (!lat_dot.empty()) {
      std::ofstream out(lat_dot);
      if (!out) throw std::invalid_argument("cannot open " + lat_dot);
      out << export_dot(d);
    }
    json out{{"n", lat_n},
             {"set", lat_gamma ? "gamma" : "delta"},
             {"nodes", d.nodes.size()},
             {"edges", d.edges.size()}};
    json adjacency = json::array();
    for (auto [a, b] : d.edges)
      adjacency.push_back({d.nodes[a].str(), d.nodes[b].str()});
    out["covers"] = adjacency;
    if (lat_jd) {
      auto jd = check_jordan_dedekind(members);
      out["jordan_dedekind"] = jd.satisfied;
      if (!jd.satisfied) {
        json chains = json::array();
        for (const auto* chain : {&jd.chain_short, &jd.chain_long}) {
          json c = json::array();
          for (const auto& node : *chain) c.push_back(node.str());
          chains.push_back(c);
        }
        out["witness_chains"] = chains;
      }
    }
    std::cout << out.dump(2) << "\n";
  } else if (*cmd_bd) {
    BorderCountTable table = longest_border_counts(bd_n, bd_sigma);
    if (!bd_range.empty()) {
      auto colon = bd_range.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("range must be i:k");
      std::size_t i = std::stoull(bd_range.substr(0, colon));
      std::size_t k = std::stoull(bd_range.substr(colon + 1));
      BigInt total = longest_border_range(bd_n, bd_sigma, i, k);
      if (format == "text")
        std::cout << total.str() << "\n";
      else
        std::cout << json{{"n", bd_n}, {"sigma", bd_sigma},
                          {"range", bd_range}, {"count", total.str()}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
      std::cout << "j,L_j\n";
      for (std::size_t j = 0; j < table.counts.size(); ++j)
        std::cout << j << "," << table.counts[j].str() << "\n";
      std::cout << bd_n << "," << table.equal_pairs.str() << "\n";
    } else {
      json counts = json::array();
      for (const auto& c : table.counts) counts.push_back(c.str());
      std::cout << json{{"n", bd_n},
                        {"sigma", bd_sigma},
                        {"L", counts},
                        {"equal_pairs", table.equal_pairs.str()}}
                       .dump(2)
                << "\n";
    }
  } else if (*cmd_ex) {
    ExpectationResult r = expected_longest_border(ex_n, ex_sigma, ex_threshold);
    const BigRat& shown = ex_equal ? r.value_with_equal : r.value;
    if (format == "text")
      std::cout << rat_exact(shown) << " = " << rat_str(shown) << "\n";
    else
      std::cout << json{{"n", ex_n},
                        {"sigma", ex_sigma},
                        {"expectation", rat_exact(shown)},
                        {"expectation_decimal", rat_str(shown)},
                        {"J", ex_threshold},
                        {"lower_bound", rat_str(r.lower_bound)},
                        {"upper_bound", rat_exact(r.upper_bound)}}
                       .dump(2)
                << "\n";
  } else if (*cmd_rt) {
    Correlation s = Correlation::parse(rt_suffix);
    AsymptoticEstimate est = asymptotic_constant(s, rt_sigma, rt_precision);
    json out{{"s", s.str()},
             {"sigma", rt_sigma},
             {"precision_n", rt_precision},
             {"c_times_p_s", rat_str(est.limit_lower)},
             {"upper", rat_str(est.limit_upper)},
             {"c_series", rat_str(est.c_series)},
             {"c_empirical", rat_str(est.c_empirical)},
             {"tail_bound", rat_str(est.tail_bound, 24)}};
    if (rt_nmax > s.size()) {
      json probes = json::array();
      for (const auto& probe :
           ratio_convergence_probe(s, rt_sigma, rt_nmax, rt_precision))
        probes.push_back({{"n", probe.n},
                          {"ratio", rat_str(probe.ratio)},
                          {"within_bounds", probe.within_bounds}});
      out["probes"] = probes;
    }
    std::cout << out.dump(2) << "\n";
  } else if (*cmd_vf) {
    auto checks = run_verify(vf_n, vf_sigma, opts);
    bool all = true;
    json out = json::array();
    for (const auto& c : checks) {
      all = all && c.pass;
      out.push_back({{"check", c.name}, {"pass", c.pass}, {"details", c.details}});
    }
    std::cout << json{{"n", vf_n},
                      {"sigma", vf_sigma},
                      {"all_pass", all},
                      {"checks", out}}
                     .dump(2)
              << "\n";
    return all ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
