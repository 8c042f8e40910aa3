// avoid: search residue sets, build difference-avoiding sets, verify them
// and print exponent reports. Every command can write a JSON certificate.
//
// Exit codes: 0 success/verified, 1 refuted or reproduce failure,
// 2 budget exhausted or sampled-only verdict, 64 usage, 65 parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "avoid/certificate.hpp"
#include "avoid/chain.hpp"
#include "avoid/constructions.hpp"
#include "avoid/error.hpp"
#include "avoid/exponents.hpp"
#include "avoid/reproduce.hpp"
#include "avoid/residue.hpp"
#include "avoid/search.hpp"
#include "avoid/verifiers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::chrono::milliseconds to_budget(double seconds) {
  if (seconds <= 0) return std::chrono::milliseconds::max();
  return std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
}

std::string join(std::span<const std::int64_t> xs, std::size_t limit = 64) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) out << (i ? "," : "") << xs[i];
  if (xs.size() > limit) out << ",...";
  out << '}';
  return out.str();
}

// "0,2;1,3" -> two residue sets modulo m.
std::vector<avoid::ResidueSet> parse_set_list(std::int64_t m, const std::string& text) {
  std::vector<avoid::ResidueSet> sets;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group == "full") {
      sets.push_back(avoid::ResidueSet::full(m));
      continue;
    }
    std::vector<std::int64_t> elements;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        elements.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw avoid::Error(avoid::Errc::parse_error, "bad residue '" + item + "'");
      }
    }
    sets.emplace_back(m, std::move(elements));
  }
  if (sets.empty()) throw avoid::Error(avoid::Errc::parse_error, "empty residue set list");
  return sets;
}

struct Common {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  double budget = 60.0;
  std::string cert_path;
};

void emit_certificate(const avoid::CertificateFile& cert, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw avoid::Error(avoid::Errc::invalid_argument, "cannot write " + path);
  out << avoid::serialize(cert) << '\n';
  std::cout << "certificate: " << path << '\n';
}

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);
  return echo;
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
  std::int64_t m = 0;
  unsigned k = 2;
  std::string mode = "r-set";
  std::string dimacs;
};

int run_search(const SearchArgs& a, const Common& c, avoid::CertificateFile& cert) {
  const auto start = Clock::now();
  if (a.m < 1) throw avoid::Error(avoid::Errc::invalid_modulus, "--m must be positive");
  if (a.k < 2) throw avoid::Error(avoid::Errc::invalid_argument, "--k must be at least 2");
  const auto graph = avoid::build_difference_graph(a.m, avoid::power_residues(a.m, a.k));
  if (!a.dimacs.empty()) {
    std::ofstream out(a.dimacs);
    if (!out) throw avoid::Error(avoid::Errc::invalid_argument, "cannot write " + a.dimacs);
    const std::vector<std::string> comments{"difference graph m=" + std::to_string(a.m) + " k=" + std::to_string(a.k)};
    avoid::write_dimacs(out, graph.graph(), comments);
  }

  bool complete = false;
  if (a.mode == "r-set") {
    avoid::SearchOptions options;
    options.budget.time = to_budget(c.budget);
    const auto result = avoid::max_clique(graph, options);
    complete = result.optimal;
    std::cout << "R = " << result.witness.to_string() << "\n|R| = " << result.size
              << (complete ? " (optimal)" : " (budget exhausted)") << "\nnodes = " << result.nodes_explored << '\n';
    const double g = avoid::gamma_ruzsa(a.m, a.k, static_cast<std::int64_t>(result.size));
    std::cout << "gamma = " << g << '\n';
    cert.elements = std::vector<std::int64_t>(result.witness.elements().begin(), result.witness.elements().end());
    cert.size = static_cast<std::int64_t>(result.size);
    cert.results["R"] = result.witness.to_string();
    cert.exponents.push_back({"k-th power construction", g, "from |R|"});
  } else if (a.mode == "chain-pair") {
    avoid::ChainPairOptions options;
    options.budget.time = to_budget(c.budget);
    options.threads = c.threads;
    const auto result = avoid::search_chain_pair(a.m, a.k, options);
    complete = result.optimal;
    std::cout << "R1 = " << result.first.to_string() << "  |R1| = " << result.first.size() << '\n'
              << "R2 = " << result.second.to_string() << "  |R2| = " << result.second.size() << '\n'
              << "gamma = " << result.gamma << (complete ? " (optimal)" : " (budget exhausted)") << '\n'
              << "candidates solved = " << result.candidates_solved << " of " << result.candidates << '\n';
    cert.results["R1"] = result.first.to_string();
    cert.results["R2"] = result.second.to_string();
    cert.results["candidates"] = std::to_string(result.candidates);
    cert.results["candidatesSolved"] = std::to_string(result.candidates_solved);
    cert.exponents.push_back({"non-linear Roth chain", result.gamma, "(full, R1, R2, R1, R2, ...)"});
  } else {
    throw avoid::Error(avoid::Errc::invalid_argument, "--mode must be r-set or chain-pair");
  }
  cert.spec = "search m=" + std::to_string(a.m) + " k=" + std::to_string(a.k) + " mode=" + a.mode;
  cert.results["optimal"] = complete ? "true" : "false";
  cert.timings["search"] = seconds_since(start);
  return complete ? kExitOk : kExitIncomplete;
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
  std::string variant;
  std::int64_t m = 0;
  unsigned k = 0;
  std::string f;
  std::string F;
  std::string R;
  std::string Rp;
  std::string preperiod = "full";
  unsigned Y = 0;
  std::int64_t N = 0;
  std::vector<std::int64_t> forbidden;
  std::string out;
};

avoid::ConstructedSet construct(const BuildArgs& a) {
  using avoid::Variant;
  const auto need = [](bool ok, const char* what) {
    if (!ok) throw avoid::Error(avoid::Errc::invalid_argument, what);
  };
  switch (avoid::parse_variant(a.variant)) {
    case Variant::greedy:
      need(a.N > 0, "greedy needs --N");
      return avoid::build_greedy(a.N, a.forbidden);
    case Variant::ruzsa_power:
      need(a.m > 0 && a.k >= 2 && !a.R.empty() && a.Y > 0, "ruzsa needs --m, --k, --R and --Y");
      return avoid::build_ruzsa(a.m, a.k, parse_set_list(a.m, a.R).front(), a.Y);
    case Variant::inhomogeneous_poly:
      need(a.m > 0 && !a.f.empty() && !a.R.empty() && a.Y > 0, "inhom needs --m, --f, --R and --Y");
      return avoid::build_inhom_poly(a.m, avoid::parse_univariate(a.f), parse_set_list(a.m, a.R).front(), a.Y);
    case Variant::multivariate_homogeneous: {
      need(a.m > 0 && (a.k >= 2 || !a.F.empty()) && !a.Rp.empty() && a.Y > 0,
           "multivariate needs --m, --k or --F, --Rp and --Y");
      const auto form = a.F.empty() ? avoid::parse_form("x1^" + std::to_string(a.k) + "+x2^" + std::to_string(a.k))
                                    : avoid::parse_form(a.F);
      // --k defaults to the degree of --F.
      const unsigned k = a.k == 0 ? form.degree() : a.k;
      const std::int64_t M = avoid::pow_i64(a.m, k);
      return avoid::build_multivariate(form, a.m, k, parse_set_list(M, a.Rp).front(), a.Y);
    }
    case Variant::nonlinear_roth: {
      need(a.m > 0 && a.k >= 2 && !a.R.empty() && a.Y > 0, "nonlinear-roth needs --m, --k, --R and --Y");
      auto chain = avoid::ChainSpec::power(a.m, a.k, parse_set_list(a.m, a.preperiod), parse_set_list(a.m, a.R));
      const auto validation = avoid::validate_chain(chain);
      if (!validation) {
        throw avoid::Error(avoid::Errc::unvalidated_chain,
                           "chain condition fails between members " + std::to_string(*validation.failing_index) +
                               " and " + std::to_string(*validation.failing_index + 1));
      }
      return avoid::build_nonlinear_roth(chain, a.Y);
    }
  }
  throw avoid::Error(avoid::Errc::invalid_argument, "unknown variant");
}

int run_build(const BuildArgs& a, const Common&, avoid::CertificateFile& cert, std::string& cert_path) {
  const auto start = Clock::now();
  const auto set = construct(a);
  cert.timings["build"] = seconds_since(start);
  if (!set.materialized()) {
    throw avoid::Error(avoid::Errc::digit_length_too_large,
                       "set has " + std::to_string(set.size()) + " elements, above the materialization cap");
  }
  const std::string header = set.spec().to_string();
  cert.spec = header;
  cert.size = set.size();
  cert.results["N"] = std::to_string(set.N());
  cert.results["sizeLowerBound"] = std::to_string(set.size_bound());
  cert.exponents = avoid::compare_report(set).rows;

  std::cout << header << "\n|A| = " << set.size() << "  N = " << set.N() << "  predicted >= " << set.size_bound()
            << '\n';
  if (set.size() <= 64) std::cout << "A = " << join(set.elements()) << '\n';
  std::cout << avoid::render_report(avoid::compare_report(set));

  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw avoid::Error(avoid::Errc::invalid_argument, "cannot write " + a.out);
    avoid::write_set_file(out, header, set.elements());
    std::cout << "set file: " << a.out << '\n';
    if (cert_path.empty()) cert_path = a.out + ".json";
  }
  if (static_cast<std::size_t>(set.size()) <= avoid::kInlineElementLimit) {
    cert.elements = set.elements();
  } else if (!a.out.empty()) {
    cert.set_path = a.out;
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string set_path;
  std::string poly;
  unsigned roth = 0;
  bool two_squares = false;
  unsigned k_powers = 0;
  unsigned terms = 0;
  std::vector<std::int64_t> list;
  std::int64_t N = 0;
  std::uint64_t samples = 0;
};

int run_verify(const VerifyArgs& a, const Common& c, avoid::CertificateFile& cert) {
  std::ifstream in(a.set_path);
  if (!in) throw avoid::Error(avoid::Errc::invalid_argument, "cannot read " + a.set_path);
  const auto file = avoid::read_set_file(in);
  std::int64_t N = a.N;
  if (N == 0) N = file.N.value_or(file.elements.empty() ? 0 : file.elements.back());
  if (N <= 0) throw avoid::Error(avoid::Errc::invalid_argument, "cannot infer N; pass --N");

  const int targets = !a.poly.empty() + (a.roth > 0) + a.two_squares + (a.k_powers > 0) + !a.list.empty();
  if (targets != 1) {
    throw avoid::Error(avoid::Errc::invalid_argument,
                       "choose exactly one of --poly, --nonlinear-roth, --two-squares, --k-powers, --list");
  }

  const auto start = Clock::now();
  const avoid::VerifyOptions options{c.threads};
  avoid::AvoidanceCertificate verdict;
  std::string target;
  if (a.roth > 0) {
    target = "nonlinear-roth k=" + std::to_string(a.roth);
    if (a.samples > 0) throw avoid::Error(avoid::Errc::invalid_argument, "--samples applies to difference targets");
    verdict = avoid::verify_nonlinear_roth(file.elements, a.roth, N, options);
  } else {
    std::vector<std::int64_t> values;
    if (!a.poly.empty()) {
      target = "poly f=" + a.poly;
      values = avoid::enumerate_poly_values(avoid::parse_univariate(a.poly), N);
    } else if (a.two_squares) {
      target = "two-squares";
      values = avoid::marked_values(avoid::sums_of_two_squares_sieve(N));
    } else if (a.k_powers > 0) {
      const unsigned s = a.terms > 0 ? a.terms : 1;
      target = "k-powers k=" + std::to_string(a.k_powers) + " s=" + std::to_string(s);
      values = avoid::marked_values(avoid::sums_of_k_powers_sieve(N, a.k_powers, s));
    } else {
      target = "list";
      for (const auto v : a.list) {
        if (v <= 0) throw avoid::Error(avoid::Errc::invalid_argument, "--list values must be positive");
        values.push_back(v);
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    verdict = a.samples > 0 ? avoid::verify_difference_sampled(file.elements, values, a.samples)
                            : avoid::verify_difference_avoidance(file.elements, values, options);
  }
  cert.timings["verify"] = seconds_since(start);
  cert.spec = file.header;
  cert.results["target"] = target;
  cert.size = static_cast<std::int64_t>(file.elements.size());
  if (file.elements.size() <= avoid::kInlineElementLimit) {
    cert.elements = file.elements;
  } else {
    cert.set_path = a.set_path;
  }
  cert.verdict = verdict;

  std::cout << "target: " << target << "  N = " << N << "  |A| = " << file.elements.size() << '\n'
            << "verdict: " << avoid::to_string(verdict.verdict) << " (" << verdict.checked << " checks)\n";
  switch (verdict.verdict) {
    case avoid::Verdict::verified_exhaustive:
      return kExitOk;
    case avoid::Verdict::verified_sampled:
      return kExitIncomplete;
    case avoid::Verdict::refuted:
      if (a.roth > 0) {
        const auto x = verdict.witness[0], y = verdict.witness[1];
        std::cout << "witness: x=" << x << " y=" << y << "  {" << x << ", " << x + y << ", "
                  << x + avoid::pow_i64(y, a.roth) << "} in A\n";
      } else {
        const auto el = verdict.witness[0], v = verdict.witness[1];
        std::cout << "witness: a=" << el << " v=" << v << "  " << el << " + " << v << " = " << el + v << " in A\n";
      }
      return kExitRefuted;
  }
  return kExitRefuted;
}

// ---- exponent -------------------------------------------------------------

struct ExponentArgs {
  std::string variant;
  std::int64_t m = 0;
  unsigned k = 0;
  unsigned d = 0;
  std::int64_t r = 0;
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;
  double density = 0.0;
};

int run_exponent(const ExponentArgs& a, avoid::CertificateFile& cert) {
  using avoid::Variant;
  avoid::ExponentReport report;
  const auto need = [](bool ok, const char* what) {
    if (!ok) throw avoid::Error(avoid::Errc::invalid_argument, what);
  };
  switch (avoid::parse_variant(a.variant)) {
    case Variant::ruzsa_power:
      need(a.m > 1 && a.k >= 2 && a.r >= 1, "ruzsa needs --m, --k and --r");
      report.instance = "ruzsa m=" + std::to_string(a.m) + " k=" + std::to_string(a.k) + " |R|=" + std::to_string(a.r);
      report.rows.push_back({"greedy baseline", 1.0 - 1.0 / a.k, ""});
      report.rows.push_back({"claimed", avoid::gamma_ruzsa(a.m, a.k, a.r), ""});
      break;
    case Variant::nonlinear_roth: {
      need(a.m > 1 && a.k >= 2 && !a.period.empty(), "nonlinear-roth needs --m, --k and --period sizes");
      report.instance = "nonlinear-roth m=" + std::to_string(a.m) + " k=" + std::to_string(a.k);
      const double g = avoid::gamma_chain(a.m, a.k, a.preperiod, a.period);
      report.rows.push_back({"greedy baseline", 1.0 - 1.0 / a.k, ""});
      report.rows.push_back({"claimed", g, ""});
      break;
    }
    case Variant::inhomogeneous_poly:
      need(a.m > 1 && a.d >= 2 && a.r >= 1, "inhom needs --m, --d and --r");
      report.instance = "inhom m=" + std::to_string(a.m) + " d=" + std::to_string(a.d) + " |R|=" + std::to_string(a.r);
      report.rows.push_back({"greedy baseline", 1.0 - 1.0 / a.d, ""});
      report.rows.push_back({"claimed", avoid::gamma_inhom(a.m, a.d, a.r), ""});
      break;
    case Variant::multivariate_homogeneous:
      need(a.m > 1 && a.k >= 2 && a.r >= 1, "multivariate needs --m, --k and --r (|R'|)");
      report.instance =
          "multivariate m=" + std::to_string(a.m) + " k=" + std::to_string(a.k) + " |R'|=" + std::to_string(a.r);
      report.rows.push_back({"claimed", avoid::gamma_multivariate(a.m, a.k, a.r), ""});
      break;
    case Variant::greedy:
      report.instance = "greedy density=" + std::to_string(a.density);
      report.rows.push_back({"greedy", avoid::greedy_exponent(a.density), ""});
      break;
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const auto& x, const auto& y) { return x.value.value_or(-1.0) < y.value.value_or(-1.0); });
  std::cout << avoid::render_report(report);
  cert.spec = report.instance;
  cert.exponents = report.rows;
  return kExitOk;
}

// ---- reproduce ------------------------------------------------------------

int run_reproduce(const Common& c, double chain_budget, avoid::CertificateFile& cert) {
  const auto start = Clock::now();
  avoid::ReproduceOptions options;
  options.threads = c.threads;
  options.chain_budget = to_budget(chain_budget);
  options.on_row = [](const avoid::ReproduceRow& row) { std::cout << avoid::render_row(row) << std::endl; };
  const auto rows = avoid::run_reproduce(options);
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  std::cout << passed << "/" << rows.size() << " rows passed in " << seconds_since(start) << " s\n";
  cert.spec = "reproduce";
  for (const auto& row : rows) {
    cert.results[row.name] = (row.pass ? "PASS: " : "FAIL: ") + row.observed;
    cert.timings[row.name] = row.seconds;
  }
  return passed == static_cast<std::ptrdiff_t>(rows.size()) ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference-avoiding set constructions: search, build, verify, exponent, reproduce"};
  app.require_subcommand(1);
  Common common;
  const auto add_common = [&](CLI::App* sub, bool with_budget) {
    sub->add_option("--threads", common.threads, "Worker threads (default: all cores)")
        ->envname("AVOID_THREADS")
        ->check(CLI::PositiveNumber);
    if (with_budget) {
      sub->add_option("--budget", common.budget, "Seconds per search stage; 0 = unlimited")
          ->envname("AVOID_BUDGET")
          ->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--cert", common.cert_path, "Write a JSON certificate here")->envname("AVOID_CERT");
  };

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Find residue sets by exact clique search");
  search_cmd->add_option("--m", search.m, "Modulus")->required();
  search_cmd->add_option("--k", search.k, "Power");
  search_cmd->add_option("--mode", search.mode, "r-set or chain-pair")
      ->check(CLI::IsMember({"r-set", "chain-pair"}));
  search_cmd->add_option("--dimacs", search.dimacs, "Export the difference graph in DIMACS format");
  add_common(search_cmd, true);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a set and write it with a certificate");
  build_cmd->add_option("--variant", build.variant, "ruzsa, nonlinear-roth, inhom, multivariate, greedy")->required();
  build_cmd->add_option("--m", build.m, "Digit modulus");
  build_cmd->add_option("--k", build.k, "Power (inhom reads it from --f, multivariate defaults to the degree of --F)");
  build_cmd->add_option("--f", build.f, "Univariate polynomial, e.g. x^2+5x^3");
  build_cmd->add_option("--F", build.F, "Homogeneous form, e.g. x1^2+x2^2 (default: x1^k+x2^k)");
  build_cmd->add_option("--R", build.R, "Residues mod m; for nonlinear-roth the period, sets split by ';'");
  build_cmd->add_option("--preperiod", build.preperiod, "nonlinear-roth preperiod (default: full)");
  build_cmd->add_option("--Rp", build.Rp, "Residues mod m^k for multivariate");
  build_cmd->add_option("--Y", build.Y, "Digit length");
  build_cmd->add_option("--N", build.N, "Range for greedy");
  build_cmd->add_option("--forbidden", build.forbidden, "Forbidden differences for greedy")->delimiter(',');
  build_cmd->add_option("--out", build.out, "Set file path");
  add_common(build_cmd, false);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a set file against a target");
  verify_cmd->add_option("set", verify.set_path, "Set file")->required();
  verify_cmd->add_option("--poly", verify.poly, "Differences must avoid f(Z) ∩ [1, N]");
  verify_cmd->add_option("--nonlinear-roth", verify.roth, "No x, x+y, x+y^k in the set");
  verify_cmd->add_flag("--two-squares", verify.two_squares, "Avoid nonzero sums of two squares");
  verify_cmd->add_option("--k-powers", verify.k_powers, "Avoid nonzero sums of k-th powers");
  verify_cmd->add_option("--terms", verify.terms, "Number of k-th powers summed (default 1)");
  verify_cmd->add_option("--list", verify.list, "Explicit forbidden differences")->delimiter(',');
  verify_cmd->add_option("--N", verify.N, "Range (default: from the set header)");
  verify_cmd->add_option("--samples", verify.samples, "Sample this many pairs instead of a full check");
  add_common(verify_cmd, false);

  ExponentArgs exponent;
  auto* exponent_cmd = app.add_subcommand("exponent", "Print exponent reports from set sizes");
  exponent_cmd->add_option("--variant", exponent.variant, "ruzsa, nonlinear-roth, inhom, multivariate, greedy")
      ->required();
  exponent_cmd->add_option("--m", exponent.m, "Modulus");
  exponent_cmd->add_option("--k", exponent.k, "Power");
  exponent_cmd->add_option("--d", exponent.d, "Degree (inhom)");
  exponent_cmd->add_option("--r", exponent.r, "|R| or |R'|");
  exponent_cmd->add_option("--preperiod", exponent.preperiod, "Chain preperiod sizes")->delimiter(',');
  exponent_cmd->add_option("--period", exponent.period, "Chain period sizes")->delimiter(',');
  exponent_cmd->add_option("--density", exponent.density, "Forbidden-set density for greedy");
  add_common(exponent_cmd, false);

  double chain_budget = 300.0;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Re-derive every headline result, PASS/FAIL per row");
  reproduce_cmd->add_option("--chain-budget", chain_budget, "Seconds for the chain-pair search")
      ->envname("AVOID_CHAIN_BUDGET")
      ->check(CLI::NonNegativeNumber);
  add_common(reproduce_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  avoid::CertificateFile cert;
  cert.command = command_echo(argc, argv);
  std::string cert_path = common.cert_path;
  try {
    int code = kExitOk;
    if (*search_cmd) code = run_search(search, common, cert);
    if (*build_cmd) code = run_build(build, common, cert, cert_path);
    if (*verify_cmd) code = run_verify(verify, common, cert);
    if (*exponent_cmd) code = run_exponent(exponent, cert);
    if (*reproduce_cmd) code = run_reproduce(common, chain_budget, cert);
    emit_certificate(cert, cert_path);
    return code;
  } catch (const avoid::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == avoid::Errc::parse_error ? kExitParse : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
