// genexp: generalized exponents of first-layer weights in type A.
//
//   genexp exponents <partition|weight> [--method M|all] [--format text|json|csv] [--n N] [--hp-cap K]
//   genexp fourier <weight> [--verify] [--format ...]
//   genexp syt <partition> [--format ...]
//   genexp verify --n N [--skip NAME]... [--hp-cap K]
//
// Exit status: 0 ok, 1 disagreement or failed check, 2 bad input.

#include "genexp/errors.hpp"
#include "genexp/exponents.hpp"
#include "genexp/fourier.hpp"
#include "genexp/output.hpp"
#include "genexp/tableaux.hpp"
#include "genexp/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace genexp;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      throw InputError("cannot parse '" + text + "' as a comma-separated integer list");
    }
    if (used != tok.size()) throw InputError("cannot parse '" + text + "' as a comma-separated integer list");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty input");
  return out;
}

// Sum zero means a weight; anything else is read as a partition of n+1 and
// shifted down by one after padding with zeros.
Weight read_lambda(const std::string& text, int n_flag) {
  std::vector<int> v = parse_ints(text);
  const int sum = std::accumulate(v.begin(), v.end(), 0);
  Weight lambda = Weight::zero(1);
  if (sum == 0) {
    lambda = Weight(v);
  } else {
    const Partition p(v);
    const int n = n_flag > 0 ? n_flag : p.size() - 1;
    if (p.size() != n + 1)
      throw InputError("partition " + p.to_string() + " has size " + std::to_string(p.size()) + ", expected " +
                       std::to_string(n + 1));
    if (n < 1) throw InputError("rank must be at least 1");
    lambda = composition_to_weight(Composition(p.parts()), n);
  }
  if (n_flag > 0 && lambda.rank() != n_flag)
    throw InputError("input has rank " + std::to_string(lambda.rank()) + " but --n " + std::to_string(n_flag));
  require_first_layer_dominant(lambda);
  return lambda;
}

json set_json(const IndexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::string set_text(const IndexSet& s) {
  std::string r = "{";
  for (int x : s) r += (r.size() > 1 ? "," : "") + std::to_string(x);
  return r + "}";
}

std::string rows_text(const StandardTableau& t) {
  std::string r;
  for (const auto& row : t.rows()) {
    if (!r.empty()) r += '/';
    for (std::size_t i = 0; i < row.size(); ++i) r += (i ? "," : "") + std::to_string(row[i]);
  }
  return r;
}

void emit(const OutputRecord& rec) { std::cout << json(rec).dump(2) << '\n'; }

struct ExponentsArgs {
  std::string input;
  std::string method = "tableaux";
  std::string format = "text";
  int n = 0;
  int hp_cap = 0;
};

int cmd_exponents(const ExponentsArgs& a) {
  const auto start = Clock::now();
  const Weight lambda = read_lambda(a.input, a.n);
  const int hp_cap = a.hp_cap > 0 ? a.hp_cap : default_hp_cap();

  std::vector<Method> methods;
  if (a.method == "all") methods = all_methods();
  else methods.push_back(parse_method(a.method));

  // Ask for hp explicitly above the cap and it is an input error; under
  // `all` it is dropped quietly.
  if (a.method == "hp" && lambda.rank() > hp_cap)
    throw InputError("rank " + std::to_string(lambda.rank()) + " exceeds the hp cap " + std::to_string(hp_cap));

  const ExponentReport report = full_report(lambda, methods, hp_cap);
  const LaurentPolynomial& poly = report.polynomials.begin()->second;

  std::vector<std::string> ran;
  for (const auto& [m, p] : report.polynomials) ran.emplace_back(method_name(m));

  if (a.format == "json") {
    OutputRecord rec;
    rec.command = "exponents";
    rec.input = {{"lambda", lambda.coords()},
                 {"rank", lambda.rank()},
                 {"shape", phi_weight(lambda).parts()},
                 {"method", a.method}};
    json per = json::object();
    for (const auto& [m, p] : report.polynomials) per[std::string(method_name(m))] = polynomial_to_json(p);
    rec.result = {{"polynomial", polynomial_to_json(poly)},
                  {"exponents", report.exponents},
                  {"agreement", report.agreement},
                  {"normalization_ok", report.normalization_ok},
                  {"nonnegative", report.nonnegative},
                  {"zero_weight_dimension", report.zero_weight_dimension.str()},
                  {"per_method", per}};
    if (report.disagreement) rec.result["disagreement"] = report.disagreement->describe();
    rec.methods = ran;
    rec.elapsed_ms = ms_since(start);
    emit(rec);
  } else if (a.format == "csv") {
    std::cout << polynomial_to_csv(poly);
  } else {
    std::cout << poly.to_string() << '\n';
    std::cout << "lambda: " << lambda.to_string() << "  shape: " << phi_weight(lambda).to_string() << '\n';
    std::cout << "exponents:";
    for (int e : report.exponents) std::cout << ' ' << e;
    std::cout << "\nmethods:";
    for (const auto& m : ran) std::cout << ' ' << m;
    std::cout << '\n';
    if (methods.size() > 1 || a.method == "all") {
      std::cout << "agreement: " << (report.agreement ? "ok" : "FAILED") << '\n';
      if (report.disagreement) std::cout << "  " << report.disagreement->describe() << '\n';
    }
    if (!report.normalization_ok) std::cout << "normalization: FAILED\n";
    if (!report.nonnegative) std::cout << "non-negativity: FAILED\n";
  }
  const bool ok = report.agreement && report.normalization_ok && report.nonnegative;
  return ok ? kExitOk : kExitDisagree;
}

int cmd_fourier(const std::string& input, bool verify, const std::string& format) {
  const auto start = Clock::now();
  const Weight mu = parse_weight(input);
  require_first_layer(mu);
  const LaurentPolynomial c = c_closed_form(mu);

  std::optional<bool> agrees;
  if (verify) {
    const FourierTable table = solve_system(mu.rank());
    auto it = table.find(mu);
    agrees = it != table.end() && it->second == c;
  }

  if (format == "json") {
    OutputRecord rec;
    rec.command = "fourier";
    rec.input = {{"weight", mu.coords()}, {"rank", mu.rank()}, {"verify", verify}};
    rec.result = {{"polynomial", polynomial_to_json(c)}};
    if (agrees) rec.result["solver_agrees"] = *agrees;
    rec.methods = {"closed-form"};
    if (verify) rec.methods.emplace_back("solver");
    rec.elapsed_ms = ms_since(start);
    emit(rec);
  } else if (format == "csv") {
    std::cout << polynomial_to_csv(c);
  } else {
    std::cout << c.to_string() << '\n';
    if (agrees) std::cout << "solver: " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees.value_or(true) ? kExitOk : kExitDisagree;
}

int cmd_syt(const std::string& input, const std::string& format) {
  const auto start = Clock::now();
  const Partition p = parse_partition(input);
  const auto tabs = syt_enumerate(p);
  const int m = p.size();
  bool ok = true;

  if (format == "json") {
    OutputRecord rec;
    rec.command = "syt";
    rec.input = {{"partition", p.parts()}};
    json list = json::array();
    for (const auto& t : tabs) {
      const IndexSet des = descent_set(t);
      list.push_back({{"rows", t.rows()},
                      {"descents", set_json(des)},
                      {"ascents", set_json(complement(des, m - 1))},
                      {"height", tableau_height(t)},
                      {"reading_word", reading_word(t)},
                      {"charge", charge(t)}});
      ok = ok && tableau_height(t) == charge(t);
    }
    rec.result = {{"count", tabs.size()}, {"tableaux", list}};
    rec.methods = {"syt"};
    rec.elapsed_ms = ms_since(start);
    emit(rec);
  } else if (format == "csv") {
    std::cout << "rows,descents,ascents,height,reading_word,charge\n";
    for (const auto& t : tabs) {
      const IndexSet des = descent_set(t);
      std::string word;
      for (int v : reading_word(t)) word += (word.empty() ? "" : " ") + std::to_string(v);
      std::cout << '"' << rows_text(t) << "\",\"" << set_text(des) << "\",\"" << set_text(complement(des, m - 1))
                << "\"," << tableau_height(t) << ",\"" << word << "\"," << charge(t) << '\n';
      ok = ok && tableau_height(t) == charge(t);
    }
  } else {
    std::cout << tabs.size() << (tabs.size() == 1 ? " tableau" : " tableaux") << " of shape " << p.to_string()
              << '\n';
    for (const auto& t : tabs) {
      const IndexSet des = descent_set(t);
      std::string word;
      for (int v : reading_word(t)) word += std::to_string(v);
      std::printf("  %-20s Des=%-12s cDes=%-12s ht=%-3d word=%-10s ch=%d\n", rows_text(t).c_str(),
                  set_text(des).c_str(), set_text(complement(des, m - 1)).c_str(), tableau_height(t), word.c_str(),
                  charge(t));
      ok = ok && tableau_height(t) == charge(t);
    }
  }
  return ok ? kExitOk : kExitDisagree;
}

int cmd_verify(int n, const std::vector<std::string>& skip, int hp_cap, const std::string& format) {
  const auto start = Clock::now();
  VerifyOptions opts;
  opts.skip = std::set<std::string>(skip.begin(), skip.end());
  opts.hp_cap = hp_cap > 0 ? hp_cap : default_hp_cap();
  for (const auto& s : opts.skip) {
    bool known = std::find(check_names().begin(), check_names().end(), s) != check_names().end();
    for (Method m : all_methods()) known = known || method_name(m) == s;
    if (!known) throw InputError("unknown check or method '" + s + "'");
  }

  const auto results = verify_rank(n, opts);
  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.passed;

  if (format == "json") {
    OutputRecord rec;
    rec.command = "verify";
    rec.input = {{"rank", n}, {"skip", skip}, {"hp_cap", opts.hp_cap}};
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"skipped", r.skipped},
                        {"cases", r.cases},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    rec.result = {{"checks", checks}, {"all_passed", all_ok}};
    for (Method m : all_methods())
      if (!opts.skip.contains(std::string(method_name(m)))) rec.methods.emplace_back(method_name(m));
    rec.elapsed_ms = ms_since(start);
    emit(rec);
  } else {
    std::printf("rank %d\n", n);
    for (const auto& r : results) {
      const char* status = r.skipped ? "skip" : (r.passed ? "pass" : "FAIL");
      std::printf("  %-22s %-5s %8zu cases %8.3fs\n", r.name.c_str(), status, r.cases, r.seconds);
      if (!r.passed) std::printf("    counterexample: %s\n", r.detail.c_str());
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all_ok ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized exponents of first-layer weights in type A"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  ExponentsArgs ex;
  auto* exponents = app.add_subcommand("exponents", "Compute E(V_lambda)");
  exponents->add_option("input", ex.input, "Partition of n+1 (4,3,1) or first-layer dominant weight (1,0,-1)")
      ->required();
  exponents->add_option("--method", ex.method, "weights, signed, quasiweights, tableaux, charge, hp or all");
  exponents->add_option("--format", ex.format)->check(CLI::IsMember(formats));
  exponents->add_option("--n", ex.n, "Rank; inferred from the input when omitted")->check(CLI::PositiveNumber);
  exponents->add_option("--hp-cap", ex.hp_cap, "Rank cap for the hp oracle")->check(CLI::Range(1, 12));

  std::string fourier_input, fourier_format = "text";
  bool fourier_verify = false;
  auto* fourier = app.add_subcommand("fourier", "Closed form of the Fourier coefficient c_mu(t)");
  fourier->add_option("weight", fourier_input)->required();
  fourier->add_flag("--verify", fourier_verify, "Also solve the defining system at this rank");
  fourier->add_option("--format", fourier_format)->check(CLI::IsMember(formats));

  std::string syt_input, syt_format = "text";
  auto* syt = app.add_subcommand("syt", "List standard tableaux with descents, height and charge");
  syt->add_option("partition", syt_input)->required();
  syt->add_option("--format", syt_format)->check(CLI::IsMember(formats));

  int verify_n = 0, verify_hp_cap = 0;
  std::vector<std::string> verify_skip;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run every invariant check at rank n");
  verify->add_option("--n", verify_n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--skip", verify_skip, "Check or method name to leave out (repeatable)");
  verify->add_option("--hp-cap", verify_hp_cap)->check(CLI::Range(1, 12));
  verify->add_option("--format", verify_format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*exponents) return cmd_exponents(ex);
    if (*fourier) return cmd_fourier(fourier_input, fourier_verify, fourier_format);
    if (*syt) return cmd_syt(syt_input, syt_format);
    if (*verify) return cmd_verify(verify_n, verify_skip, verify_hp_cap, verify_format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitDisagree;
  }
  return kExitUsage;
}
