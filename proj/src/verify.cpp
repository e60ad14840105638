#include "genexp/verify.hpp"

#include "genexp/errors.hpp"
#include "genexp/fourier.hpp"
#include "genexp/quasisym.hpp"
#include "genexp/tableaux.hpp"

#include <chrono>
#include <functional>

namespace genexp {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"fourier-system", "height-set-bijection", "commutation", "pair-monomial",
                                              "pair-fundamental", "charge-height", "methods"};
  return names;
}

namespace {

std::string set_to_string(const IndexSet& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s.insert(b + 1);
    out.push_back(std::move(s));
  }
  return out;
}

// Runs body, which returns the number of cases checked and reports a
// counterexample through `fail`.
CheckResult run_check(const std::string& name, const std::function<std::size_t(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    std::string failure;
    r.cases = body(failure);
    r.passed = failure.empty();
    r.detail = failure;
  } catch (const VerificationError& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CheckResult> verify_rank(int n, const VerifyOptions& options) {
  if (n < 1) throw InputError("rank must be >= 1");
  std::vector<CheckResult> results;
  auto skipped = [&](const std::string& name) { return options.skip.contains(name); };

  auto add = [&](const std::string& name, const std::function<std::size_t(std::string&)>& body) {
    if (skipped(name)) {
      CheckResult r;
      r.name = name;
      r.passed = true;
      r.skipped = true;
      r.detail = "skipped";
      results.push_back(r);
      return;
    }
    results.push_back(run_check(name, body));
  };

  add("fourier-system", [&](std::string& fail) -> std::size_t {
    const FourierTable solved = solve_system(n, SolveOptions{options.solver_cap});
    std::size_t count = 0;
    for (const Weight& mu : first_layer_weights(n)) {
      ++count;
      auto it = solved.find(mu);
      const LaurentPolynomial closed = c_closed_form(mu);
      if (it == solved.end() || it->second != closed) {
        fail = "c_" + mu.to_string() + ": closed form " + closed.to_string() + ", solver " +
               (it == solved.end() ? std::string("missing") : it->second.to_string());
        break;
      }
    }
    return count;
  });

  add("height-set-bijection", [&](std::string& fail) -> std::size_t {
    std::size_t count = 0;
    for (const IndexSet& s : all_subsets(n)) {
      ++count;
      const QuasiDominantWeight lambda = height_set_inverse(s, n);
      if (height_set(lambda) != s) {
        fail = "Ht(Ht^-1(" + set_to_string(s) + ")) = " + set_to_string(height_set(lambda));
        break;
      }
      if (height_set_inverse(height_set(lambda), n) != lambda) {
        fail = "Ht^-1(Ht(" + lambda.weight().to_string() + ")) differs";
        break;
      }
    }
    return count;
  });

  add("commutation", [&](std::string& fail) -> std::size_t {
    std::size_t count = 0;
    for (const IndexSet& a : all_subsets(n)) {
      ++count;
      const Composition lhs = phi_weight(height_set_inverse(phi_set(a, n), n).weight());
      const Composition rhs = co(a, n);
      if (lhs != rhs) {
        fail = "A = " + set_to_string(a) + ": phi(Ht^-1(phi(A))) = " + lhs.to_string() + ", co(A) = " + rhs.to_string();
        break;
      }
    }
    return count;
  });

  add("pair-monomial", [&](std::string&) -> std::size_t {
    std::size_t count = 0;
    for (const auto& lambda : quasi_dominant_weights(n)) {
      pair_monomial(lambda);
      ++count;
    }
    return count;
  });

  add("pair-fundamental", [&](std::string&) -> std::size_t {
    std::size_t count = 0;
    for (const auto& lambda : quasi_dominant_weights(n)) {
      pair_fundamental(lambda);
      ++count;
    }
    return count;
  });

  add("charge-height", [&](std::string& fail) -> std::size_t {
    std::size_t count = 0;
    for (const Partition& p : partitions_of(n + 1)) {
      for (const auto& t : syt_enumerate(p)) {
        ++count;
        if (tableau_height(t) != charge(t)) {
          fail = "shape " + p.to_string() + ": ht " + std::to_string(tableau_height(t)) + " != ch " +
                 std::to_string(charge(t));
          return count;
        }
      }
    }
    return count;
  });

  add("methods", [&](std::string& fail) -> std::size_t {
    std::vector<Method> methods;
    for (Method m : all_methods())
      if (!skipped(std::string(method_name(m)))) methods.push_back(m);
    if (methods.empty()) return 0;
    std::size_t count = 0;
    for (const Weight& lambda : first_layer_dominant_weights(n)) {
      ++count;
      const ExponentReport report = full_report(lambda, methods, options.hp_cap);
      if (!report.agreement) {
        fail = "lambda = " + lambda.to_string() + ": " + report.disagreement->describe();
        break;
      }
      if (!report.nonnegative) {
        fail = "lambda = " + lambda.to_string() + ": negative coefficient";
        break;
      }
      if (!report.normalization_ok) {
        fail = "lambda = " + lambda.to_string() + ": E(1) != " + report.zero_weight_dimension.str();
        break;
      }
    }
    return count;
  });

  return results;
}

}  // namespace genexp
