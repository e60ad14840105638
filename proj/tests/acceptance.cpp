// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failed criteria.

#include "genexp/errors.hpp"
#include "genexp/exponents.hpp"
#include "genexp/fourier.hpp"
#include "genexp/quasisym.hpp"
#include "genexp/tableaux.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace genexp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.ok ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string set_str(const IndexSet& s) {
  std::string r = "{";
  for (int x : s) r += (r.size() > 1 ? "," : "") + std::to_string(x);
  return r + "}";
}

LaurentPolynomial t(int k) { return LaurentPolynomial::monomial(k); }

Weight theta(int n) {
  std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
  c.front() = 1;
  c.back() = -1;
  return Weight(c);
}

}  // namespace

int main() {
  criterion(1, "solver equals closed form on first-layer weights, n=1..6", [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      const FourierTable solved = solve_system(n);
      for (const Weight& mu : first_layer_weights(n)) {
        auto it = solved.find(mu);
        if (it == solved.end() || it->second != c_closed_form(mu)) o.fail("mismatch at " + mu.to_string());
      }
    }
  });

  criterion(2, "adjoint exponents are t + ... + t^n, n=1..8", [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      LaurentPolynomial want;
      for (int i = 1; i <= n; ++i) want.add_term(i, 1);
      const LaurentPolynomial got = exponents_by_tableaux(theta(n));
      if (got != want) o.fail("n=" + std::to_string(n) + ": " + got.to_string());
    }
  });

  criterion(3, "five methods agree for n<=6, hp oracle agrees for n<=5", [](Outcome& o) {
    const std::vector<Method> five{Method::Weights, Method::Signed, Method::QuasiWeights, Method::Tableaux,
                                   Method::Charge};
    for (int n = 1; n <= 6; ++n) {
      for (const Weight& lambda : first_layer_dominant_weights(n)) {
        std::vector<Method> methods = five;
        if (n <= 5) methods.push_back(Method::HesselinkPeterson);
        const ExponentReport r = full_report(lambda, methods, 5);
        if (r.polynomials.size() != methods.size()) o.fail("method skipped at " + lambda.to_string());
        if (!r.agreement) o.fail(lambda.to_string() + ": " + r.disagreement->describe());
      }
    }
  });

  criterion(4, "<1,M> and <1,Q> identities on all quasi-dominant weights, n<=7", [](Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
      const auto all = quasi_dominant_weights(n);
      if (all.size() != (1u << n)) o.fail("wrong count at n=" + std::to_string(n));
      for (const auto& lambda : all) {
        const int ht = height(lambda.weight());
        LaurentPolynomial want_m = t(ht);
        for (int h : height_set(lambda)) want_m = want_m * (LaurentPolynomial::constant(1) - t(-h));
        if (inner_with_one(monomial_quasisym(lambda)) != want_m) o.fail("M at " + lambda.weight().to_string());
        if (inner_with_one(fundamental_quasisym(lambda)) != t(ht)) o.fail("Q at " + lambda.weight().to_string());
      }
    }
  });

  criterion(5, "height-set bijection and phi/co commutation on P([n]), n<=8", [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IndexSet a;
        for (int b = 0; b < n; ++b)
          if (mask & (1u << b)) a.insert(b + 1);
        const QuasiDominantWeight lambda = height_set_inverse(a, n);
        if (height_set(lambda) != a) o.fail("round trip at " + set_str(a));
        if (phi_weight(height_set_inverse(phi_set(a, n), n).weight()) != co(a, n))
          o.fail("commutation at n=" + std::to_string(n) + ", A=" + set_str(a));
      }
      if (quasi_dominant_weights(n).size() != (1u << n)) o.fail("not onto at n=" + std::to_string(n));
    }
  });

  criterion(6, "ht(T) = ch(T) for every SYT of size m<=8", [](Outcome& o) {
    for (int m = 1; m <= 8; ++m)
      for (const Partition& p : partitions_of(m))
        for (const auto& tab : syt_enumerate(p))
          if (tableau_height(tab) != charge(tab)) o.fail("shape " + p.to_string());
  });

  criterion(7, "worked examples", [](Outcome& o) {
    const QuasiDominantWeight lambda(parse_weight("0,2,0,1,0,0,-1,-1,-1"));
    if (canonical_expression(lambda) != std::vector<PositiveRoot>{{2, 9}, {2, 8}, {4, 7}})
      o.fail("canonical expression");
    if (height_set(lambda) != IndexSet{3, 6, 7}) o.fail("height set " + set_str(height_set(lambda)));
    const StandardTableau t1({{1, 2, 6, 8}, {3, 4, 7}, {5}});
    const StandardTableau t2({{1, 2, 4, 6}, {3, 7, 8}, {5}});
    for (const auto* tab : {&t1, &t2}) {
      if (descent_set(*tab) != IndexSet{2, 4, 6}) o.fail("descent set " + set_str(descent_set(*tab)));
      if (tableau_height(*tab) != 16) o.fail("height " + std::to_string(tableau_height(*tab)));
      if (charge(*tab) != 16) o.fail("charge " + std::to_string(charge(*tab)));
    }
  });

  criterion(8, "E(1) = #SYT = Kostka number and signed output non-negative, n<=6", [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      for (const Weight& lambda : first_layer_dominant_weights(n)) {
        const Partition shape(phi_weight(lambda).parts());
        const std::vector<int> ones(static_cast<std::size_t>(n + 1), 1);
        const Integer kostka = kostka_number(shape, ones);
        const Integer hook = oracle::hook_length_count(shape.parts());
        if (kostka != hook) o.fail("Kostka number at " + lambda.to_string());
        for (Method m : {Method::Weights, Method::Signed, Method::QuasiWeights, Method::Tableaux, Method::Charge}) {
          const LaurentPolynomial e = compute_exponents(lambda, m, 5);
          if (e.evaluate_at_one() != hook)
            o.fail(std::string(method_name(m)) + " E(1) at " + lambda.to_string());
          if (m == Method::Signed)
            for (const auto& [d, c] : e.terms())
              if (c < 0) o.fail("negative signed coefficient at " + lambda.to_string());
        }
      }
    }
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
