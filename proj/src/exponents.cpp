#include "genexp/exponents.hpp"

#include "genexp/errors.hpp"
#include "genexp/quasisym.hpp"
#include "genexp/tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace genexp {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Weights: return "weights";
    case Method::Signed: return "signed";
    case Method::QuasiWeights: return "quasiweights";
    case Method::Tableaux: return "tableaux";
    case Method::Charge: return "charge";
    case Method::HesselinkPeterson: return "hp";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : all_methods())
    if (method_name(m) == name) return m;
  throw InputError("unknown method '" + std::string(name) + "'");
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::Weights,  Method::Signed, Method::QuasiWeights,
                                           Method::Tableaux, Method::Charge, Method::HesselinkPeterson};
  return methods;
}

namespace {

Partition shape_of(const Weight& lambda) {
  require_first_layer_dominant(lambda);
  return Partition(phi_weight(lambda).parts());
}

}  // namespace

LaurentPolynomial exponents_by_weights(const Weight& lambda) {
  LaurentPolynomial sum;
  for (const auto& [mu, m] : weights_of_irrep(lambda)) sum += c_closed_form(mu) * LaurentPolynomial::constant(m);
  return sum;
}

std::map<int, Integer> signed_counts(const Weight& lambda) {
  std::map<int, Integer> net;
  for (const auto& [mu, m] : weights_of_irrep(lambda)) {
    const std::vector<int> agg = aggregate_vector(mu);
    if (std::any_of(agg.begin(), agg.end(), [](int a) { return a >= 0; })) continue;
    const int h = height(mu);
    for (unsigned mask = 0; mask < (1u << agg.size()); ++mask) {
      int i = h;
      int parity = 0;
      for (std::size_t b = 0; b < agg.size(); ++b) {
        if (mask & (1u << b)) {
          i += agg[b];
          parity ^= 1;
        }
      }
      net[i] += parity ? -m : m;
    }
  }
  return net;
}

LaurentPolynomial exponents_by_signed_count(const Weight& lambda) {
  require_first_layer_dominant(lambda);
  if (lambda.is_zero()) return LaurentPolynomial::constant(1);
  const int top = height(lambda);
  LaurentPolynomial out;
  for (const auto& [i, c] : signed_counts(lambda))
    if (i >= 1 && i <= top) out.add_term(i, c);
  return out;
}

LaurentPolynomial exponents_by_quasiweights(const Weight& lambda) {
  LaurentPolynomial out;
  for (const auto& [mu, q] : quasi_weight_expansion(lambda)) out.add_term(height(mu.weight()), q);
  return out;
}

LaurentPolynomial exponents_by_tableaux(const Weight& lambda) {
  LaurentPolynomial out;
  for (const auto& t : syt_enumerate(shape_of(lambda))) out.add_term(tableau_height(t), 1);
  return out;
}

LaurentPolynomial exponents_by_charge(const Weight& lambda) {
  LaurentPolynomial out;
  for (const auto& t : syt_enumerate(shape_of(lambda))) out.add_term(charge(t), 1);
  return out;
}

int default_hp_cap() {
  if (const char* env = std::getenv("GENEXP_HP_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 12) return static_cast<int>(v);
  }
  return 5;
}

KostantPartitionFunction::KostantPartitionFunction(int rank, std::vector<int> bound)
    : rank_(rank), bound_(std::move(bound)) {
  if (static_cast<int>(bound_.size()) != rank_) throw InputError("partition function bound has wrong length");
  std::size_t cells = 1;
  for (int b : bound_) cells *= static_cast<std::size_t>(b + 1);
  table_.assign(cells, LaurentPolynomial{});
  table_[0] = LaurentPolynomial::constant(1);

  const LaurentPolynomial t = LaurentPolynomial::monomial(1);
  std::vector<int> coords(static_cast<std::size_t>(rank_), 0);
  // Roots e_i - e_j in simple-root coordinates are the intervals [i, j-1].
  // Each root is an unbounded knapsack item; ascending index order lets it
  // be used any number of times.
  for (int i = 1; i <= rank_; ++i) {
    for (int j = i + 1; j <= rank_ + 1; ++j) {
      std::vector<int> root(static_cast<std::size_t>(rank_), 0);
      for (int k = i; k < j; ++k) root[static_cast<std::size_t>(k - 1)] = 1;
      const std::size_t offset = index(root);
      for (std::size_t idx = 0; idx < cells; ++idx) {
        std::size_t rest = idx;
        bool fits = true;
        for (int k = 0; k < rank_; ++k) {
          const auto radix = static_cast<std::size_t>(bound_[static_cast<std::size_t>(k)] + 1);
          const int c = static_cast<int>(rest % radix);
          rest /= radix;
          if (c < root[static_cast<std::size_t>(k)]) fits = false;
        }
        if (fits && !table_[idx - offset].is_zero()) table_[idx] += t * table_[idx - offset];
      }
    }
  }
}

std::size_t KostantPartitionFunction::index(const std::vector<int>& simple_coords) const {
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int k = 0; k < rank_; ++k) {
    idx += static_cast<std::size_t>(simple_coords[static_cast<std::size_t>(k)]) * stride;
    stride *= static_cast<std::size_t>(bound_[static_cast<std::size_t>(k)] + 1);
  }
  return idx;
}

LaurentPolynomial KostantPartitionFunction::operator()(const std::vector<int>& gamma) const {
  if (static_cast<int>(gamma.size()) != rank_) throw InputError("partition function argument has wrong length");
  for (int k = 0; k < rank_; ++k) {
    if (gamma[static_cast<std::size_t>(k)] < 0) return {};
    if (gamma[static_cast<std::size_t>(k)] > bound_[static_cast<std::size_t>(k)])
      throw std::out_of_range("partition function queried outside its table");
  }
  return table_[index(gamma)];
}

LaurentPolynomial exponents_hp_oracle(const Weight& lambda, int rank_cap) {
  require_first_layer_dominant(lambda);
  const int n = lambda.rank();
  if (n > rank_cap)
    throw InputError("rank " + std::to_string(n) + " exceeds the hp oracle cap " + std::to_string(rank_cap));

  std::vector<int> shifted(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n + 1; ++i) shifted[static_cast<std::size_t>(i - 1)] = lambda.coord(i) + (n + 1 - i);

  struct Term {
    int sign;
    std::vector<int> simple_coords;
  };
  std::vector<Term> terms;
  std::vector<int> bound(static_cast<std::size_t>(n), 0);

  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];

    std::vector<int> simple(static_cast<std::size_t>(n));
    int partial = 0;
    bool nonnegative = true;
    for (int k = 1; k <= n; ++k) {
      partial += shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)])] - (n + 1 - k);
      simple[static_cast<std::size_t>(k - 1)] = partial;
      if (partial < 0) nonnegative = false;
    }
    if (!nonnegative) continue;
    for (int k = 0; k < n; ++k)
      bound[static_cast<std::size_t>(k)] = std::max(bound[static_cast<std::size_t>(k)], simple[static_cast<std::size_t>(k)]);
    terms.push_back({inversions % 2 ? -1 : 1, std::move(simple)});
  } while (std::next_permutation(perm.begin(), perm.end()));

  const KostantPartitionFunction partition_function(n, bound);
  LaurentPolynomial sum;
  for (const auto& term : terms) {
    LaurentPolynomial p = partition_function(term.simple_coords);
    if (term.sign < 0) sum -= p;
    else sum += p;
  }
  return sum;
}

LaurentPolynomial compute_exponents(const Weight& lambda, Method method, int hp_cap) {
  switch (method) {
    case Method::Weights: return exponents_by_weights(lambda);
    case Method::Signed: return exponents_by_signed_count(lambda);
    case Method::QuasiWeights: return exponents_by_quasiweights(lambda);
    case Method::Tableaux: return exponents_by_tableaux(lambda);
    case Method::Charge: return exponents_by_charge(lambda);
    case Method::HesselinkPeterson: return exponents_hp_oracle(lambda, hp_cap);
  }
  throw InputError("unknown method");
}

std::string Disagreement::describe() const {
  return std::string(method_name(first)) + " and " + std::string(method_name(second)) + " differ at t^" +
         std::to_string(exponent) + ": " + first_coefficient.str() + " vs " + second_coefficient.str();
}

ExponentReport full_report(const Weight& lambda, const std::vector<Method>& methods, int hp_cap) {
  require_first_layer_dominant(lambda);
  ExponentReport report{lambda, {}, false, std::nullopt, {}, 0, false, false};
  for (Method m : methods) {
    if (m == Method::HesselinkPeterson && lambda.rank() > hp_cap) continue;
    report.polynomials.emplace(m, compute_exponents(lambda, m, hp_cap));
  }
  if (report.polynomials.empty()) throw InputError("no method was run");

  report.agreement = true;
  const auto& [ref_method, ref] = *report.polynomials.begin();
  for (const auto& [m, p] : report.polynomials) {
    if (p == ref) continue;
    report.agreement = false;
    std::set<int> exps;
    for (const auto& [e, c] : p.terms()) exps.insert(e);
    for (const auto& [e, c] : ref.terms()) exps.insert(e);
    for (int e : exps) {
      if (p.coefficient(e) != ref.coefficient(e)) {
        report.disagreement = Disagreement{ref_method, m, e, ref.coefficient(e), p.coefficient(e)};
        break;
      }
    }
    break;
  }

  report.nonnegative = std::all_of(report.polynomials.begin(), report.polynomials.end(), [](const auto& entry) {
    const auto& terms = entry.second.terms();
    return std::all_of(terms.begin(), terms.end(), [](const auto& term) { return term.second >= 0; });
  });

  const std::vector<int> ones(static_cast<std::size_t>(lambda.size()), 1);
  report.zero_weight_dimension = kostka_number(shape_of(lambda), ones);
  report.normalization_ok = ref.evaluate_at_one() == report.zero_weight_dimension;

  if (report.agreement && report.nonnegative) {
    for (const auto& [e, c] : ref.terms())
      for (Integer k = 0; k < c; ++k) report.exponents.push_back(e);
  }
  return report;
}

}  // namespace genexp
