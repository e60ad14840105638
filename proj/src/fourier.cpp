#include "genexp/fourier.hpp"

#include "genexp/errors.hpp"

#include <algorithm>
#include <deque>

namespace genexp {

void WeightFunction::add(const Weight& mu, const LaurentPolynomial& coeff) {
  if (rank_ == 0) rank_ = mu.rank();
  if (mu.rank() != rank_) throw InputError("weight function mixes ranks");
  if (coeff.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) support_.erase(it);
  }
}

WeightFunction& WeightFunction::operator+=(const WeightFunction& other) {
  for (const auto& [mu, c] : other.support_) add(mu, c);
  return *this;
}

WeightFunction WeightFunction::scaled(const LaurentPolynomial& c) const {
  WeightFunction out;
  for (const auto& [mu, v] : support_) out.add(mu, v * c);
  return out;
}

LaurentPolynomial WeightFunction::at(const Weight& mu) const {
  auto it = support_.find(mu);
  return it == support_.end() ? LaurentPolynomial{} : it->second;
}

LaurentPolynomial c_closed_form(const Weight& lambda) {
  require_first_layer(lambda);
  const auto agg = aggregate_vector(lambda);
  return one_minus_t_set(agg).shifted(height(lambda));
}

LaurentPolynomial inner_with_one(const WeightFunction& f) {
  LaurentPolynomial sum;
  for (const auto& [mu, coeff] : f.support()) sum += coeff * c_closed_form(mu);
  return sum;
}

namespace {

// a(t) X + b(t) for the single unknown X of the orbit being solved.
struct Affine {
  LaurentPolynomial a;
  LaurentPolynomial b;
  friend bool operator==(const Affine&, const Affine&) = default;
};

const LaurentPolynomial kTInverse = LaurentPolynomial::monomial(-1);

// Exact division of b by a monomial.
LaurentPolynomial divide_by_monomial(const LaurentPolynomial& b, const LaurentPolynomial& a) {
  if (!a.is_monomial()) throw VerificationError("orbit coefficient of the unknown is not a monomial");
  const auto& [e, c] = *a.terms().begin();
  LaurentPolynomial q;
  for (const auto& [be, bc] : b.terms()) {
    if (bc % c != 0) throw VerificationError("orbit pin is not an exact division");
    q.add_term(be - e, bc / c);
  }
  return q;
}

void solve_orbit(const Weight& dominant, FourierTable& table) {
  const int n = dominant.rank();
  auto known = [&](const Weight& w) -> const LaurentPolynomial& {
    auto it = table.find(w);
    if (it == table.end())
      throw VerificationError("solver reached unsolved weight " + w.to_string() + " from orbit of " +
                              dominant.to_string());
    return it->second;
  };

  std::map<Weight, Affine> orbit;
  orbit.emplace(dominant, Affine{LaurentPolynomial::constant(1), {}});
  std::deque<Weight> queue{dominant};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    const Affine y_mu = orbit.at(mu);
    for (int i = 1; i <= n; ++i) {
      const int k = coroot_pairing(mu, i);
      if (k <= 0) continue;
      const Weight nu = simple_reflect(mu, i);
      Affine y_nu{y_mu.a * kTInverse, y_mu.b * kTInverse};
      if (k >= 2) {
        const Weight alpha = Weight::root(n, i, i + 1);
        y_nu.b -= known(mu - alpha);
        y_nu.b += kTInverse * known(nu + alpha);
      }
      // For k == 1, mu - alpha_i = s_i mu and s_i mu + alpha_i = mu, so the
      // relation collapses to y_{s_i mu} = t^-1 y_mu.
      auto [it, inserted] = orbit.try_emplace(nu, y_nu);
      if (inserted) {
        queue.push_back(nu);
      } else if (!(it->second == y_nu)) {
        throw VerificationError("inconsistent propagation to " + nu.to_string() + " inside orbit of " +
                                dominant.to_string());
      }
    }
  }

  const Affine& pinned = orbit.at(theta_reflect(dominant));
  const LaurentPolynomial x = -divide_by_monomial(pinned.b, pinned.a);
  for (const auto& [mu, y] : orbit) table.emplace(mu, y.a * x + y.b);
  if (!table.at(theta_reflect(dominant)).is_zero())
    throw VerificationError("pin equation fails for orbit of " + dominant.to_string());
}

}  // namespace

FourierTable solve_system(int rank, const SolveOptions& options) {
  if (rank < 1) throw InputError("rank must be >= 1");
  if (rank > options.rank_cap)
    throw InputError("rank " + std::to_string(rank) + " exceeds solver cap " + std::to_string(options.rank_cap));

  std::vector<Weight> dominants = first_layer_dominant_weights(rank);
  std::stable_sort(dominants.begin(), dominants.end(),
                   [](const Weight& a, const Weight& b) { return norm_squared(a) < norm_squared(b); });

  FourierTable table;
  for (const Weight& d : dominants) {
    if (d.is_zero()) {
      table.emplace(d, LaurentPolynomial::constant(1));
      continue;
    }
    solve_orbit(d, table);
  }
  return table;
}

}  // namespace genexp
