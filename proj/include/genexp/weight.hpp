#pragma once

#include "genexp/laurent.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genexp {

/// Element of the type A_n root lattice: n+1 integers summing to zero.
///
/// Coordinates are 1-based in the accessors (coord(1) .. coord(n+1)) and
/// simple roots are indexed 1..n, alpha_i = e_i - e_{i+1}.
class Weight {
 public:
  explicit Weight(std::vector<int> coords);

  static Weight zero(int rank);
  /// e_i - e_j, 1-based.
  static Weight root(int rank, int i, int j);

  int rank() const { return static_cast<int>(coords_.size()) - 1; }
  int size() const { return static_cast<int>(coords_.size()); }
  int coord(int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_dominant() const;
  /// Smallest coordinate >= -1 (the zero weight counts).
  bool is_first_layer() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "0,2,0,1,0,0,-1,-1,-1"
  std::string to_string() const;

 private:
  Weight(std::vector<int> coords, bool /*trusted*/) : coords_(std::move(coords)) {}
  std::vector<int> coords_;
};

/// Parses comma-separated integers; rejects anything not summing to zero.
Weight parse_weight(std::string_view text);

/// (lambda, rho).  Equal to sum_i lambda_i (n+1-i) since the coordinates sum to 0.
int height(const Weight& w);
/// Squared Euclidean norm; orders orbits by distance to the origin.
int norm_squared(const Weight& w);

/// (w, alpha_i^vee) = w_i - w_{i+1}.
int coroot_pairing(const Weight& w, int i);

Weight simple_reflect(const Weight& w, int i);
Weight theta_reflect(const Weight& w);
Weight dominant_representative(const Weight& w);

int length(const Weight& w);
int co_length(const Weight& w);

/// Suffix sums starting at each -1 coordinate, left to right.
std::vector<int> aggregate_vector(const Weight& w);

/// Every first-layer weight of rank n, in lexicographic order.
std::vector<Weight> first_layer_weights(int rank);
/// First-layer dominant weights of rank n, i.e. partitions of n+1 shifted by -1.
std::vector<Weight> first_layer_dominant_weights(int rank);

struct WeightMultiplicity {
  Weight weight;
  Integer multiplicity;
};

/// All weights of V_lambda with their multiplicities, for lambda first-layer
/// dominant.  Multiplicities are Kostka numbers K_{lambda+1, mu+1}.
std::vector<WeightMultiplicity> weights_of_irrep(const Weight& lambda);

void require_first_layer(const Weight& w);
void require_first_layer_dominant(const Weight& w);

}  // namespace genexp
