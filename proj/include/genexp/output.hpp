#pragma once

#include "genexp/laurent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace genexp {

/// {"<exponent>": coefficient, ...}.  Coefficients outside the 64-bit range
/// are written as decimal strings.
nlohmann::json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const nlohmann::json& j);

/// "exponent,coefficient" header, then one row per term in ascending order.
std::string polynomial_to_csv(const LaurentPolynomial& p);

/// Envelope shared by every CLI command's JSON output.
struct OutputRecord {
  std::string command;
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> methods;
  double elapsed_ms = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

}  // namespace genexp
