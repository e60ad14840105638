#include "genexp/output.hpp"

#include "genexp/errors.hpp"

#include <limits>
#include <sstream>

namespace genexp {

nlohmann::json polynomial_to_json(const LaurentPolynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    const std::string key = std::to_string(e);
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j[key] = static_cast<long long>(c);
    else
      j[key] = c.str();
  }
  return j;
}

LaurentPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("polynomial JSON must be an object");
  LaurentPolynomial p;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw InputError("bad exponent key '" + key + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad exponent key '" + key + "'");
    }
    if (value.is_number_integer()) p.add_term(e, Integer(value.get<long long>()));
    else if (value.is_string()) p.add_term(e, Integer(value.get<std::string>()));
    else throw InputError("bad coefficient for exponent " + key);
  }
  return p;
}

std::string polynomial_to_csv(const LaurentPolynomial& p) {
  std::ostringstream out;
  out << "exponent,coefficient\n";
  for (const auto& [e, c] : p.terms()) out << e << ',' << c << '\n';
  return out.str();
}

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"command", r.command},
                     {"input", r.input},
                     {"result", r.result},
                     {"methods", r.methods},
                     {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  r.input = j.at("input");
  r.result = j.at("result");
  j.at("methods").get_to(r.methods);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

}  // namespace genexp
