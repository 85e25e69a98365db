#include "series_json.hpp"

#include <stdexcept>

namespace lvoa::tools {

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

json series_to_json(const QSeries& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(rational_to_json(c));
  return json{{"offset", to_string(q.offset())}, {"step", "1/" + std::to_string(q.step())}, {"coeffs", coeffs}};
}

QSeries series_from_json(const json& j) {
  Rational offset = parse_rational(j.at("offset").get<std::string>());
  Rational step = parse_rational(j.at("step").get<std::string>());
  if (step <= 0 || step.get_num() != 1 || !step.get_den().fits_sint_p())
    throw std::invalid_argument("series step must have the form 1/s");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return QSeries(offset, static_cast<int>(step.get_den().get_si()), std::move(coeffs));
}

}  // namespace lvoa::tools
