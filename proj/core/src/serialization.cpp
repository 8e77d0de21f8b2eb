#include "hitchin/serialization.hpp"

#include <string>

#include "hitchin/error.hpp"

namespace hitchin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, "malformed matrix JSON: " + what);
}

}  // namespace

nlohmann::json to_json(const IntegerMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntegerMatrix integer_matrix_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"), "missing keys");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  require(entries.is_array() && entries.size() == rows, "row count");
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(entries[r].is_array() && entries[r].size() == cols, "column count");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = entries[r][c];
      require(e.is_string(), "entries must be decimal strings");
      m(r, c) = parse_integer(e.get<std::string>());
    }
  }
  return m;
}

nlohmann::json to_json(const IntegerVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_decimal(c);
  return out;
}

LaurentPoly laurent_poly_from_json(const nlohmann::json& j) {
  require(j.is_object(), "Laurent entry must be an object");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    require(value.is_string(), "Laurent coefficient must be a decimal string");
    std::size_t used = 0;
    const long exponent = std::stol(key, &used);
    require(used == key.size(), "Laurent exponent");
    terms[exponent] += parse_integer(value.get<std::string>());
  }
  return LaurentPoly(terms);
}

nlohmann::json to_json(const LaurentMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"), "missing keys");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  require(entries.is_array() && entries.size() == rows, "row count");
  LaurentMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(entries[r].is_array() && entries[r].size() == cols, "column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = laurent_poly_from_json(entries[r][c]);
  }
  return m;
}

}  // namespace hitchin
