#include "sunstar/op_io.hpp"

#include "sunstar/parse.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sunstar {

nlohmann::json diffop_to_json(const DiffOp& op) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [j, coeff] : op.terms()) {
    std::vector<int> derivs;
    for (int i = 0; i < op.dim(); ++i) {
      derivs.push_back(j[i]);
    }
    rows.push_back({{"coeff", to_string(coeff)}, {"derivs", derivs}});
  }
  return rows;
}

DiffOp diffop_from_json(const nlohmann::json& j, int dim) {
  if (!j.is_array()) {
    throw std::invalid_argument("operator must be a list of rows");
  }
  DiffOp op(dim);
  for (const auto& row : j) {
    const auto derivs = row.at("derivs").get<std::vector<int>>();
    if (static_cast<int>(derivs.size()) != dim) {
      throw std::invalid_argument("derivative index length must equal the dimension");
    }
    for (const int e : derivs) {
      if (e < 0) {
        throw std::invalid_argument("derivative orders must be nonnegative");
      }
    }
    const Polynomial coeff = parse_polynomial(row.at("coeff").get<std::string>(), dim);
    op += DiffOp::term(coeff, MultiIndex(derivs));
  }
  return op;
}

nlohmann::json operator_series_to_json(const OperatorSeries& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 1; r <= t.order(); ++r) {
    if (!t.term(r).is_zero()) {
      entries.push_back({{"order", r}, {"terms", diffop_to_json(t.term(r))}});
    }
  }
  return entries;
}

OperatorSeries operator_series_from_json(const nlohmann::json& j, int dim) {
  if (!j.is_array()) {
    throw std::invalid_argument("operator series must be a list of {order, terms}");
  }
  int order = 0;
  for (const auto& entry : j) {
    const int r = entry.at("order").get<int>();
    if (r < 1) {
      throw std::invalid_argument("series orders must be >= 1");
    }
    order = std::max(order, r);
  }
  OperatorSeries t = OperatorSeries::identity(dim, order);
  for (const auto& entry : j) {
    const int r = entry.at("order").get<int>();
    if (!t.term(r).is_zero()) {
      throw std::invalid_argument("duplicate series order");
    }
    t.set_term(r, diffop_from_json(entry.at("terms"), dim));
  }
  return t;
}

}  // namespace sunstar
