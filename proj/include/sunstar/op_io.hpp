#pragma once

// JSON exchange format for differential operators and operator series.
// An operator is a list of rows {"coeff": "<polynomial>", "derivs":
// [j1,...,jn]}; a series is a list of {"order": r, "terms": <operator>}
// with r >= 1 (the identity at order zero is implicit).  Polynomial
// coefficients travel as canonical text so every value stays exact.

#include "sunstar/diff_op.hpp"
#include "sunstar/operator_series.hpp"

#include "json.hpp"

namespace sunstar {

nlohmann::json diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const nlohmann::json& j, int dim);

nlohmann::json operator_series_to_json(const OperatorSeries& t);
OperatorSeries operator_series_from_json(const nlohmann::json& j, int dim);

}  // namespace sunstar
