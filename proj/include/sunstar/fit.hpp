#pragma once

// Reconstruction of a differential operator from black-box probes.  The
// triangular solve walks monomial degrees upward: probing x^K determines the
// coefficient of d_K once all lower-order coefficients are known, because
// d_J x^K = 0 whenever |J| > |K| and d_K x^K = K!.  Coefficients are fitted
// for orders <= max_order and the result is then verified against the probe
// on every monomial of degree <= max_degree, so choosing max_order below
// max_degree turns the tail degrees into a consistency check.

#include "sunstar/diff_op.hpp"

#include <functional>
#include <stdexcept>

namespace sunstar {

class FitError : public std::runtime_error {
 public:
  FitError(const std::string& message, MultiIndex witness)
      : std::runtime_error(message), witness_(std::move(witness)) {}

  // Monomial exponent on which the fitted operator disagrees with the probe.
  const MultiIndex& witness() const { return witness_; }

 private:
  MultiIndex witness_;
};

// probe must be the action of a linear map on polynomials.  Throws FitError
// when the fitted operator fails to reproduce the probe on some monomial of
// degree <= max_degree (the probe is not a differential operator of order
// <= max_order over that range), and std::invalid_argument when the probe
// hits constants but admit_constant_term is false.
DiffOp fit_diffop(const std::function<Polynomial(const Polynomial&)>& probe,
                  int dim, int max_degree, int max_order,
                  bool admit_constant_term = false);

}  // namespace sunstar
