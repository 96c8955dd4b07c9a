#pragma once

// Hochschild coboundary of multidifferential cochains on the polynomial
// algebra, for cochain degrees 1 and 2:
//   (dT)(f,g)    = f T(g) - T(fg) + T(f) g
//   (dC)(f,g,h)  = f C(g,h) - C(fg,h) + C(f,gh) - C(f,g) h
// Cochains are passed as callables so engine-valued cochains (star-product
// C_r's) can be differentiated without materializing them.

#include "sunstar/diff_op.hpp"
#include "sunstar/polynomial.hpp"

#include <functional>

namespace sunstar {

using Cochain1 = std::function<Polynomial(const Polynomial&)>;
using Cochain2 = std::function<Polynomial(const Polynomial&, const Polynomial&)>;
using Cochain3 =
    std::function<Polynomial(const Polynomial&, const Polynomial&, const Polynomial&)>;

Cochain2 hochschild_coboundary(const Cochain1& t);
Cochain3 hochschild_coboundary(const Cochain2& c);
Cochain2 hochschild_coboundary(const DiffOp& t);

}  // namespace sunstar
