#include "sunstar/hochschild.hpp"

namespace sunstar {

Cochain2 hochschild_coboundary(const Cochain1& t) {
  return [t](const Polynomial& f, const Polynomial& g) {
    return f * t(g) - t(f * g) + t(f) * g;
  };
}

Cochain3 hochschild_coboundary(const Cochain2& c) {
  return [c](const Polynomial& f, const Polynomial& g, const Polynomial& h) {
    return f * c(g, h) - c(f * g, h) + c(f, g * h) - c(f, g) * h;
  };
}

Cochain2 hochschild_coboundary(const DiffOp& t) {
  return hochschild_coboundary(
      Cochain1([t](const Polynomial& f) { return t.apply(f); }));
}

}  // namespace sunstar
