#include "sunstar/bch.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sunstar {

BchContext::BchContext(LieAlgebra algebra, int max_order)
    : algebra_(std::move(algebra)), max_order_(max_order) {
  if (max_order_ < 1) {
    throw std::invalid_argument("BCH order cap must be at least 1");
  }
}

LinearForm BchContext::c(int i, const LinearForm& x, const LinearForm& y) {
  const std::vector<LinearForm> bins = c_bins(i, x, y);
  LinearForm total(algebra_.dim());
  for (const LinearForm& part : bins) {
    total += part;
  }
  return total;
}

std::vector<LinearForm> BchContext::c_bins(int i, const LinearForm& x, const LinearForm& y) {
  if (i < 1) {
    throw std::invalid_argument("BCH coefficient index must be at least 1");
  }
  if (i > max_order_) {
    std::ostringstream msg;
    msg << "BCH coefficient index " << i << " exceeds the configured cap " << max_order_;
    throw std::invalid_argument(msg.str());
  }
  if (x.dim() != algebra_.dim() || y.dim() != algebra_.dim()) {
    throw std::invalid_argument("linear form dimension does not match the algebra");
  }
  const MemoKey key{i, x.coeffs(), y.coeffs()};
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    it = memo_.emplace(key, compute_c_bins(i, x, y)).first;
  }
  return it->second;
}

// Dynkin's formula: c_i(X, Y) is the sum over k >= 1 and over block
// sequences (p_1, q_1), ..., (p_k, q_k) with p_m + q_m >= 1 and
// sum (p_m + q_m) = i of
//   (-1)^(k-1) / (k * i * prod p_m! q_m!) * [w_1, [w_2, [..., w_i]...]],
// where the word w is X^(p_1) Y^(q_1) ... X^(p_k) Y^(q_k).
std::vector<LinearForm> BchContext::compute_c_bins(int i, const LinearForm& x,
                                                   const LinearForm& y) const {
  std::vector<LinearForm> bins(static_cast<std::size_t>(i) + 1, LinearForm(algebra_.dim()));

  std::vector<std::pair<int, int>> blocks;
  std::function<void(int, Integer)> recurse = [&](int remaining, Integer factorials) {
    if (remaining == 0) {
      const auto& [p_last, q_last] = blocks.back();
      // The innermost bracket is [X, X] or [Y, Y] when the final block ends
      // in two equal letters; those words contribute nothing.
      if (q_last >= 2 || (q_last == 0 && p_last >= 2)) {
        return;
      }
      std::vector<bool> word;  // false = X, true = Y
      int x_count = 0;
      for (const auto& [p, q] : blocks) {
        word.insert(word.end(), static_cast<std::size_t>(p), false);
        word.insert(word.end(), static_cast<std::size_t>(q), true);
        x_count += p;
      }
      LinearForm value = word.back() ? y : x;
      for (std::size_t pos = word.size() - 1; pos-- > 0;) {
        value = algebra_.bracket(word[pos] ? y : x, value);
      }
      if (value.is_zero()) {
        return;
      }
      const int k = static_cast<int>(blocks.size());
      Rational coeff(Integer(1), Integer(k) * Integer(i) * factorials);
      if (k % 2 == 0) {
        coeff = -coeff;
      }
      bins[static_cast<std::size_t>(x_count)] += value * coeff;
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      for (int q = p == 0 ? 1 : 0; p + q <= remaining; ++q) {
        blocks.emplace_back(p, q);
        recurse(remaining - p - q, factorials * factorial(p) * factorial(q));
        blocks.pop_back();
      }
    }
  };
  recurse(i, Integer(1));
  return bins;
}

LinearForm BchContext::z(int r, const LinearForm& x, const LinearForm& y) {
  if (r < 0) {
    throw std::invalid_argument("Z coefficient index must be non-negative");
  }
  return c(r + 1, x, y) * rational_pow(Rational(2), r);
}

std::vector<LinearForm> BchContext::z_bins(int r, const LinearForm& x, const LinearForm& y) {
  if (r < 0) {
    throw std::invalid_argument("Z coefficient index must be non-negative");
  }
  std::vector<LinearForm> bins = c_bins(r + 1, x, y);
  const Rational scale = rational_pow(Rational(2), r);
  for (LinearForm& part : bins) {
    part = part * scale;
  }
  return bins;
}

Polynomial BchContext::f_series(int r, const LinearForm& x, const LinearForm& y) {
  if (r < 0) {
    throw std::invalid_argument("F series index must be non-negative");
  }
  const int n = algebra_.dim();

  std::vector<Polynomial> z_poly;  // z_poly[m] = Z_m(X, Y) as a polynomial, m >= 1
  z_poly.push_back(Polynomial(n));
  for (int m = 1; m <= r; ++m) {
    z_poly.push_back(z(m, x, y).to_polynomial());
  }

  // Recursive path: r F_r = sum_{k=0}^{r-1} (r - k) Z_{r-k} F_k.
  std::vector<Polynomial> f;
  f.push_back(Polynomial::constant(n, Rational(1)));
  for (int s = 1; s <= r; ++s) {
    Polynomial sum(n);
    for (int k = 0; k < s; ++k) {
      sum = sum + z_poly[static_cast<std::size_t>(s - k)] * f[static_cast<std::size_t>(k)] *
                      Rational(s - k);
    }
    f.push_back(sum * Rational(Integer(1), Integer(s)));
  }

  // Explicit path: F_r = sum over partitions r = sum_m m * j_m of
  // prod_m Z_m^{j_m} / j_m!.
  Polynomial expanded(n);
  std::vector<std::pair<int, int>> parts;  // (part size, count)
  std::function<void(int, int)> partitions = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Polynomial term = Polynomial::constant(n, Rational(1));
      for (const auto& [m, count] : parts) {
        term = term * z_poly[static_cast<std::size_t>(m)].pow(count) *
               Rational(Integer(1), factorial(count));
      }
      expanded = expanded + term;
      return;
    }
    for (int m = std::min(remaining, max_part); m >= 1; --m) {
      for (int count = 1; count * m <= remaining; ++count) {
        parts.emplace_back(m, count);
        partitions(remaining - count * m, m - 1);
        parts.pop_back();
      }
    }
  };
  partitions(r, r);

  if (f.back() != expanded) {
    std::ostringstream msg;
    msg << "F series paths disagree at order " << r;
    throw std::logic_error(msg.str());
  }
  return f.back();
}

}  // namespace sunstar
