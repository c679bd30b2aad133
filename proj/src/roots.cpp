#include <algorithm>
#include <cmath>

#include "pdiff/counting.hpp"

namespace pdiff {

namespace {

using cd = std::complex<double>;

// x^4 - 3x^3 - 2x^2 - x + 1, highest degree first.
constexpr std::array<double, 5> kCoefficients = {1.0, -3.0, -2.0, -1.0, 1.0};

cd evaluate(cd x) {
  cd acc = 0.0;
  for (double c : kCoefficients) acc = acc * x + c;
  return acc;
}

cd derivative(cd x) {
  cd acc = 0.0;
  const std::size_t degree = kCoefficients.size() - 1;
  for (std::size_t i = 0; i < degree; ++i) acc = acc * x + kCoefficients[i] * static_cast<double>(degree - i);
  return acc;
}

// Weierstrass (Durand-Kerner) iteration followed by a Newton polish.
std::array<cd, 4> solve_quartic() {
  std::array<cd, 4> z;
  const cd seed(0.4, 0.9);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::pow(seed, static_cast<double>(i));

  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const cd step = evaluate(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  for (cd& root : z) {
    for (int iter = 0; iter < 8; ++iter) {
      const cd d = derivative(root);
      if (std::abs(d) == 0.0) break;
      root -= evaluate(root) / d;
    }
    if (std::abs(root.imag()) < 1e-12) root = cd(root.real(), 0.0);
  }
  return z;
}

}  // namespace

double characteristic_polynomial_residual(std::complex<double> x) { return std::abs(evaluate(x)); }

AsymptoticModel characteristic_roots() {
  auto roots = solve_quartic();
  const auto is_real = [](cd r) { return r.imag() == 0.0; };
  std::sort(roots.begin(), roots.end(), [&](cd a, cd b) {
    if (is_real(a) != is_real(b)) return is_real(a);
    if (is_real(a)) return std::abs(a) > std::abs(b);
    return a.imag() < b.imag();
  });

  AsymptoticModel model;
  model.roots = roots;
  model.dominant_root = roots[0].real();
  model.second_real_root = roots[1].real();
  for (cd r : roots) model.max_residual = std::max(model.max_residual, characteristic_polynomial_residual(r));

  // Least squares for c in T_n ~ c * alpha^n.
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = model.fit_from; n <= model.fit_to; ++n) {
    const double basis = std::pow(model.dominant_root, static_cast<double>(n));
    num += static_cast<double>(count_T_recurrence(n)) * basis;
    den += basis * basis;
  }
  model.dominant_coefficient = num / den;
  return model;
}

}  // namespace pdiff
