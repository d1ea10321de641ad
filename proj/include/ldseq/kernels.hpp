#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "ldseq/errors.hpp"
#include "ldseq/point_set.hpp"

namespace ldseq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDegenerateEps = 1e-15;

// f(t) = offset - ln(2 sin(pi t)) on the circle.  Diverges to +inf as
// t -> 0 mod 1; the caller is responsible for the exclusion constraint.
inline double eval_logsin(double t, double offset) {
  double r = reduce_mod1(t);
  if (r < kDegenerateEps || 1.0 - r < kDegenerateEps)
    throw DegenerateDistance("log-sine kernel evaluated at zero distance");
  return offset - std::log(2.0 * std::sin(std::numbers::pi * r));
}

// d/dt of eval_logsin: -pi cot(pi t), t reduced into (0,1).
inline double deriv_logsin(double t) {
  double r = reduce_mod1(t);
  if (r < kDegenerateEps || 1.0 - r < kDegenerateEps)
    throw DegenerateDistance("log-sine derivative at zero distance");
  return -std::numbers::pi / std::tan(std::numbers::pi * r);
}

// Partial Fourier series of the log-sine kernel: sum_{k=1}^{M} cos(2 pi k t)/k.
// Summed in descending k so the small high-frequency terms accumulate first.
inline double eval_truncated_fourier(double t, int m) {
  double s = 0.0;
  for (int k = m; k >= 1; --k) s += std::cos(kTwoPi * k * t) / k;
  return s;
}

inline double deriv_truncated_fourier(double t, int m) {
  double s = 0.0;
  for (int k = m; k >= 1; --k) s -= kTwoPi * std::sin(kTwoPi * k * t);
  return s;
}

// |full log-sine series - its M-term truncation| at t; certifies tail
// smallness away from the singularity.
inline double fourier_tail_residual(double t, int m) {
  return std::abs(eval_logsin(t, 0.0) - eval_truncated_fourier(t, m));
}

enum class KernelKind { LogSin, TruncatedFourier, CosineSeries };

// A one-periodic symmetric pair energy: the log-sine prototype, its
// truncated Fourier series, or a general nonnegative cosine series.
struct EnergyKernel {
  KernelKind kind = KernelKind::LogSin;
  int fourier_m = 0;            // TruncatedFourier order
  std::vector<double> coeffs;   // CosineSeries c_1..c_M, all >= 0
  double offset = 1.0;          // constant added per pair term

  static EnergyKernel log_sin(double offset = 1.0) {
    return {KernelKind::LogSin, 0, {}, offset};
  }
  static EnergyKernel truncated_fourier(int m, double offset = 0.0) {
    if (m < 1) throw Error("TruncatedFourier order must be >= 1");
    return {KernelKind::TruncatedFourier, m, {}, offset};
  }
  static EnergyKernel cosine_series(std::vector<double> c, double offset = 0.0) {
    if (c.empty()) throw Error("CosineSeries needs at least one coefficient");
    for (double v : c)
      if (!(v >= 0.0)) throw Error("CosineSeries coefficients must be >= 0");
    return {KernelKind::CosineSeries, 0, std::move(c), offset};
  }

  bool singular() const { return kind == KernelKind::LogSin; }

  double eval(double t) const {
    switch (kind) {
      case KernelKind::LogSin:
        return eval_logsin(t, offset);
      case KernelKind::TruncatedFourier:
        return offset + eval_truncated_fourier(t, fourier_m);
      case KernelKind::CosineSeries: {
        double s = 0.0;
        for (std::size_t k = coeffs.size(); k >= 1; --k)
          s += coeffs[k - 1] * std::cos(kTwoPi * static_cast<double>(k) * t);
        return offset + s;
      }
    }
    return 0.0;
  }

  double deriv(double t) const {
    switch (kind) {
      case KernelKind::LogSin:
        return deriv_logsin(t);
      case KernelKind::TruncatedFourier:
        return deriv_truncated_fourier(t, fourier_m);
      case KernelKind::CosineSeries: {
        double s = 0.0;
        for (std::size_t k = coeffs.size(); k >= 1; --k)
          s -= kTwoPi * static_cast<double>(k) * coeffs[k - 1] *
               std::sin(kTwoPi * static_cast<double>(k) * t);
        return s;
      }
    }
    return 0.0;
  }

  // Number of trigonometric modes; bounds the oscillation count of the
  // induced energy and hence the grid resolution the search needs.
  int spectral_order() const {
    switch (kind) {
      case KernelKind::LogSin: return 0;
      case KernelKind::TruncatedFourier: return fourier_m;
      case KernelKind::CosineSeries: return static_cast<int>(coeffs.size());
    }
    return 0;
  }
};

enum class ProductForm { OnePlusFourierProduct, LogSinProduct };

// Tensor-product pair energy over [0,1)^d: either the Fourier-factor form
// prod_j (1 + sum_k cos(2 pi k delta_j)/k) or the log-sine product
// prod_j (1 - ln(2 sin(pi delta_j))).
struct ProductKernelSpec {
  EnergyKernel base;
  std::size_t dimension = 2;
  ProductForm form = ProductForm::OnePlusFourierProduct;

  static ProductKernelSpec one_plus_fourier(std::size_t d) {
    if (d < 1) throw UnsupportedDimension("product kernel dimension must be >= 1");
    return {EnergyKernel::truncated_fourier(1, 0.0), d, ProductForm::OnePlusFourierProduct};
  }
  static ProductKernelSpec log_sin_product(std::size_t d) {
    if (d < 1) throw UnsupportedDimension("product kernel dimension must be >= 1");
    return {EnergyKernel::log_sin(1.0), d, ProductForm::LogSinProduct};
  }

  bool singular() const { return form == ProductForm::LogSinProduct; }

  // One axis factor at separation t.
  double factor(double t, int m) const {
    if (form == ProductForm::OnePlusFourierProduct)
      return 1.0 + eval_truncated_fourier(t, m);
    return eval_logsin(t, base.offset);
  }

  double factor_deriv(double t, int m) const {
    if (form == ProductForm::OnePlusFourierProduct)
      return deriv_truncated_fourier(t, m);
    return deriv_logsin(t);
  }
};

inline double eval_product(std::span<const double> delta, const ProductKernelSpec& spec, int m) {
  if (delta.size() != spec.dimension) throw Error("delta dimension mismatch");
  double p = 1.0;
  for (double d : delta) p *= spec.factor(d, m);
  return p;
}

// Total pair energy of candidate x against every point of the set.
inline double total_energy(double x, const PointSet& pts, const EnergyKernel& kernel) {
  double e = 0.0;
  for (std::size_t i = 0, n = pts.count(); i < n; ++i)
    e += kernel.eval(x - pts.x(i));
  return e;
}

inline double total_energy(std::span<const double> x, const PointSet& pts,
                           const ProductKernelSpec& spec, int m) {
  if (x.size() != pts.dim() || x.size() != spec.dimension)
    throw Error("candidate dimension mismatch");
  double e = 0.0;
  std::vector<double> delta(x.size());
  for (std::size_t i = 0, n = pts.count(); i < n; ++i) {
    auto p = pts.point(i);
    for (std::size_t j = 0; j < x.size(); ++j) delta[j] = x[j] - p[j];
    e += eval_product(delta, spec, m);
  }
  return e;
}

}  // namespace ldseq
