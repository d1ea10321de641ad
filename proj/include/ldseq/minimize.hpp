#pragma once

#include <cmath>
#include <cstddef>

namespace ldseq {

struct MinimizeResult {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {
inline constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2
}

// Golden-section minimization on [lo, hi] down to bracket width xtol.
// Returns the bracket midpoint.  Near the minimum the objective is flat at
// double precision over a width ~sqrt(eps/curvature), so the midpoint can
// sit a few 1e-9 away from the true minimizer even with a tiny xtol; use
// minimize_with_derivative when that matters.
template <class F>
MinimizeResult golden_min(F&& f, double lo, double hi, double xtol) {
  MinimizeResult res;
  double a = lo, b = hi;
  double c = b - (b - a) * detail::kInvPhi;
  double d = a + (b - a) * detail::kInvPhi;
  double fc = f(c), fd = f(d);
  res.evaluations = 2;
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * detail::kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * detail::kInvPhi;
      fd = f(d);
    }
    ++res.evaluations;
  }
  res.x = 0.5 * (a + b);
  res.value = f(res.x);
  ++res.evaluations;
  return res;
}

// Golden-section phase followed by bisection on the derivative sign.
// The derivative crosses zero with nonzero slope where the value is
// FP-flat, so the polished minimizer is accurate to ~1e-14 instead of the
// ~sqrt(eps) plateau width.  If the golden bracket ends with one-signed
// derivative (minimum at an interval endpoint), the golden result stands.
template <class F, class DF>
MinimizeResult minimize_with_derivative(F&& f, DF&& df, double lo, double hi, double xtol) {
  MinimizeResult res;
  double a = lo, b = hi;
  const double coarse = std::max(xtol, 1e-7 * std::max(1.0, std::abs(hi)));
  double c = b - (b - a) * detail::kInvPhi;
  double d = a + (b - a) * detail::kInvPhi;
  double fc = f(c), fd = f(d);
  res.evaluations = 2;
  while (b - a > coarse) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * detail::kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * detail::kInvPhi;
      fd = f(d);
    }
    ++res.evaluations;
  }
  double da = df(a), db = df(b);
  res.evaluations += 2;
  if (da <= 0.0 && db >= 0.0) {
    for (int it = 0; it < 90 && b - a > 1e-15; ++it) {
      double m = 0.5 * (a + b);
      double dm = df(m);
      ++res.evaluations;
      if (dm == 0.0) {
        a = b = m;
        break;
      }
      (dm < 0.0 ? a : b) = m;
    }
    res.x = 0.5 * (a + b);
    res.value = f(res.x);
    ++res.evaluations;
    return res;
  }
  MinimizeResult tail = golden_min(f, a, b, xtol);
  tail.evaluations += res.evaluations;
  return tail;
}

}  // namespace ldseq
