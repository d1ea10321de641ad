#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ldseq/errors.hpp"
#include "ldseq/kernels.hpp"
#include "ldseq/point_set.hpp"

namespace ldseq {

// Which one-sided limit of the empirical count a witness corner uses:
// Closed counts points with coordinates <= corner, Open counts strict <.
enum class CountMode { Closed, Open };

struct BoxWitness {
  std::vector<double> corner;
  CountMode mode = CountMode::Closed;
};

struct DiscrepancyReport {
  double value = 0.0;
  BoxWitness witness;
  std::size_t n = 0;
  std::size_t dim = 0;
};

// Local discrepancy of the anchored box [0, corner] under the given
// counting mode; witness re-evaluation helper.
inline double local_discrepancy(const PointSet& pts, std::span<const double> corner,
                                CountMode mode) {
  if (pts.count() == 0) throw EmptySet("local_discrepancy on empty set");
  if (corner.size() != pts.dim()) throw Error("witness dimension mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0, n = pts.count(); i < n; ++i) {
    auto p = pts.point(i);
    bool inside = true;
    for (std::size_t j = 0; j < corner.size() && inside; ++j)
      inside = mode == CountMode::Closed ? p[j] <= corner[j] : p[j] < corner[j];
    if (inside) ++count;
  }
  double vol = 1.0;
  for (double c : corner) vol *= c;
  const double frac = static_cast<double>(count) / static_cast<double>(pts.count());
  return mode == CountMode::Closed ? frac - vol : vol - frac;
}

// Exact 1D star discrepancy: with the points sorted ascending the supremum
// is max_i max(i/N - x_(i), x_(i) - (i-1)/N); the first term is attained
// as the closed limit at x_(i), the second as the open limit.
inline DiscrepancyReport star_disc_1d(const PointSet& pts) {
  if (pts.dim() != 1) throw UnsupportedDimension("star_disc_1d requires d=1");
  const std::size_t n = pts.count();
  if (n == 0) throw EmptySet("star discrepancy of an empty set");
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = pts.x(i);
  std::sort(xs.begin(), xs.end());

  DiscrepancyReport rep;
  rep.n = n;
  rep.dim = 1;
  rep.value = -1.0;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double closed = static_cast<double>(i + 1) / dn - xs[i];
    const double open = xs[i] - static_cast<double>(i) / dn;
    if (closed > rep.value) {
      rep.value = closed;
      rep.witness = {{xs[i]}, CountMode::Closed};
    }
    if (open > rep.value) {
      rep.value = open;
      rep.witness = {{xs[i]}, CountMode::Open};
    }
  }
  return rep;
}

namespace detail {

// Fenwick tree over value ranks; counts points in a prefix of the sorted
// unique coordinate values.
class Fenwick {
public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t rank) {  // 0-based rank
    for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  std::size_t prefix(std::size_t count) const {  // # entries with rank < count
    std::size_t s = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

private:
  std::vector<std::size_t> tree_;
};

inline std::vector<double> sorted_unique_with_one(const PointSet& pts, std::size_t axis) {
  std::vector<double> v;
  v.reserve(pts.count() + 1);
  for (std::size_t i = 0; i < pts.count(); ++i) v.push_back(pts.point(i)[axis]);
  v.push_back(1.0);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::size_t rank_leq(const std::vector<double>& sorted, double v) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

inline std::size_t rank_lt(const std::vector<double>& sorted, double v) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

struct BestBox {
  double value = -1.0;
  std::vector<double> corner;
  CountMode mode = CountMode::Closed;

  void offer(double v, std::initializer_list<double> c, CountMode m) {
    if (v > value) {
      value = v;
      corner = c;
      mode = m;
    }
  }
};

// Exact d=2 supremum over anchored boxes: sweep candidate x corners in
// ascending order, maintaining Fenwick counts over y ranks for the closed
// (<= x) and open (< x) point sets.
inline void star_disc_2d_impl(const PointSet& pts, BestBox& best) {
  const std::size_t n = pts.count();
  const auto xs = sorted_unique_with_one(pts, 0);
  const auto ys = sorted_unique_with_one(pts, 1);
  const double dn = static_cast<double>(n);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts.point(a)[0] < pts.point(b)[0];
  });

  Fenwick closed(ys.size()), open(ys.size());
  std::size_t pc = 0, po = 0;
  for (double cx : xs) {
    while (pc < n && pts.point(order[pc])[0] <= cx) {
      closed.add(rank_lt(ys, pts.point(order[pc])[1]));
      ++pc;
    }
    while (po < n && pts.point(order[po])[0] < cx) {
      open.add(rank_lt(ys, pts.point(order[po])[1]));
      ++po;
    }
    for (double cy : ys) {
      const double vol = cx * cy;
      const double c = static_cast<double>(closed.prefix(rank_leq(ys, cy))) / dn;
      const double o = static_cast<double>(open.prefix(rank_lt(ys, cy))) / dn;
      best.offer(c - vol, {cx, cy}, CountMode::Closed);
      best.offer(vol - o, {cx, cy}, CountMode::Open);
    }
  }
}

// Exact d=3 supremum: sweep x, then for each candidate x sweep y over the
// accumulated points while maintaining Fenwick counts over z ranks.
inline void star_disc_3d_impl(const PointSet& pts, BestBox& best) {
  const std::size_t n = pts.count();
  const auto xs = sorted_unique_with_one(pts, 0);
  const auto ys = sorted_unique_with_one(pts, 1);
  const auto zs = sorted_unique_with_one(pts, 2);
  const double dn = static_cast<double>(n);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts.point(a)[0] < pts.point(b)[0];
  });

  // (y, z) pairs of the points with x <= cx / x < cx, sorted by y.
  std::vector<std::pair<double, double>> in_closed, in_open;
  in_closed.reserve(n);
  in_open.reserve(n);
  std::size_t pc = 0, po = 0;
  auto insert_sorted = [](std::vector<std::pair<double, double>>& v,
                          std::pair<double, double> p) {
    v.insert(std::upper_bound(v.begin(), v.end(), p), p);
  };

  for (double cx : xs) {
    while (pc < n && pts.point(order[pc])[0] <= cx) {
      insert_sorted(in_closed, {pts.point(order[pc])[1], pts.point(order[pc])[2]});
      ++pc;
    }
    while (po < n && pts.point(order[po])[0] < cx) {
      insert_sorted(in_open, {pts.point(order[po])[1], pts.point(order[po])[2]});
      ++po;
    }
    Fenwick fc(zs.size()), fo(zs.size());
    std::size_t qc = 0, qo = 0;
    for (double cy : ys) {
      while (qc < in_closed.size() && in_closed[qc].first <= cy) {
        fc.add(rank_lt(zs, in_closed[qc].second));
        ++qc;
      }
      while (qo < in_open.size() && in_open[qo].first < cy) {
        fo.add(rank_lt(zs, in_open[qo].second));
        ++qo;
      }
      for (double cz : zs) {
        const double vol = cx * cy * cz;
        const double c = static_cast<double>(fc.prefix(rank_leq(zs, cz))) / dn;
        const double o = static_cast<double>(fo.prefix(rank_lt(zs, cz))) / dn;
        best.offer(c - vol, {cx, cy, cz}, CountMode::Closed);
        best.offer(vol - o, {cx, cy, cz}, CountMode::Open);
      }
    }
  }
}

}  // namespace detail

// Exact star discrepancy for d in {2, 3}: supremum over anchored boxes
// [0, x], evaluated as closed and open one-sided limits at every candidate
// corner from the product of (unique point coordinates plus 1) per axis.
inline DiscrepancyReport star_disc_dd(const PointSet& pts) {
  const std::size_t d = pts.dim();
  if (d >= 4)
    throw UnsupportedDimension("exact star discrepancy limited to d <= 3");
  if (d < 2) throw UnsupportedDimension("star_disc_dd requires d >= 2");
  if (pts.count() == 0) throw EmptySet("star discrepancy of an empty set");

  detail::BestBox best;
  if (d == 2)
    detail::star_disc_2d_impl(pts, best);
  else
    detail::star_disc_3d_impl(pts, best);

  DiscrepancyReport rep;
  rep.value = std::max(best.value, 0.0);
  rep.witness = {best.corner, best.mode};
  rep.n = pts.count();
  rep.dim = d;
  return rep;
}

// Dispatch on dimension.
inline DiscrepancyReport star_discrepancy(const PointSet& pts) {
  return pts.dim() == 1 ? star_disc_1d(pts) : star_disc_dd(pts);
}

// X_N embedding {(n/N, x_n) : 1 <= n <= N} of a 1D sequence prefix.
inline PointSet xn_embed(const PointSet& seq, std::size_t n) {
  if (seq.dim() != 1) throw UnsupportedDimension("xn_embed requires a 1D sequence");
  if (seq.count() < n || n == 0)
    throw InsufficientPoints("xn_embed needs at least N sequence elements");
  PointSet out(2, seq.provenance());
  for (std::size_t i = 1; i <= n; ++i)
    out.append({static_cast<double>(i) / static_cast<double>(n), seq.x(i - 1)});
  return out;
}

// |sum_n e^{2 pi i k x_n}| / N.
inline double weyl_sum(const PointSet& pts, long k) {
  if (pts.dim() != 1) throw UnsupportedDimension("weyl_sum requires d=1");
  const std::size_t n = pts.count();
  if (n == 0) throw EmptySet("weyl_sum on empty set");
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    s += std::polar(1.0, kTwoPi * static_cast<double>(k) * pts.x(i));
  return std::abs(s) / static_cast<double>(n);
}

// Normalized exponential-sum moduli per frequency, k = 0..K.  The zero
// frequency is always 1 and every entry lies in [0, 1].
struct WeylSumTable {
  std::vector<double> moduli;  // moduli[k] for k = 0..K

  static WeylSumTable compute(const PointSet& pts, int bandlimit) {
    if (bandlimit < 0) throw Error("WeylSumTable needs K >= 0");
    WeylSumTable t;
    t.moduli.resize(static_cast<std::size_t>(bandlimit) + 1);
    t.moduli[0] = 1.0;
    for (int k = 1; k <= bandlimit; ++k)
      t.moduli[static_cast<std::size_t>(k)] = weyl_sum(pts, k);
    return t;
  }
};

// 1/K + sum_{k<=K} weyl_sum(k)/k: the one-dimensional bound shape with
// constant 1.  Diagnostic only; the true inequality carries an unspecified
// constant.
inline double erdos_turan_diag(const PointSet& pts, int bandlimit) {
  if (bandlimit < 1) throw Error("erdos_turan_diag needs K >= 1");
  double s = 1.0 / static_cast<double>(bandlimit);
  for (int k = bandlimit; k >= 1; --k) s += weyl_sum(pts, k) / k;
  return s;
}

// Multidimensional diagnostic: sum over 0 < ||k||_inf <= K of
// |W(k)| / (N r(2k)) with r(2k) = prod_j max(1, 2|k_j|).
inline double erdos_turan_koksma_diag(const PointSet& pts, int bandlimit) {
  const std::size_t d = pts.dim();
  if (d < 2) throw UnsupportedDimension("erdos_turan_koksma_diag requires d >= 2");
  const std::size_t n = pts.count();
  if (n == 0) throw EmptySet("erdos_turan_koksma_diag on empty set");
  if (bandlimit < 1) throw Error("erdos_turan_koksma_diag needs K >= 1");

  const double side = 2.0 * bandlimit + 1.0;
  if (std::pow(side, static_cast<double>(d)) > 1e7)
    throw CostGuardExceeded("(2K+1)^d exceeds the 1e7 frequency budget");

  // Per-point, per-axis phase table e^{2 pi i k x} for k in [-K, K].
  const std::size_t band = static_cast<std::size_t>(2 * bandlimit + 1);
  std::vector<std::complex<double>> phases(n * d * band);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = pts.point(i);
    for (std::size_t j = 0; j < d; ++j) {
      for (int k = -bandlimit; k <= bandlimit; ++k) {
        phases[(i * d + j) * band + static_cast<std::size_t>(k + bandlimit)] =
            std::polar(1.0, kTwoPi * static_cast<double>(k) * p[j]);
      }
    }
  }

  std::vector<int> k(d, -bandlimit);
  double total = 0.0;
  while (true) {
    bool zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    if (!zero) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> prod{1.0, 0.0};
        for (std::size_t j = 0; j < d; ++j)
          prod *= phases[(i * d + j) * band + static_cast<std::size_t>(k[j] + bandlimit)];
        s += prod;
      }
      double r = 1.0;
      for (std::size_t j = 0; j < d; ++j)
        r *= std::max(1.0, 2.0 * std::abs(static_cast<double>(k[j])));
      total += std::abs(s) / (static_cast<double>(n) * r);
    }
    std::size_t axis = 0;
    while (axis < d && ++k[axis] > bandlimit) {
      k[axis] = -bandlimit;
      ++axis;
    }
    if (axis == d) break;
  }
  return total;
}

}  // namespace ldseq
