#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ldseq/discrepancy.hpp"
#include "ldseq/errors.hpp"
#include "ldseq/greedy.hpp"
#include "ldseq/kernels.hpp"
#include "ldseq/point_set.hpp"

namespace ldseq {

// S = sum_n sum_{k=1}^{M} cos(2 pi k (x - x_n)) / k.  For a greedily
// chosen x this is expected to be <= 0 up to the Fourier tail; the
// asymptotic huge-M regime is replaced by desk-scale multiples of N.
inline double lemma3_negativity(const PointSet& pts, double x, int m) {
  if (pts.dim() != 1) throw UnsupportedDimension("lemma3_negativity requires d=1");
  return total_energy(x, pts, EnergyKernel::truncated_fourier(m, 0.0));
}

// sum_n prod_j (1 + sum_{k=1}^{M} cos(2 pi k (x_j - x_{n,j})) / k); the
// d-dimensional admissibility condition value at the candidate point.
inline double theorem3_condition(const PointSet& pts, std::span<const double> x, int m) {
  return total_energy(x, pts, ProductKernelSpec::one_plus_fourier(pts.dim()), m);
}

struct MinEnergyReport {
  double x = 0.0;
  double value = 0.0;
};

// Admissible minimizer of sum_n -ln(2 sin(pi |x - x_n|)) with its value:
// the offset-free log-sine minimum observed at exclusion radius r.
inline MinEnergyReport min_energy_report(const PointSet& pts, double r) {
  GreedyConfig cfg;
  cfg.kernel = EnergyKernel::log_sin(0.0);
  cfg.certificate_multipliers.clear();
  // Pin the search's exclusion radius to exactly r: with a huge exponent
  // the N-dependent term underflows and the floor r always dominates.
  cfg.exclusion_floor = r;
  cfg.exclusion_exponent = 400;
  StepRecord rec = next_point_1d(pts, cfg);
  return {rec.point.at(0), rec.energy};
}

struct ScanRow {
  std::size_t n = 0;
  double discrepancy = 0.0;         // D(X_N) for 1D inputs, prefix D for d >= 2
  double prefix_discrepancy = 0.0;  // 1D prefix D for 1D inputs (else = discrepancy)
  double ratio_n_log = 0.0;         // D * N / ln N   (d=1)  or  D * N / (ln N)^d
  double ratio_sqrt_log = 0.0;      // D * sqrt(N) / ln N
};

struct ScanReport {
  std::vector<ScanRow> rows;
  double max_ratio_n_log = 0.0;
  double max_ratio_sqrt_log = 0.0;
};

// Builds the greedy sequence once to n_max and measures the discrepancy of
// every stride-th prefix: D(X_N) of the index embedding for 1D sequences,
// the prefix's own discrepancy for d >= 2.
inline ScanReport conjecture_scan(const PointSet& initial, std::size_t n_max,
                                  const GreedyConfig& cfg, std::size_t stride) {
  if (stride == 0) throw Error("conjecture_scan stride must be >= 1");
  if (n_max < initial.count() + 1)
    throw Error("conjecture_scan needs n_max > initial count");
  auto [seq, records] = build_sequence(initial, n_max, cfg);

  ScanReport report;
  const double d = static_cast<double>(seq.dim());
  for (std::size_t n = initial.count(); n <= n_max; ++n) {
    if (n % stride != 0) continue;
    const double disc = seq.dim() == 1 ? star_disc_dd(xn_embed(seq, n)).value
                                       : star_disc_dd(seq.prefix(n)).value;
    const double ln = std::log(static_cast<double>(n));
    ScanRow row;
    row.n = n;
    row.discrepancy = disc;
    row.prefix_discrepancy =
        seq.dim() == 1 ? star_disc_1d(seq.prefix(n)).value : disc;
    row.ratio_n_log = ln > 0.0 ? disc * static_cast<double>(n) / std::pow(ln, d) : 0.0;
    row.ratio_sqrt_log =
        ln > 0.0 ? disc * std::sqrt(static_cast<double>(n)) / ln : 0.0;
    report.max_ratio_n_log = std::max(report.max_ratio_n_log, row.ratio_n_log);
    report.max_ratio_sqrt_log = std::max(report.max_ratio_sqrt_log, row.ratio_sqrt_log);
    report.rows.push_back(row);
  }
  return report;
}

// True iff the first 2^depth points carry the dyadic block signature of a
// (permuted) base-2 van der Corput sequence: indices 1..2 are {1/2, 1} and
// block 2^{j-1}+1 .. 2^j is a permutation of the odd multiples of 2^-j.
inline bool dyadic_block_check(const PointSet& seq, int depth, double tol) {
  if (seq.dim() != 1) throw UnsupportedDimension("dyadic_block_check requires d=1");
  if (depth < 1) throw Error("dyadic_block_check depth must be >= 1");
  const std::size_t need = std::size_t{1} << depth;
  if (seq.count() < need)
    throw InsufficientPoints("sequence shorter than 2^depth");

  auto matches = [tol](std::vector<double> got, std::vector<double> want) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < got.size(); ++i)
      if (std::abs(got[i] - want[i]) > tol) return false;
    return true;
  };

  if (!matches({seq.x(0), seq.x(1)}, {0.5, 1.0})) return false;
  for (int j = 2; j <= depth; ++j) {
    const std::size_t lo = std::size_t{1} << (j - 1);  // 0-based start
    const std::size_t hi = std::size_t{1} << j;
    std::vector<double> got, want;
    for (std::size_t i = lo; i < hi; ++i) got.push_back(seq.x(i));
    const double denom = static_cast<double>(std::size_t{1} << j);
    for (std::size_t odd = 1; odd < hi; odd += 2)
      want.push_back(static_cast<double>(odd) / denom);
    if (!matches(std::move(got), std::move(want))) return false;
  }
  return true;
}

}  // namespace ldseq
