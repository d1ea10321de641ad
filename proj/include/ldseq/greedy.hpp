#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldseq/errors.hpp"
#include "ldseq/kernels.hpp"
#include "ldseq/minimize.hpp"
#include "ldseq/parallel.hpp"
#include "ldseq/point_set.hpp"

namespace ldseq {

// Open arc of the circle; hi may exceed 1 when the arc wraps through 0.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Circle arcs between circularly consecutive occupied positions, each
// shrunk by r at both ends.  Arcs of nonpositive length are dropped.
inline std::vector<Arc> admissible_gaps(const PointSet& pts, double r) {
  if (pts.dim() != 1) throw UnsupportedDimension("admissible_gaps requires d=1");
  const std::size_t n = pts.count();
  if (n == 0) throw EmptySet("admissible_gaps on empty set");
  std::vector<double> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = reduce_mod1(pts.x(i));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<Arc> arcs;
  const std::size_t m = pos.size();
  for (std::size_t i = 0; i < m; ++i) {
    double lo = pos[i] + r;
    double hi = (i + 1 < m ? pos[i + 1] : pos[0] + 1.0) - r;
    if (hi > lo) arcs.push_back({lo, hi});
  }
  if (arcs.empty())
    throw NoAdmissibleRegion("exclusion radius " + std::to_string(r) +
                             " leaves no admissible arc");
  return arcs;
}

// Fourier truncation order as a function of the index N of the point
// being chosen: M = N or M = round(c*N).
struct FourierMRule {
  enum class Kind { EqualN, Multiple };
  Kind kind = Kind::EqualN;
  double factor = 1.0;

  int order_for(std::size_t new_index) const {
    double m = kind == Kind::EqualN ? static_cast<double>(new_index)
                                    : factor * static_cast<double>(new_index);
    return std::max(1, static_cast<int>(std::llround(m)));
  }
};

struct GreedyConfig {
  int exclusion_exponent = 10;
  double exclusion_floor = 1e-15;
  // d=1 pair kernel.  For TruncatedFourier the per-step order comes from
  // fourier_m_rule, not from kernel.fourier_m.
  EnergyKernel kernel = EnergyKernel::log_sin();
  // d>=2 path; required by next_point_dd.
  std::optional<ProductKernelSpec> product;
  FourierMRule fourier_m_rule;
  int grid_per_axis = 0;  // 0 -> 4096 in d=1, 64 in d=2, 32 in d>=3
  double refine_tolerance = 1e-12;
  double tie_tolerance = 1e-12;  // relative in energy
  enum class Engine { Direct, Spectral } engine = Engine::Direct;
  unsigned threads = 1;
  // Lemma-3 certificate sums recorded per step at M = mult * N (d=1).
  std::vector<int> certificate_multipliers{1, 10};
  bool record_theorem3 = true;

  double exclusion_radius(std::size_t new_index) const {
    return std::max(std::pow(static_cast<double>(new_index),
                             -static_cast<double>(exclusion_exponent)),
                    exclusion_floor);
  }

  int grid_for_dim(std::size_t d) const {
    if (grid_per_axis > 0) return grid_per_axis;
    if (d == 1) return 4096;
    return d == 2 ? 64 : 32;
  }
};

// Per-step audit record.
struct StepRecord {
  std::size_t step = 0;  // 1-based sequence index of the chosen point
  std::vector<double> point;
  double energy = 0.0;  // minimum total energy at the chosen point
  double min_distance = 0.0;  // realized torus distance to the prefix
                              // (per-axis minimum in d >= 2)
  std::map<int, double> lemma3_sums;      // multiplier -> Fourier sum
  std::optional<double> theorem3_value;   // product-sum value (d>=2)
  std::size_t evaluations = 0;
};

// Incrementally maintained exponential sums W_k = sum_n e^{2 pi i k x_n},
// k = 1..capacity.  Makes the truncated-Fourier total energy an O(M)
// evaluation independent of the point count.
class WeylTable {
public:
  WeylTable() = default;
  explicit WeylTable(int capacity) : w_(static_cast<std::size_t>(capacity)) {}

  static WeylTable from_points(const PointSet& pts, int capacity) {
    WeylTable t(capacity);
    for (std::size_t i = 0; i < pts.count(); ++i) t.add_point(pts.x(i));
    return t;
  }

  int capacity() const { return static_cast<int>(w_.size()); }
  std::size_t point_count() const { return n_; }

  void add_point(double x) {
    const std::complex<double> rot =
        std::polar(1.0, kTwoPi * reduce_mod1(x));
    std::complex<double> cur = rot;
    for (auto& w : w_) {
      w += cur;
      cur *= rot;
    }
    ++n_;
  }

  // offset*n + sum_{k=1}^{m} Re(e^{2 pi i k x} conj(W_k)) / k, summed in
  // descending k to add the small tail terms first.
  double energy(double x, int m, double offset) const {
    m = std::min(m, capacity());
    static thread_local std::vector<double> terms;
    terms.resize(static_cast<std::size_t>(m));
    const std::complex<double> rot = std::polar(1.0, kTwoPi * reduce_mod1(x));
    std::complex<double> cur = rot;
    for (int k = 1; k <= m; ++k) {
      const auto& w = w_[static_cast<std::size_t>(k - 1)];
      terms[static_cast<std::size_t>(k - 1)] =
          (cur.real() * w.real() + cur.imag() * w.imag()) / k;
      cur *= rot;
    }
    double s = 0.0;
    for (int k = m; k >= 1; --k) s += terms[static_cast<std::size_t>(k - 1)];
    return offset * static_cast<double>(n_) + s;
  }

  double derivative(double x, int m) const {
    m = std::min(m, capacity());
    const std::complex<double> rot = std::polar(1.0, kTwoPi * reduce_mod1(x));
    std::complex<double> cur = rot;
    double s = 0.0;
    for (int k = 1; k <= m; ++k) {
      const auto& w = w_[static_cast<std::size_t>(k - 1)];
      s += cur.real() * w.imag() - cur.imag() * w.real();
      cur *= rot;
    }
    return kTwoPi * s;
  }

private:
  std::vector<std::complex<double>> w_;
  std::size_t n_ = 0;
};

namespace detail {

struct Candidate {
  double energy = std::numeric_limits<double>::infinity();
  double x = 0.0;
  std::size_t evaluations = 0;
};

// Chooses the smallest position among candidates whose energy is within a
// relative tie tolerance of the best.
inline Candidate select_tied(const std::vector<Candidate>& cands, double tie_tolerance) {
  double emin = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) emin = std::min(emin, c.energy);
  const double margin = tie_tolerance * std::max(1.0, std::abs(emin));
  Candidate best;
  best.x = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) {
    if (c.energy <= emin + margin && c.x < best.x) best = c;
  }
  return best;
}

}  // namespace detail

// One greedy step in d=1: minimize the total pair energy over the
// admissible arcs.  For the (strictly convex per arc) log-sine kernel each
// arc is searched directly; trigonometric kernels get a uniform grid of
// max(G, 16 M) samples followed by refinement around every grid-local
// minimum.  Near-minimal candidates are resolved to the smallest position.
// `spectral` optionally supplies precomputed Weyl sums covering this step.
inline StepRecord next_point_1d(const PointSet& pts, const GreedyConfig& cfg,
                                const WeylTable* spectral = nullptr) {
  if (pts.dim() != 1) throw UnsupportedDimension("next_point_1d requires d=1");
  if (pts.count() == 0) throw EmptySet("next_point_1d needs at least one point");
  const std::size_t new_index = pts.count() + 1;
  const double r = cfg.exclusion_radius(new_index);
  const auto arcs = admissible_gaps(pts, r);

  EnergyKernel kern = cfg.kernel;
  if (kern.kind == KernelKind::TruncatedFourier)
    kern.fourier_m = cfg.fourier_m_rule.order_for(new_index);

  std::vector<detail::Candidate> cands;

  if (kern.singular()) {
    // Strictly convex restriction per arc: one minimizer per arc.
    cands.resize(arcs.size());
    parallel_chunks(arcs.size(), cfg.threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        auto f = [&](double t) { return total_energy(t, pts, kern); };
        auto df = [&](double t) {
          double s = 0.0;
          for (std::size_t j = 0, n = pts.count(); j < n; ++j)
            s += kern.deriv(t - pts.x(j));
          return s;
        };
        auto m = minimize_with_derivative(f, df, arcs[i].lo, arcs[i].hi,
                                          cfg.refine_tolerance);
        cands[i] = {m.value, reduce_mod1(m.x), m.evaluations};
      }
    });
  } else {
    // Grid + local refinement.  A degree-M trigonometric energy has at
    // most 2M local minima per period; 16 samples per potential
    // oscillation bracket all of them.
    const int order = std::max(1, kern.spectral_order());
    const std::size_t budget =
        std::max<std::size_t>(static_cast<std::size_t>(cfg.grid_for_dim(1)),
                              16 * static_cast<std::size_t>(order));
    double total_len = 0.0;
    for (const auto& a : arcs) total_len += a.length();

    WeylTable local;
    const WeylTable* table = nullptr;
    if (cfg.engine == GreedyConfig::Engine::Spectral &&
        kern.kind == KernelKind::TruncatedFourier) {
      if (spectral != nullptr && spectral->capacity() >= kern.fourier_m &&
          spectral->point_count() == pts.count()) {
        table = spectral;
      } else {
        local = WeylTable::from_points(pts, kern.fourier_m);
        table = &local;
      }
    }
    auto energy_at = [&](double t) {
      return table != nullptr ? table->energy(t, kern.fourier_m, kern.offset)
                              : total_energy(t, pts, kern);
    };
    auto deriv_at = [&](double t) {
      if (table != nullptr) return table->derivative(t, kern.fourier_m);
      double s = 0.0;
      for (std::size_t j = 0, n = pts.count(); j < n; ++j)
        s += kern.deriv(t - pts.x(j));
      return s;
    };

    std::vector<std::vector<detail::Candidate>> per_arc(arcs.size());
    parallel_chunks(arcs.size(), cfg.threads, [&](std::size_t b, std::size_t e) {
      std::vector<double> ts, es;
      for (std::size_t i = b; i < e; ++i) {
        const Arc& arc = arcs[i];
        const std::size_t samples = std::max<std::size_t>(
            5, static_cast<std::size_t>(
                   std::llround(static_cast<double>(budget) * arc.length() / total_len)));
        ts.resize(samples);
        es.resize(samples);
        for (std::size_t j = 0; j < samples; ++j) {
          ts[j] = arc.lo + arc.length() * static_cast<double>(j) /
                               static_cast<double>(samples - 1);
          es[j] = energy_at(ts[j]);
        }
        std::size_t evals = samples;
        for (std::size_t j = 0; j < samples; ++j) {
          const bool left_ok = j == 0 || es[j] <= es[j - 1];
          const bool right_ok = j + 1 == samples || es[j] <= es[j + 1];
          if (!left_ok || !right_ok) continue;
          const double lo = ts[j == 0 ? 0 : j - 1];
          const double hi = ts[j + 1 >= samples ? samples - 1 : j + 1];
          auto m = lo < hi ? minimize_with_derivative(energy_at, deriv_at, lo, hi,
                                                      cfg.refine_tolerance)
                           : MinimizeResult{ts[j], es[j], 0};
          per_arc[i].push_back({m.value, reduce_mod1(m.x), evals + m.evaluations});
          evals = 0;
        }
      }
    });
    for (auto& v : per_arc)
      cands.insert(cands.end(), v.begin(), v.end());
  }

  const auto best = detail::select_tied(cands, cfg.tie_tolerance);
  std::size_t evals = 0;
  for (const auto& c : cands) evals += c.evaluations;

  StepRecord rec;
  rec.step = new_index;
  rec.point = {best.x};
  rec.energy = best.energy;
  rec.evaluations = evals;
  rec.min_distance = 1.0;
  for (std::size_t i = 0, n = pts.count(); i < n; ++i)
    rec.min_distance = std::min(rec.min_distance,
                                torus_distance(best.x, reduce_mod1(pts.x(i))));
  if (kern.singular()) {
    for (int mult : cfg.certificate_multipliers) {
      const int m = mult * static_cast<int>(new_index);
      rec.lemma3_sums[mult] =
          total_energy(best.x, pts, EnergyKernel::truncated_fourier(m, 0.0));
    }
  }
  return rec;
}

namespace detail {

// Arc of the axis-j admissible region containing x (x assumed admissible);
// returned in unwrapped coordinates so that lo <= x' <= hi.
inline Arc arc_containing(const std::vector<Arc>& arcs, double x) {
  const double xr = reduce_mod1(x);
  for (const Arc& a : arcs) {
    if (xr >= a.lo && xr <= a.hi) return a;
    if (xr + 1.0 >= a.lo && xr + 1.0 <= a.hi) return {a.lo - 1.0, a.hi - 1.0};
  }
  throw NoAdmissibleRegion("refinement position left the admissible region");
}

}  // namespace detail

// One greedy step for the tensor-product energy in d >= 2 (also accepts
// d=1, where it degenerates to the scalar search on a grid): full tensor
// grid with half-cell offset, then cyclic coordinate-wise refinement
// around the best sample.  For the singular product kernel the exclusion
// constraint applies per axis.
inline StepRecord next_point_dd(const PointSet& pts, const GreedyConfig& cfg) {
  if (!cfg.product) throw Error("next_point_dd requires a product kernel");
  const ProductKernelSpec& spec = *cfg.product;
  const std::size_t d = pts.dim();
  if (spec.dimension != d) throw Error("product kernel dimension mismatch");
  const std::size_t n = pts.count();
  if (n == 0) throw EmptySet("next_point_dd needs at least one point");

  const std::size_t new_index = n + 1;
  const int m = cfg.fourier_m_rule.order_for(new_index);
  const int grid = cfg.grid_for_dim(d);
  const std::size_t g = static_cast<std::size_t>(grid);
  const bool singular = spec.singular();
  const double r = singular ? cfg.exclusion_radius(new_index) : 0.0;

  std::vector<double> nodes(g);
  for (std::size_t i = 0; i < g; ++i)
    nodes[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(grid);

  // Per-axis admissibility of grid nodes and (for refinement) arcs.
  std::vector<std::vector<char>> admissible(d, std::vector<char>(g, 1));
  std::vector<std::vector<Arc>> axis_arcs(d);
  if (singular) {
    for (std::size_t j = 0; j < d; ++j) {
      PointSet axis(1);
      for (std::size_t p = 0; p < n; ++p) axis.append1(reduce_mod1(pts.point(p)[j]));
      axis_arcs[j] = admissible_gaps(axis, r);  // throws NoAdmissibleRegion
      for (std::size_t i = 0; i < g; ++i) {
        bool ok = false;
        for (const Arc& a : axis_arcs[j]) {
          if ((nodes[i] >= a.lo && nodes[i] <= a.hi) ||
              (nodes[i] + 1.0 >= a.lo && nodes[i] + 1.0 <= a.hi)) {
            ok = true;
            break;
          }
        }
        admissible[j][i] = ok ? 1 : 0;
      }
      if (std::none_of(admissible[j].begin(), admissible[j].end(),
                       [](char c) { return c != 0; }))
        throw NoAdmissibleRegion("axis " + std::to_string(j) +
                                 " has no admissible grid node");
    }
  }

  // factors[j][p*g + i]: axis-j factor of point p at node i.
  std::vector<std::vector<double>> factors(d, std::vector<double>(n * g, 0.0));
  parallel_chunks(n, cfg.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) {
      auto pt = pts.point(p);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < g; ++i) {
          if (!admissible[j][i]) continue;
          factors[j][p * g + i] = spec.factor(nodes[i] - pt[j], m);
        }
      }
    }
  });

  // Cell energies in row-major (lexicographic) order over admissible nodes.
  std::size_t cells = 1;
  for (std::size_t j = 0; j < d; ++j) cells *= g;
  std::vector<double> cell_energy(cells, std::numeric_limits<double>::infinity());
  std::size_t grid_evals = 0;

  parallel_chunks(g, cfg.threads, [&](std::size_t b, std::size_t e) {
    std::vector<std::vector<double>> weights(d + 1, std::vector<double>(n));
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t i0 = b; i0 < e; ++i0) {
      if (!admissible[0][i0]) continue;
      for (std::size_t p = 0; p < n; ++p) weights[1][p] = factors[0][p * g + i0];
      // depth-first over remaining axes
      std::size_t stride0 = cells / g;
      auto recurse = [&](auto&& self, std::size_t axis, std::size_t base) -> void {
        if (axis == d) {
          double s = 0.0;
          for (std::size_t p = 0; p < n; ++p) s += weights[d][p];
          cell_energy[base] = s;
          return;
        }
        std::size_t stride = 1;
        for (std::size_t a = axis + 1; a < d; ++a) stride *= g;
        for (std::size_t i = 0; i < g; ++i) {
          if (!admissible[axis][i]) continue;
          for (std::size_t p = 0; p < n; ++p)
            weights[axis + 1][p] = weights[axis][p] * factors[axis][p * g + i];
          self(self, axis + 1, base + i * stride);
        }
      };
      recurse(recurse, 1, i0 * stride0);
    }
  });

  double emin = std::numeric_limits<double>::infinity();
  for (double e : cell_energy) emin = std::min(emin, e);
  if (!std::isfinite(emin)) throw NoAdmissibleRegion("no admissible grid cell");
  const double margin = cfg.tie_tolerance * std::max(1.0, std::abs(emin));
  std::size_t best_cell = cells;
  for (std::size_t c = 0; c < cells; ++c) {
    if (cell_energy[c] <= emin + margin) {
      best_cell = c;
      break;  // row-major scan: first hit is lexicographically smallest
    }
  }
  for (double e : cell_energy)
    if (std::isfinite(e)) ++grid_evals;

  std::vector<double> cur(d);
  {
    std::size_t rem = best_cell;
    for (std::size_t j = d; j-- > 0;) {
      cur[j] = nodes[rem % g];
      rem /= g;
    }
  }

  // Cyclic coordinate-wise refinement around the best sample.
  std::vector<std::vector<double>> cur_factors(d, std::vector<double>(n));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t p = 0; p < n; ++p)
      cur_factors[j][p] = spec.factor(cur[j] - pts.point(p)[j], m);

  const double cell_width = 1.0 / static_cast<double>(grid);
  std::vector<double> w(n);
  std::size_t refine_evals = 0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double max_move = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t p = 0; p < n; ++p) {
        double prod = 1.0;
        for (std::size_t a = 0; a < d; ++a)
          if (a != j) prod *= cur_factors[a][p];
        w[p] = prod;
      }

      // Bracket of one grid cell around the current coordinate, clipped to
      // the admissible arc when the kernel is singular.  `anchor` is the
      // current coordinate in the (possibly unwrapped) arc frame.
      double anchor = cur[j];
      double lo = anchor - cell_width;
      double hi = anchor + cell_width;
      if (singular) {
        const Arc a = detail::arc_containing(axis_arcs[j], cur[j]);
        anchor = reduce_mod1(cur[j]);
        if (anchor < a.lo) anchor += 1.0;
        lo = std::max(a.lo, anchor - cell_width);
        hi = std::min(a.hi, anchor + cell_width);
      }

      MinimizeResult mres;
      if (spec.form == ProductForm::OnePlusFourierProduct) {
        // Weighted Weyl sums make each axis evaluation O(M).
        std::vector<std::complex<double>> a(static_cast<std::size_t>(m));
        double w0 = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
          w0 += w[p];
          const std::complex<double> rot =
              std::polar(1.0, -kTwoPi * reduce_mod1(pts.point(p)[j]));
          std::complex<double> curp = rot;
          for (int k = 1; k <= m; ++k) {
            a[static_cast<std::size_t>(k - 1)] += w[p] * curp;
            curp *= rot;
          }
        }
        auto f = [&](double t) {
          const std::complex<double> rot = std::polar(1.0, kTwoPi * reduce_mod1(t));
          std::complex<double> curt = rot;
          static thread_local std::vector<double> terms;
          terms.resize(static_cast<std::size_t>(m));
          for (int k = 1; k <= m; ++k) {
            const auto& ak = a[static_cast<std::size_t>(k - 1)];
            terms[static_cast<std::size_t>(k - 1)] =
                (curt.real() * ak.real() + curt.imag() * ak.imag()) / k;
            curt *= rot;
          }
          double s = 0.0;
          for (int k = m; k >= 1; --k) s += terms[static_cast<std::size_t>(k - 1)];
          return w0 + s;
        };
        auto df = [&](double t) {
          const std::complex<double> rot = std::polar(1.0, kTwoPi * reduce_mod1(t));
          std::complex<double> curt = rot;
          double s = 0.0;
          for (int k = 1; k <= m; ++k) {
            const auto& ak = a[static_cast<std::size_t>(k - 1)];
            s += curt.real() * ak.imag() - curt.imag() * ak.real();
            curt *= rot;
          }
          return kTwoPi * s;
        };
        mres = minimize_with_derivative(f, df, lo, hi, cfg.refine_tolerance);
      } else {
        auto f = [&](double t) {
          double s = 0.0;
          for (std::size_t p = 0; p < n; ++p)
            s += w[p] * spec.factor(t - pts.point(p)[j], 0);
          return s;
        };
        auto df = [&](double t) {
          double s = 0.0;
          for (std::size_t p = 0; p < n; ++p)
            s += w[p] * spec.factor_deriv(t - pts.point(p)[j], 0);
          return s;
        };
        mres = minimize_with_derivative(f, df, lo, hi, cfg.refine_tolerance);
      }
      refine_evals += mres.evaluations;

      max_move = std::max(max_move, std::abs(mres.x - anchor));
      cur[j] = reduce_mod1(mres.x);
      for (std::size_t p = 0; p < n; ++p)
        cur_factors[j][p] = spec.factor(cur[j] - pts.point(p)[j], m);
    }
    if (max_move < cfg.refine_tolerance) break;
  }

  double energy = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    double prod = 1.0;
    for (std::size_t j = 0; j < d; ++j) prod *= cur_factors[j][p];
    energy += prod;
  }

  StepRecord rec;
  rec.step = new_index;
  rec.point = cur;
  rec.energy = energy;
  rec.evaluations = grid_evals + refine_evals;
  rec.min_distance = 1.0;
  for (std::size_t p = 0; p < n; ++p) {
    auto pt = pts.point(p);
    for (std::size_t j = 0; j < d; ++j)
      rec.min_distance =
          std::min(rec.min_distance, torus_distance(cur[j], reduce_mod1(pt[j])));
  }
  if (cfg.record_theorem3) {
    if (spec.form == ProductForm::OnePlusFourierProduct) {
      rec.theorem3_value = energy;
    } else {
      rec.theorem3_value =
          total_energy(cur, pts, ProductKernelSpec::one_plus_fourier(d), m);
    }
  }
  return rec;
}

// Extends the initial set to target_n points by repeated greedy steps.
// Deterministic given (initial, config); the initial points keep their
// sequence indices.
inline std::pair<PointSet, std::vector<StepRecord>> build_sequence(
    const PointSet& initial, std::size_t target_n, const GreedyConfig& cfg) {
  if (initial.count() == 0) throw EmptySet("build_sequence needs an initial point");
  if (target_n < initial.count())
    throw Error("target count smaller than the initial set");
  PointSet pts = initial;
  pts.set_provenance(Provenance::Greedy);
  std::vector<StepRecord> records;
  records.reserve(target_n - pts.count());

  std::optional<WeylTable> weyl;
  if (cfg.engine == GreedyConfig::Engine::Spectral && pts.dim() == 1 &&
      cfg.kernel.kind == KernelKind::TruncatedFourier) {
    weyl = WeylTable::from_points(pts, cfg.fourier_m_rule.order_for(target_n));
  }

  while (pts.count() < target_n) {
    StepRecord rec = pts.dim() == 1
                         ? next_point_1d(pts, cfg, weyl ? &*weyl : nullptr)
                         : next_point_dd(pts, cfg);
    pts.append(std::span<const double>(rec.point.data(), rec.point.size()));
    if (weyl) weyl->add_point(rec.point[0]);
    records.push_back(std::move(rec));
  }
  return {std::move(pts), std::move(records)};
}

}  // namespace ldseq
