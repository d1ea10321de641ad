#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ldseq/errors.hpp"

namespace ldseq {

// Reduce t into [0, 1). Values that round up to 1.0 after fmod are mapped
// to 0.0 so the result is always strictly below 1.
inline double reduce_mod1(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}

// Torus distance |a - b| on the circle, in [0, 1/2].
inline double torus_distance(double a, double b) {
  double d = reduce_mod1(a - b);
  return d <= 0.5 ? d : 1.0 - d;
}

enum class Provenance { Greedy, Baseline, File };

// An ordered list of points in [0,1]^d.  Coordinates are stored verbatim
// (a 1D input of 1.0 stays 1.0: star discrepancy distinguishes 1.0 from
// 0.0 even though the torus energy does not); callers reduce mod 1 when
// evaluating kernels.  Order is insertion order, never sorted in place.
class PointSet {
public:
  explicit PointSet(std::size_t dim = 1, Provenance prov = Provenance::File)
      : dim_(dim), provenance_(prov) {
    if (dim_ == 0) throw UnsupportedDimension("point dimension must be >= 1");
  }

  static PointSet from_1d(std::vector<double> xs, Provenance prov = Provenance::File) {
    PointSet ps(1, prov);
    ps.coords_ = std::move(xs);
    ps.validate_all();
    return ps;
  }

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  Provenance provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = p; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  // 1D convenience accessor.
  double x(std::size_t i) const { return coords_[i * dim_]; }

  const std::vector<double>& raw() const { return coords_; }

  void append(std::span<const double> p) {
    if (p.size() != dim_) throw Error("point dimension mismatch");
    for (double c : p) validate_coord(c);
    coords_.insert(coords_.end(), p.begin(), p.end());
  }

  void append(std::initializer_list<double> p) {
    append(std::span<const double>(p.begin(), p.size()));
  }

  void append1(double x) {
    validate_coord(x);
    if (dim_ != 1) throw Error("append1 requires a 1D point set");
    coords_.push_back(x);
  }

  PointSet prefix(std::size_t n) const {
    if (n > count()) throw InsufficientPoints("prefix longer than sequence");
    PointSet ps(dim_, provenance_);
    ps.coords_.assign(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(n * dim_));
    return ps;
  }

private:
  static void validate_coord(double c) {
    if (!(c >= 0.0 && c <= 1.0))
      throw Error("coordinate outside [0,1]: " + std::to_string(c));
  }
  void validate_all() const {
    for (double c : coords_) validate_coord(c);
  }

  std::size_t dim_;
  std::vector<double> coords_;
  Provenance provenance_;
};

}  // namespace ldseq
