#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ldseq/errors.hpp"
#include "ldseq/point_set.hpp"

namespace ldseq {

// Digit reversal of n in base b placed after the radix point.
inline double radical_inverse(std::uint64_t n, unsigned base) {
  if (base < 2) throw Error("radical_inverse base must be >= 2");
  double inv = 1.0 / static_cast<double>(base);
  double factor = inv;
  double r = 0.0;
  while (n > 0) {
    r += factor * static_cast<double>(n % base);
    n /= base;
    factor *= inv;
  }
  return r;
}

inline std::vector<double> halton_point(std::uint64_t n, const std::vector<unsigned>& bases) {
  std::vector<double> p;
  p.reserve(bases.size());
  for (unsigned b : bases) p.push_back(radical_inverse(n, b));
  return p;
}

inline PointSet halton_set(std::size_t count, const std::vector<unsigned>& bases,
                           unsigned index_origin = 1) {
  PointSet ps(bases.size(), Provenance::Baseline);
  for (std::size_t i = 0; i < count; ++i) {
    auto p = halton_point(index_origin + i, bases);
    ps.append(std::span<const double>(p.data(), p.size()));
  }
  return ps;
}

// {(n/N, radical_inverse(n, b)) : n = origin .. origin+N-1}.
inline PointSet hammersley_set(std::size_t count, unsigned base,
                               unsigned index_origin = 1) {
  if (count == 0) throw EmptySet("hammersley_set needs N >= 1");
  PointSet ps(2, Provenance::Baseline);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t n = index_origin + i;
    ps.append({static_cast<double>(n) / static_cast<double>(count),
               radical_inverse(n, base)});
  }
  return ps;
}

// {(n/N, frac(alpha n)) : n = 1..N}.
inline PointSet kronecker_set(std::size_t count, double alpha) {
  if (count == 0) throw EmptySet("kronecker_set needs N >= 1");
  PointSet ps(2, Provenance::Baseline);
  for (std::size_t n = 1; n <= count; ++n) {
    ps.append({static_cast<double>(n) / static_cast<double>(count),
               reduce_mod1(alpha * static_cast<double>(n))});
  }
  return ps;
}

inline PointSet van_der_corput(std::size_t count, unsigned base,
                               unsigned index_origin = 0) {
  PointSet ps(1, Provenance::Baseline);
  for (std::size_t i = 0; i < count; ++i)
    ps.append1(radical_inverse(index_origin + i, base));
  return ps;
}

// 1D equispaced set {n/N : n = 1..N}.
inline PointSet equispaced_set(std::size_t count) {
  if (count == 0) throw EmptySet("equispaced_set needs N >= 1");
  PointSet ps(1, Provenance::Baseline);
  for (std::size_t n = 1; n <= count; ++n)
    ps.append1(static_cast<double>(n) / static_cast<double>(count));
  return ps;
}

// Classical comparison generators, tagged for manifests.
struct BaselineSpec {
  enum class Family { VanDerCorput, Halton, Hammersley, Kronecker, Equispaced };
  Family family = Family::Hammersley;
  std::vector<unsigned> bases{2};
  double alpha = 0.0;
  unsigned index_origin = 1;

  PointSet generate(std::size_t count) const {
    switch (family) {
      case Family::VanDerCorput:
        return van_der_corput(count, bases.at(0), index_origin);
      case Family::Halton:
        return halton_set(count, bases, index_origin);
      case Family::Hammersley:
        return hammersley_set(count, bases.at(0), index_origin);
      case Family::Kronecker:
        return kronecker_set(count, alpha);
      case Family::Equispaced:
        return equispaced_set(count);
    }
    throw Error("unknown baseline family");
  }
};

}  // namespace ldseq
