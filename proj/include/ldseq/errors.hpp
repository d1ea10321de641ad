#pragma once

#include <stdexcept>
#include <string>

namespace ldseq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Kernel evaluated at a pair distance of (numerically) zero; the caller
// must enforce the exclusion constraint before evaluating singular kernels.
class DegenerateDistance : public Error {
public:
  using Error::Error;
};

// The exclusion radius wiped out every candidate arc / grid node.
class NoAdmissibleRegion : public Error {
public:
  using Error::Error;
};

class EmptySet : public Error {
public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
public:
  using Error::Error;
};

class InsufficientPoints : public Error {
public:
  using Error::Error;
};

// Frequency-vector enumeration would exceed the configured budget.
class CostGuardExceeded : public Error {
public:
  using Error::Error;
};

// Unreadable or malformed input file (CSV / JSONL).
class MalformedInput : public Error {
public:
  using Error::Error;
};

}  // namespace ldseq
