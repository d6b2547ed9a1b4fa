#ifndef HSRG_ERRORS_HPP
#define HSRG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsrg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

/// The fifth frame point cannot be written with all-nonzero coefficients.
class FrameError : public Error {
 public:
  using Error::Error;
};

/// An enumeration produced a different number of objects than the geometry forces.
class CountMismatchError : public Error {
 public:
  using Error::Error;
};

/// An incidence or intersection pattern that the geometry forbids.
class StructureError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class CacheVersionError : public Error {
 public:
  using Error::Error;
};

class CacheChecksumError : public Error {
 public:
  using Error::Error;
};

class CacheInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsrg

#endif  // HSRG_ERRORS_HPP
