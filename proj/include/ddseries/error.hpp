#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ddseries {

using cplx = std::complex<double>;

// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A meromorphic function was evaluated exactly at one of its poles.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, cplx location, cplx residue)
      : Error(what), location_(location), residue_(residue) {}
  cplx location() const noexcept { return location_; }
  // Coefficient of 1/(s - location); zero when only the location is known.
  cplx residue() const noexcept { return residue_; }

 private:
  cplx location_;
  cplx residue_;
};

// Argument outside the region where a routine is defined or trustworthy.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested accuracy cannot be certified with the given resources.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Malformed textual input (complex literals, data files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input parsed fine but failed a numerical consistency check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An iterated limit does not exist.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddseries
