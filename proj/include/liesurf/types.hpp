#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace liesurf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Serial reference or OpenMP kernel. Both give identical results.
enum class Exec { serial, parallel };

/// Numerical thresholds shared by all modules. Every field is overridable
/// from the config file or the command line.
struct Tolerances {
  double membership = 1e-9;      // relative residual of a defining condition
  double rank = 1e-7;            // singular-value cutoff, relative to the largest
  double weight_rounding = 1e-8; // distance to the nearest integer for ad-weights
  double mu_pairing = 1e-8;      // absolute, on the log scale
  double relation = 1e-10;       // surface relation of the Fuchsian seed
  double period = 1e-9;          // ||exp(X) - 1|| for period-one elliptic elements
  double group = 1e-7;           // group defining condition (log-det and form residual)
};

// Error hierarchy. The CLI maps every Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

/// A matrix realization does not have the structure the construction assumes
/// (e.g. a Cartan projection that does not pair up, or a non-diagonal A0).
class RealizationError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class GenusConditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace liesurf
