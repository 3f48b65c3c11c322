#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace hypquant {

using ComplexValue = std::complex<double>;

/// Raised when a special function needs exp(z^2) outside the double range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when adaptive quadrature exhausts its subdivision budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a parameter set violates its type invariants. The message
/// names the violated invariant.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace numerics {

/// Error function for complex argument.
///
/// Relative accuracy is better than 1e-12 for |z| <= 25. Small and
/// near-imaginary arguments use the Maclaurin series summed in binary128;
/// the remaining region uses the Laplace continued fraction for the
/// Faddeeva function, erf(z) = 1 - exp(-z^2) w(iz). The result is exactly
/// odd, satisfies erf(conj z) = conj erf(z) exactly, is exactly real on the
/// real axis and exactly imaginary on the imaginary axis.
///
/// Throws OverflowError when |exp(-z^2)| is not representable.
ComplexValue erf_complex(ComplexValue z);

/// Imaginary error function, erfi(z) = -i erf(iz).
ComplexValue erfi(ComplexValue z);

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  /// Half-width used by callers when truncating an infinite domain.
  double tail_cutoff = 40.0;

  /// Throws InvalidParameter naming the first violated invariant.
  void validate() const;
};

/// Tail cutoff for integrands weighted by exp(-k^2 / (4 alpha)); at the
/// returned |k| the weight is below 1e-18.
double gaussian_tail_cutoff(double alpha);

using Integrand = std::function<ComplexValue(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// Stops when the summed error estimate is below
/// max(abs_tol, rel_tol * |result|). Throws ConvergenceError when
/// max_subdivisions intervals are in use without meeting the tolerance.
ComplexValue integrate_adaptive(const Integrand& f, double a, double b,
                                const QuadratureSpec& spec);

/// Same as integrate_adaptive but with the interval split at the given
/// interior breakpoints first (each must lie strictly inside (a, b)).
ComplexValue integrate_adaptive(const Integrand& f, double a, double b,
                                const QuadratureSpec& spec,
                                std::span<const double> breakpoints);

}  // namespace numerics
}  // namespace hypquant
