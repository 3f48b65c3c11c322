#include "hypquant/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

namespace hypquant::numerics {

namespace {

__extension__ typedef __float128 quad;

struct QuadComplex {
  quad re;
  quad im;
};

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
// log(DBL_MAX)
constexpr double kMaxExpArg = 709.78;
// Below this value of min(|z|^2, 2 Re(z)^2) the Maclaurin series loses at
// most exp(40) ~ 2e17 to cancellation, which binary128 absorbs.
constexpr double kSeriesCancellationLimit = 40.0;
constexpr int kContinuedFractionDepth = 24;

// Maclaurin series erf(z) = 2/sqrt(pi) sum (-1)^n z^(2n+1) / (n! (2n+1)).
ComplexValue erf_series(double x, double y) {
  const quad zr = x;
  const quad zi = y;
  // -z^2
  const quad mr = zi * zi - zr * zr;
  const quad mi = -2 * zr * zi;
  QuadComplex term{zr, zi};
  QuadComplex sum{zr, zi};
  const double r2 = x * x + y * y;
  for (int n = 1;; ++n) {
    const quad tr = (term.re * mr - term.im * mi) / n;
    const quad ti = (term.re * mi + term.im * mr) / n;
    term = {tr, ti};
    const quad denom = 2 * n + 1;
    const quad ar = tr / denom;
    const quad ai = ti / denom;
    sum.re += ar;
    sum.im += ai;
    if (n > r2) {
      const quad add2 = ar * ar + ai * ai;
      const quad sum2 = sum.re * sum.re + sum.im * sum.im;
      // |term| < 1e-36 |sum|
      if (add2 <= sum2 * static_cast<quad>(1e-72)) break;
    }
  }
  return {kTwoOverSqrtPi * static_cast<double>(sum.re),
          kTwoOverSqrtPi * static_cast<double>(sum.im)};
}

// Faddeeva w(zeta) for Im(zeta) > 0 and |zeta| large, by the Laplace
// continued fraction evaluated bottom-up at fixed depth.
ComplexValue faddeeva_cf(ComplexValue zeta) {
  ComplexValue t = zeta;
  for (int n = kContinuedFractionDepth; n >= 1; --n) {
    t = zeta - (0.5 * n) / t;
  }
  return ComplexValue{0.0, kInvSqrtPi} / t;
}

// erf for x >= 0, y >= 0.
ComplexValue erf_first_quadrant(double x, double y) {
  const double r2 = x * x + y * y;
  const double exp_arg = (y - x) * (y + x);  // Re(-z^2)
  if (exp_arg > kMaxExpArg) {
    throw OverflowError("erf_complex: exp(-z^2) exceeds the double range");
  }
  if (std::min(r2, 2.0 * x * x) <= kSeriesCancellationLimit) {
    return erf_series(x, y);
  }
  if (!std::isfinite(r2)) {
    // |exp(-z^2) w(iz)| <= 1/(sqrt(pi)|z|) with Re(-z^2) <= 0.
    return {1.0, 0.0};
  }
  // exp(-z^2) = exp(y^2 - x^2) * exp(-2ixy); the rounding error of x*y is
  // recovered with fma so the phase stays accurate for large xy.
  const double p = x * y;
  const double p_err = std::fma(x, y, -p);
  const ComplexValue phase =
      std::polar(1.0, -2.0 * p) * std::polar(1.0, -2.0 * p_err);
  const ComplexValue scale = std::exp(exp_arg) * phase;
  const ComplexValue w = faddeeva_cf(ComplexValue{-y, x});
  return 1.0 - scale * w;
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  ComplexValue value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const ComplexValue fc = f(center);
  ComplexValue kronrod = fc * kWgk[7];
  ComplexValue gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const ComplexValue fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

ComplexValue erf_complex(ComplexValue z) {
  const double re = z.real();
  const double im = z.imag();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("erf_complex: argument must be finite");
  }
  const ComplexValue w = erf_first_quadrant(std::abs(re), std::abs(im));
  double out_re = std::signbit(re) ? -w.real() : w.real();
  double out_im = std::signbit(im) ? -w.imag() : w.imag();
  if (re == 0.0) out_re = 0.0;
  if (im == 0.0) out_im = 0.0;
  return {out_re, out_im};
}

ComplexValue erfi(ComplexValue z) {
  const ComplexValue iz{-z.imag(), z.real()};
  const ComplexValue e = erf_complex(iz);
  // -i * e
  return {e.imag(), -e.real()};
}

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw InvalidParameter("QuadratureSpec: abs_tol > 0 required");
  if (!(rel_tol > 0.0)) throw InvalidParameter("QuadratureSpec: rel_tol > 0 required");
  if (max_subdivisions < 1) {
    throw InvalidParameter("QuadratureSpec: max_subdivisions >= 1 required");
  }
  if (!(tail_cutoff > 0.0)) {
    throw InvalidParameter("QuadratureSpec: tail_cutoff > 0 required");
  }
}

double gaussian_tail_cutoff(double alpha) { return 2.0 * std::sqrt(alpha) * 9.1; }

ComplexValue integrate_adaptive(const Integrand& f, double a, double b,
                                const QuadratureSpec& spec) {
  return integrate_adaptive(f, a, b, spec, {});
}

ComplexValue integrate_adaptive(const Integrand& f, double a, double b,
                                const QuadratureSpec& spec,
                                std::span<const double> breakpoints) {
  spec.validate();
  if (!(a < b)) throw DomainError("integrate_adaptive: a < b required");

  std::vector<double> edges{a};
  for (double p : breakpoints) {
    if (!(p > a && p < b)) {
      throw DomainError("integrate_adaptive: breakpoints must lie inside (a, b)");
    }
    edges.push_back(p);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::vector<Segment> heap;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i] < edges[i + 1]) heap.push_back(gauss_kronrod(f, edges[i], edges[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end());

  // Exact totals in order of position, so the result does not depend on
  // the refinement history.
  auto totals = [&heap]() {
    std::vector<const Segment*> order;
    order.reserve(heap.size());
    for (const auto& s : heap) order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [](const Segment* l, const Segment* r) { return l->a < r->a; });
    ComplexValue value{};
    double error = 0.0;
    for (const Segment* s : order) {
      value += s->value;
      error += s->error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  for (;;) {
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
      std::tie(value, error) = totals();
      if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
          throw ConvergenceError("integrate_adaptive: non-finite integrand");
        }
        return value;
      }
    }
    if (static_cast<int>(heap.size()) >= spec.max_subdivisions) {
      throw ConvergenceError("integrate_adaptive: max_subdivisions exhausted");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("integrate_adaptive: interval below machine resolution");
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
}

}  // namespace hypquant::numerics
