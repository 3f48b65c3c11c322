#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

// Maclaurin series of erf summed until the terms fall below 1e-60 of the
// running sum, in 100-digit arithmetic. Independent of the library path.
inline std::complex<double> erf_series(std::complex<double> z) {
  const Big x = z.real();
  const Big y = z.imag();
  const Big zz_re = x * x - y * y;
  const Big zz_im = 2 * x * y;
  // term_n = (-1)^n z^(2n+1) / n!
  Big t_re = x;
  Big t_im = y;
  Big s_re = x;
  Big s_im = y;
  for (int n = 1; n < 2000; ++n) {
    const Big re = -(t_re * zz_re - t_im * zz_im) / n;
    const Big im = -(t_re * zz_im + t_im * zz_re) / n;
    t_re = re;
    t_im = im;
    s_re += t_re / (2 * n + 1);
    s_im += t_im / (2 * n + 1);
    const Big mag = abs(t_re) + abs(t_im);
    const Big sum = abs(s_re) + abs(s_im);
    if (n > 4 && mag < Big("1e-60") * sum) break;
  }
  const Big scale = 2 / boost::math::constants::root_pi<Big>();
  return {static_cast<double>(s_re * scale), static_cast<double>(s_im * scale)};
}

}  // namespace oracle
