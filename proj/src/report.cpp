#include "hypquant/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>

#include "hypquant/classical.hpp"
#include "hypquant/numerics.hpp"
#include "hypquant/validate.hpp"

namespace hypquant::report {

using std::numbers::pi;

std::string format_number(double x, int digits) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string format_complex(ComplexValue z) {
  const std::string sign = std::signbit(z.imag()) ? " - " : " + ";
  return format_number(z.real()) + sign + format_number(std::abs(z.imag())) + "i";
}

std::string in_range(double x, double lo, double hi) {
  return format_number(x, 6) + " in [" + format_number(lo) + ", " + format_number(hi) + "]";
}

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

Grid2D square_grid(double lo, double hi, std::size_t n) { return {lo, hi, lo, hi, n, n}; }

Field2D free_field(const Grid2D& g, const freepacket::FreePacketParams& p) {
  return sample(g, [&](double u, double v) { return freepacket::packet_closed(u, v, p); });
}

}  // namespace

std::string format_finding(const Finding& f) {
  return f.claim + " | " + f.published_value + " | " + f.computed_value + " | " + f.verdict;
}

std::string render_findings(const std::vector<Finding>& findings) {
  std::string out;
  for (const auto& f : findings) out += format_finding(f) + "\n";
  return out;
}

double wide_cosine_projection(int n, const boxpacket::BoxPacketParams& p) {
  p.validate();
  if (n < 1) throw InvalidParameter("mode index n >= 1 required");
  const freepacket::FreePacketParams fp{p.alpha, p.d};
  auto f = [&](double u) -> ComplexValue {
    return {freepacket::initial_condition(u, fp) * std::cos(n * pi * u / p.L), 0.0};
  };
  const std::array<double, 3> breaks{-std::abs(p.d), 0.0, std::abs(p.d)};
  std::vector<double> inner;
  for (double b : breaks) {
    if (inner.empty() || b > inner.back()) inner.push_back(b);
  }
  return 2.0 / p.L *
         numerics::integrate_adaptive(f, -p.L, p.L, boxpacket::coefficient_quadrature(), inner)
             .real();
}

std::vector<Finding> box_coefficient_findings(const boxpacket::BoxPacketParams& p, int n_last) {
  p.validate();
  const auto quad = boxpacket::coefficient_quadrature();
  const std::string tag = "L=" + format_number(p.L) + " alpha=" + format_number(p.alpha) +
                          " d=" + format_number(p.d);
  std::vector<Finding> out;
  double erf_gap = 0.0;
  double magnitude_gap = 0.0;
  int mismatches = 0;
  for (int n = 1; n <= n_last; ++n) {
    const ComplexValue published = boxpacket::coefficient_closed(n, p);
    const double numeric = boxpacket::coefficient_numeric(n, p, quad);
    const double gap = std::abs(published - numeric);
    const bool agree = gap < 1e-6;
    if (!agree) ++mismatches;
    out.push_back({"box coefficient A(" + std::to_string(n) + ") " + tag,
                   format_complex(published), format_number(numeric),
                   agree ? "AGREE" : "MISMATCH (quadrature normative)"});

    erf_gap = std::max(erf_gap, std::abs(boxpacket::coefficient_erf(n, p) - numeric));
    const double scaled =
        std::abs(published) * std::exp(-(n * pi) * (n * pi) / (2.0 * p.alpha * p.L * p.L));
    magnitude_gap = std::max(magnitude_gap, std::abs(scaled - std::abs(wide_cosine_projection(n, p))));
  }
  const std::string span = "n=1.." + std::to_string(n_last);
  out.push_back({"published A(n) vs projection (2/L) int_{-L/2}^{L/2} Psi(u,0) trig, " + span,
                 "agreement claimed", std::to_string(mismatches) + " of " +
                     std::to_string(n_last) + " differ by >= 1e-6",
                 mismatches == 0 ? "AGREE" : "MISMATCH (quadrature normative)"});
  out.push_back({"complex-erf form of the same projection, " + span, "-",
                 "max |diff| = " + format_number(erf_gap, 3),
                 erf_gap < 1e-6 ? "AGREE" : "MISMATCH"});
  out.push_back({"|published A(n)| * exp(-n^2 pi^2/(2 alpha L^2)) vs |(2/L) int_{-L}^{L} Psi(u,0) "
                 "cos(n pi u/L) du|, " + span,
                 "-", "max |diff| = " + format_number(magnitude_gap, 3),
                 magnitude_gap < 1e-10
                     ? "EXPLAINS MISMATCH (exponent sign, interval [-L,L], cos for every n, phase)"
                     : "UNEXPLAINED"});
  out.push_back({"coefficient normalization", "unstated",
                 "bare trig: A(n) = (2/L) int Psi(u,0) trig(n pi u/L) du", "RESOLVED"});
  return out;
}

Finding box_parity_finding(const boxpacket::BoxPacketParams& p) {
  const boxpacket::BoxPacketParams centered{p.L, p.alpha, 0.0, p.n_max};
  const ComplexValue published = boxpacket::coefficient_closed(2, centered);
  const double numeric = boxpacket::coefficient_numeric(2, centered, boxpacket::coefficient_quadrature());
  const bool zero = std::abs(published) < 1e-10;
  return {"box coefficient A(2) for even data d=0, L=" + format_number(p.L) +
              " alpha=" + format_number(p.alpha),
          format_complex(published), format_number(numeric),
          zero ? "AGREE" : "MISMATCH (published form has cos content for even n)"};
}

double amended_var_u(const freepacket::FreePacketParams& p) {
  p.validate();
  const double a = p.alpha;
  const double d = p.d;
  const double e = std::exp(2.0 * d * d * a);
  const double inner =
      (std::sqrt(2.0 / (pi * a)) + d * e * std::erf(std::sqrt(2.0 * a) * d)) / (1.0 + e);
  return 1.0 / (4.0 * a) + 0.5 * d * d * (1.0 + std::tanh(d * d * a)) - inner * inner;
}

double amended_var_p(const freepacket::FreePacketParams& p, const PhysicalConstants& c) {
  p.validate();
  c.validate();
  const double a = p.alpha;
  const double d = p.d;
  const double e = 1.0 + std::exp(2.0 * d * d * a);
  return a * c.hbar * c.hbar * (1.0 - 4.0 / e * (d * d * a - (2.0 / pi) / e));
}

std::vector<Finding> moment_findings(std::span<const freepacket::FreePacketParams> sets) {
  const PhysicalConstants c;
  std::vector<Finding> out;
  auto verdict = [](double published, double computed) {
    return std::abs(published - computed) <= 1e-8 * std::max(1.0, std::abs(computed)) ? "AGREE"
                                                                                   : "MISMATCH";
  };
  for (const auto& p : sets) {
    const auto m = validate::halfline_moments(p, c, validate::moments_quadrature(p));
    const std::string tag = " alpha=" + format_number(p.alpha) + " d=" + format_number(p.d);
    // i <p> = -hbar Psi(0)^2 / (2N) on the half line
    const double imag_mean = c.hbar * std::pow(freepacket::initial_condition(0.0, p), 2) /
                             (2.0 * m.norm);
    const double pu = validate::published_var_u(p);
    const double pp = validate::published_var_p(p, c);
    const double au = amended_var_u(p);
    const double ap = amended_var_p(p, c);
    out.push_back({"(Delta u)^2 printed" + tag, format_number(pu), format_number(m.var_u),
                   verdict(pu, m.var_u)});
    out.push_back({"(Delta u)^2 with d Erf(sqrt(2 alpha) d)" + tag, format_number(au),
                   format_number(m.var_u), verdict(au, m.var_u)});
    out.push_back({"(Delta p_u)^2 printed" + tag, format_number(pp), format_number(m.var_p),
                   verdict(pp, m.var_p)});
    out.push_back({"(Delta p_u)^2 with 4/E, vs <p^2> - <p>^2 using imaginary <p>" + tag,
                   format_number(ap), format_number(m.var_p + imag_mean * imag_mean),
                   verdict(ap, m.var_p + imag_mean * imag_mean)});
  }
  const freepacket::FreePacketParams anchor{1.0, 4.0};
  const auto m = validate::halfline_moments(anchor, c, validate::moments_quadrature(anchor));
  out.push_back({"(Delta u)^2 (Delta p_u)^2 ~ hbar^2/4 for alpha d^2 > 1 (alpha=1 d=4)", "0.25",
                 format_number(m.product),
                 std::abs(m.product - 0.25) <= 0.05 * 0.25 ? "AGREE" : "MISMATCH"});
  out.push_back({"half-line integration reading", "{0, infinity}",
                 "full two-Gaussian Psi(u,0); the amended var_u matches it", "RESOLVED"});
  return out;
}

std::vector<Finding> current_findings() {
  const freepacket::FreePacketParams p{1.0, 2.0};
  const PhysicalConstants c;
  double sup_real = 0.0;
  const Field2D coarse = free_field(square_grid(-6.0, 6.0, 301), p);
  const Field2D fine = free_field(square_grid(-6.0, 6.0, 601), p);
  const auto j = validate::probability_current(fine, c);
  for (const auto* f : {&j.j_u, &j.j_v}) {
    for (const auto& z : f->values()) sup_real = std::max(sup_real, std::abs(z.real()));
  }
  const auto jc = validate::probability_current(coarse, c);
  const double lor_c = validate::current_divergence(jc).interior_max_abs();
  const double lor_f = validate::current_divergence(j).interior_max_abs();
  const double euc_c = validate::euclidean_divergence(jc).interior_max_abs();
  const double euc_f = validate::euclidean_divergence(j).interior_max_abs();
  return {
      {"J_mu = (hbar^2/2m)(Psi* d Psi - Psi d Psi*) is real", "real current",
       "purely imaginary, max |Re J| = " + format_number(sup_real, 3),
       "CONVENTION (observable current is -i J)"},
      {"d_u J_u + d_v J_v = 0 (alpha=1 d=2, h 0.04 -> 0.02)", "0",
       format_number(euc_c, 4) + " -> " + format_number(euc_f, 4), "MISMATCH (does not converge)"},
      {"d_u J_u - d_v J_v = 0 (alpha=1 d=2, h 0.04 -> 0.02)", "0",
       format_number(lor_c, 4) + " -> " + format_number(lor_f, 4) + " (ratio " +
           format_number(lor_c / lor_f, 4) + ")",
       within(lor_c / lor_f, 3.5, 4.5) ? "HOLDS (wave-equation sign)" : "MISMATCH"},
  };
}

std::vector<Finding> erratum_report() {
  auto out = box_coefficient_findings({6.0, 5.0, 1.5, 200}, 40);
  out.push_back(box_parity_finding({6.0, 5.0, 1.5, 200}));
  const std::array<freepacket::FreePacketParams, 6> sets{
      {{1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {1.0, 4.0}, {2.0, 3.0}, {3.0, 0.7}}};
  const auto moments = moment_findings(sets);
  out.insert(out.end(), moments.begin(), moments.end());
  const auto currents = current_findings();
  out.insert(out.end(), currents.begin(), currents.end());
  return out;
}

std::string format_check(const CheckResult& r) {
  return "criterion " + std::to_string(r.id) + (r.pass ? " PASS " : " FAIL ") + r.title + ": " +
         r.detail;
}

CheckResult check_spectral_equivalence() {
  const freepacket::FreePacketParams p{1.0, 2.0};
  const Grid2D g = square_grid(-6.0, 6.0, 121);
  const auto quad = freepacket::spectral_quadrature(p);
  const auto start = std::chrono::steady_clock::now();
  double gap = 0.0;
  for (std::size_t j = 0; j < g.n_v; ++j) {
    for (std::size_t i = 0; i < g.n_u; ++i) {
      const double u = g.u(i);
      const double v = g.v(j);
      gap = std::max(gap, std::abs(freepacket::packet_spectral(u, v, p, quad) -
                                   freepacket::packet_closed(u, v, p)));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {1, "spectral vs closed form", gap < 1e-8 && seconds < 60.0,
          "max diff " + format_number(gap, 3) + " (< 1e-8), " + format_number(seconds, 3) +
              " s (< 60 s)"};
}

CheckResult check_initial_data() {
  const freepacket::FreePacketParams p{1.0, 2.0};
  double gap = 0.0;
  for (int k = 0; k <= 800; ++k) {
    const double u = -10.0 + 20.0 * k / 800.0;
    gap = std::max(gap, std::abs(freepacket::packet_closed(u, 0.0, p) -
                                 freepacket::initial_condition(u, p)));
  }
  return {2, "initial-data identity", gap < 1e-14,
          "max diff over 801 samples " + format_number(gap, 3) + " (< 1e-14)"};
}

CheckResult check_pde_annihilation() {
  const freepacket::FreePacketParams p{1.0, 2.0};
  const auto free = validate::PotentialSpec::free();
  const PhysicalConstants c;
  auto residual = [&](const Grid2D& g, double* max_psi) {
    const Field2D f = free_field(g, p);
    if (max_psi) *max_psi = f.max_abs();
    return validate::pde_residual(f, free, c).interior_max_abs();
  };
  // Equal spacing: the stencils cancel exactly on functions of u +/- v.
  double max_psi = 0.0;
  const double iso_coarse = residual(square_grid(-6.0, 6.0, 601), nullptr);
  const double iso_fine = residual(square_grid(-6.0, 6.0, 1201), &max_psi);
  // h_v = 1.25 h_u exposes the O(h^2) truncation term.
  const double an_coarse = residual({-6.0, 6.0, -6.0, 6.0, 601, 481}, nullptr);
  const double an_fine = residual({-6.0, 6.0, -6.0, 6.0, 1201, 961}, nullptr);
  const double ratio = an_coarse / an_fine;
  const double bound = 1e-4 * max_psi;
  const bool pass = within(ratio, 3.5, 4.5) && an_fine < bound && iso_fine < bound;
  return {3, "PDE annihilation", pass,
          "h_v=1.25h_u ratio " + in_range(ratio, 3.5, 4.5) + ", sup at h_u=0.01 " +
              format_number(an_fine, 3) + "; h_v=h_u sup " + format_number(iso_coarse, 3) +
              " -> " + format_number(iso_fine, 3) + " (exact cancellation, roundoff only); bound " +
              format_number(bound, 3)};
}

CheckResult check_conservation() {
  const freepacket::FreePacketParams p{1.0, 2.0};
  const PhysicalConstants c;
  auto divergence = [&](std::size_t n) {
    const Field2D f = free_field(square_grid(-6.0, 6.0, n), p);
    return validate::current_divergence(validate::probability_current(f, c)).interior_max_abs();
  };
  const double coarse = divergence(601);
  const double fine = divergence(1201);
  const double ratio = coarse / fine;
  return {4, "conservation law", within(ratio, 3.5, 4.5),
          "sup |d_u J_u - d_v J_v| " + format_number(coarse, 3) + " -> " +
              format_number(fine, 3) + ", ratio " + in_range(ratio, 3.5, 4.5)};
}

CheckResult check_uncertainty() {
  const PhysicalConstants c;
  auto moments = [&](double alpha, double d) {
    const freepacket::FreePacketParams p{alpha, d};
    return validate::halfline_moments(p, c, validate::moments_quadrature(p));
  };
  const auto m = moments(1.0, 4.0);
  bool pass = within(m.var_u, 0.2375, 0.2625) && within(m.var_p, 0.95, 1.05) &&
              within(m.product, 0.2375, 0.2625);
  std::string detail = "var_u " + in_range(m.var_u, 0.2375, 0.2625) + ", var_p " +
                       in_range(m.var_p, 0.95, 1.05) + ", product " +
                       in_range(m.product, 0.2375, 0.2625) + "; |product - 1/4| at alpha d^2 =";
  double previous = INFINITY;
  for (double d : {2.0, 4.0, 8.0}) {
    const double dev = std::abs(moments(1.0, d).product - 0.25);
    detail += " " + format_number(d * d) + ": " + format_number(dev, 3);
    pass = pass && dev <= previous + 1e-10;
    previous = dev;
  }
  return {5, "uncertainty minimization", pass, detail + " (non-increasing within 1e-10)"};
}

CheckResult check_box_coefficients() {
  const boxpacket::BoxPacketParams p{6.0, 5.0, 1.5, 200};
  const auto quad = boxpacket::coefficient_quadrature();
  double verbatim = 0.0;
  for (int n = 1; n <= 40; ++n) {
    verbatim = std::max(verbatim, std::abs(boxpacket::coefficient_closed(n, p) -
                                           boxpacket::coefficient_numeric(n, p, quad)));
  }
  if (verbatim < 1e-6) {
    return {6, "box coefficients", true,
            "published formula agrees, max diff " + format_number(verbatim, 3) + " (< 1e-6)"};
  }
  const auto findings = box_coefficient_findings(p, 40);
  int per_mode = 0;
  for (const auto& f : findings) {
    if (f.claim.rfind("box coefficient A(", 0) == 0 && !f.verdict.empty()) ++per_mode;
  }
  auto find = [&](const std::string& prefix) {
    return *std::find_if(findings.begin(), findings.end(),
                         [&](const Finding& f) { return f.claim.rfind(prefix, 0) == 0; });
  };
  const Finding erf_form = find("complex-erf form");
  const Finding magnitude = find("|published A(n)|");
  const bool erf_agrees = erf_form.verdict == "AGREE";
  const bool explained = magnitude.verdict.rfind("EXPLAINS", 0) == 0;
  const bool pass = per_mode == 40 && erf_agrees && explained;
  return {6, "box coefficients", pass,
          "published formula differs (max diff " + format_number(verbatim, 3) +
              "); erratum lists " + std::to_string(per_mode) +
              "/40 modes with quadrature normative, erf form " + erf_form.computed_value +
              " (< 1e-6), magnitude diagnostic " + magnitude.computed_value};
}

CheckResult check_box_series() {
  const boxpacket::BoxPacketParams p{6.0, 5.0, 1.5, 200};
  const auto coeffs = boxpacket::coefficients_numeric(p, boxpacket::coefficient_quadrature());
  const freepacket::FreePacketParams fp{p.alpha, p.d};
  double gap = 0.0;
  for (int k = 0; k <= 540; ++k) {
    const double u = -2.7 + 5.4 * k / 540.0;
    gap = std::max(gap, std::abs(boxpacket::packet_series(u, 0.0, p, coeffs) -
                                 freepacket::initial_condition(u, fp)));
  }
  return {7, "box series fidelity", gap < 1e-5,
          "sup over [-2.7, 2.7] at v=0 " + format_number(gap, 3) + " (< 1e-5)"};
}

namespace {

struct RidgeScore {
  std::size_t total = 0;
  std::size_t near = 0;
  double fraction() const { return total ? static_cast<double>(near) / total : 0.0; }
  std::string text() const {
    return std::to_string(near) + "/" + std::to_string(total);
  }
};

template <class Distance>
RidgeScore score_ridges(const std::vector<validate::RidgePoint>& pts, double cell,
                        Distance distance) {
  RidgeScore s;
  for (const auto& pt : pts) {
    ++s.total;
    if (distance(pt.u, pt.v) <= cell) ++s.near;
  }
  return s;
}

}  // namespace

CheckResult check_ridges() {
  const double alpha = 5.0;
  const double d = 1.5;

  const freepacket::FreePacketParams fp{alpha, d};
  const Grid2D fg = square_grid(-6.0, 6.0, 241);
  const double r3 = 3.0 / std::sqrt(alpha);
  std::vector<validate::Disc> crossings{{d, 0.0, r3}, {-d, 0.0, r3}, {0.0, d, r3}, {0.0, -d, r3}};
  const auto free_pts = validate::ridge_trace(free_field(fg, fp), crossings);
  const auto free_score = score_ridges(free_pts, fg.h_u(), [&](double u, double v) {
    double best = INFINITY;
    for (double s : {1.0, -1.0}) {
      for (double t : {d, -d}) best = std::min(best, std::abs(u - (s * v + t)));
    }
    return best;
  });

  const boxpacket::BoxPacketParams bp{4.0, alpha, d, 400};
  const double half = 0.5 * bp.L;
  const Grid2D bg = square_grid(-half, half, 241);
  const Field2D box =
      boxpacket::sample_series(bg, bp, boxpacket::coefficients_numeric(bp, boxpacket::coefficient_quadrature()));
  const double window = 0.6 * half;
  auto box_score = [&](double radius) {
    std::vector<validate::Disc> discs;
    // path crossings and wall reflection points
    for (auto [u, v] : std::array<std::pair<double, double>, 12>{{{d, 0.0},
                                                                 {-d, 0.0},
                                                                 {0.0, d},
                                                                 {0.0, -d},
                                                                 {half, half - d},
                                                                 {half, d - half},
                                                                 {-half, half - d},
                                                                 {-half, d - half},
                                                                 {half - d, half},
                                                                 {d - half, half},
                                                                 {half - d, -half},
                                                                 {d - half, -half}}}) {
      discs.push_back({u, v, radius});
    }
    std::vector<validate::RidgePoint> inside;
    for (const auto& pt : validate::ridge_trace(box, discs)) {
      if (std::abs(pt.u) <= window && std::abs(pt.v) <= window) inside.push_back(pt);
    }
    return score_ridges(inside, bg.h_u(), [&](double u, double v) {
      double best = INFINITY;
      for (double u0 : {d, -d}) {
        for (int dir : {1, -1}) {
          best = std::min(best, std::abs(u - classical::box_path({bp.L, u0, dir}, v)));
        }
      }
      return best;
    });
  };
  const auto box3 = box_score(r3);
  const auto box2 = box_score(2.0 / std::sqrt(alpha));

  const bool free_ok = free_score.total > 0 && free_score.fraction() >= 0.95;
  const bool box3_ok = box3.total == 0 || box3.fraction() >= 0.95;
  const bool box2_ok = box2.total > 0 && box2.fraction() >= 0.95;
  return {8, "classical-path peaking", free_ok && box3_ok && box2_ok,
          "free " + free_score.text() + " within one cell (>= 95%); box window [-1.2, 1.2]^2 " +
              box3.text() + " at radius 3/sqrt(alpha)" +
              (box3.total == 0 ? " (discs cover the window)" : "") + ", " + box2.text() +
              " at radius 2/sqrt(alpha) (>= 95%, non-empty)"};
}

CheckResult check_classical_limit() {
  const std::array<double, 3> alphas{1.0, 4.0, 16.0};
  const auto scan = freepacket::classical_limit_scan(alphas, 2.0, 1.0);
  const double r1 = scan[1].fwhm / scan[0].fwhm;
  const double r2 = scan[2].fwhm / scan[1].fwhm;

  const std::array<double, 1> five{5.0};
  double lo = INFINITY;
  double hi = 0.0;
  for (double v : {1.0, 3.0, 4.0, 5.0}) {
    const double crest = freepacket::classical_limit_scan(five, 2.0, v).front().crest;
    lo = std::min(lo, crest);
    hi = std::max(hi, crest);
  }
  const double spread = (hi - lo) / hi;
  const bool pass = within(r1, 0.45, 0.55) && within(r2, 0.45, 0.55) && spread <= 0.01;
  return {9, "classical limit", pass,
          "FWHM ratios at d=2, v=1: " + in_range(r1, 0.45, 0.55) + ", " +
              in_range(r2, 0.45, 0.55) + "; crest spread at alpha=5, v in {1,3,4,5}: " +
              format_number(spread, 3) + " (<= 0.01)"};
}

CheckResult check_special_functions() {
  struct Reference {
    ComplexValue z;
    ComplexValue erf;
  };
  // 40-digit reference values
  const std::array<Reference, 10> table{{
      {{1.0, 0.0}, {0.8427007929497149, 0.0}},
      {{1.0, 1.0}, {1.3161512816979477, 0.19045346923783468}},
      {{0.5, -2.0}, {13.839985667741278, 1.0429925008314203}},
      {{0.0, 3.0}, {0.0, 1629.9946226015657}},
      {{-2.5, 0.3}, {-1.0000153774253389, 0.00044277444763268244}},
      {{2.1, 2.1}, {1.1870955048155454, -0.0236683677879414}},
      {{0.01, 0.02}, {0.011287929523862138, 0.02256833516582954}},
      {{2.9, 0.0}, {0.9999589021219005, 0.0}},
      {{-1.7, -2.2}, {-1.655413594543431, -1.2767068116435765}},
      {{0.3, 2.95}, {1114.7670610586208, -89.51103594835595}},
  }};
  double worst = 0.0;
  for (const auto& r : table) {
    worst = std::max(worst, std::abs(numerics::erf_complex(r.z) - r.erf) / std::abs(r.erf));
  }
  const double erfi1 = numerics::erfi({1.0, 0.0}).real();
  const double gap = std::abs(erfi1 - 1.650425758797543);
  return {10, "special functions", worst < 1e-12 && gap < 1e-11,
          "max relative error on reference points " + format_number(worst, 3) +
              " (< 1e-12), erfi(1) = " + format_number(erfi1, 16) + " (+/- 1e-11)"};
}

CheckResult check_symmetry() {
  const freepacket::FreePacketParams fp{1.0, 2.0};
  const Grid2D fg = square_grid(-6.0, 6.0, 241);
  double free_gap = 0.0;
  for (std::size_t j = 0; j < fg.n_v; ++j) {
    for (std::size_t i = 0; i < fg.n_u; ++i) {
      const double u = fg.u(i);
      const double v = fg.v(j);
      const double here = std::norm(freepacket::packet_closed(u, v, fp));
      free_gap = std::max({free_gap, std::abs(std::norm(freepacket::packet_closed(-u, v, fp)) - here),
                           std::abs(std::norm(freepacket::packet_closed(u, -v, fp)) - here)});
    }
  }

  const boxpacket::BoxPacketParams bp{4.0, 5.0, 1.5, 200};
  const auto coeffs = boxpacket::coefficients_numeric(bp, boxpacket::coefficient_quadrature());
  const Grid2D bg = square_grid(-2.0, 2.0, 81);
  double box_gap = 0.0;
  for (std::size_t j = 0; j < bg.n_v; ++j) {
    for (std::size_t i = 0; i < bg.n_u; ++i) {
      const double u = bg.u(i);
      const double v = bg.v(j);
      box_gap = std::max(box_gap, std::abs(boxpacket::packet_series(-u, -v, bp, coeffs) -
                                           boxpacket::packet_series(u, v, bp, coeffs)));
    }
  }
  return {11, "symmetry suite", free_gap < 1e-14 && box_gap < 1e-14,
          "free reflections " + format_number(free_gap, 3) + ", box point reflection " +
              format_number(box_gap, 3) + " (< 1e-14)"};
}

std::vector<CheckResult> run_checks() {
  return {check_spectral_equivalence(), check_initial_data(),     check_pde_annihilation(),
          check_conservation(),         check_uncertainty(),      check_box_coefficients(),
          check_box_series(),           check_ridges(),           check_classical_limit(),
          check_special_functions(),    check_symmetry()};
}

}  // namespace hypquant::report
