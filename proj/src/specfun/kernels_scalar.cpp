#include "signprior/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "backend.hpp"
#include "cody_constants.hpp"

namespace signprior::specfun {

namespace {

using namespace cody;

// exp(-y^2) for y >= 0 without the relative-error blowup from rounding y*y:
// split y at a 1/16 grid point h (h*h is exact), so both exponents carry
// only tiny absolute argument error.
double exp_neg_sq(double y) {
  const double h = std::trunc(y * 16.0) / 16.0;
  const double del = (y - h) * (y + h);
  return std::exp(-h * h) * std::exp(-del);
}

// exp(+x^2), same splitting; caller guarantees no overflow.
double exp_pos_sq(double x) {
  const double a = std::fabs(x);
  const double h = std::trunc(a * 16.0) / 16.0;
  const double del = (a - h) * (a + h);
  return std::exp(h * h) * std::exp(del);
}

// erf(x) for |x| <= kThresh.
double erf_small(double x) {
  const double y = std::fabs(x);
  const double ysq = y > kXSmall ? y * y : 0.0;
  double num = kA[4] * ysq;
  double den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kA[i]) * ysq;
    den = (den + kB[i]) * ysq;
  }
  return x * (num + kA[3]) / (den + kB[3]);
}

// erfcx(y) for kThresh <= y <= 4.
double erfcx_mid(double y) {
  double num = kC[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + kC[i]) * y;
    den = (den + kD[i]) * y;
  }
  return (num + kC[7]) / (den + kD[7]);
}

// erfcx(y) for y > 4.
double erfcx_far(double y) {
  if (y >= kXHuge) {
    return y >= kXMax ? 0.0 : kSqrPi / y;
  }
  const double z = 1.0 / (y * y);
  double num = kP[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * z;
    den = (den + kQ[i]) * z;
  }
  const double r = z * (num + kP[4]) / (den + kQ[4]);
  return (kSqrPi - r) / y;
}

// erfcx(y) for y >= kThresh.
double erfcx_pos(double y) { return y <= 4.0 ? erfcx_mid(y) : erfcx_far(y); }

constexpr double kInvSqrt2Pi = 0.3989422804014326779399;
constexpr double kSqrt2 = 1.4142135623730950488017;
constexpr double kHalfSqrtPi = 0.8862269254527580136491;  // sqrt(pi)/2

// Wichura's AS 241 (PPND16) rational approximations for the standard
// normal quantile; accurate to ~3e-16 relative over the full double range.
double ppnd16(double p) {
  static constexpr double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e2,
      1.9715909503065514427e3,  1.3731693765509461125e4,
      4.5921953931549871457e4,  6.7265770927008700853e4,
      3.3430575583588128105e4,  2.5090809287301226727e3};
  static constexpr double b[8] = {
      1.0,                      4.2313330701600911252e1,
      6.8718700749205790830e2,  5.3941960214247511077e3,
      2.1213794301586595867e4,  3.9307895800092710610e4,
      2.8729085735721942674e4,  5.2264952788528545610e3};
  static constexpr double c[8] = {
      1.42343711074968357734e0,  4.6303378461565452959e0,
      5.7694972214606914055e0,   3.64784832476320460504e0,
      1.27045825245236838258e0,  2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.7454501427834140764e-4};
  static constexpr double d[8] = {
      1.0,                       2.05319162663775882187e0,
      1.6763848301838038494e0,   6.8976733498510000455e-1,
      1.4810397642748007459e-1,  1.51986665636164571966e-2,
      5.475938084995344946e-4,   1.05075007164441684324e-9};
  static constexpr double e[8] = {
      6.6579046435011037772e0,   5.4637849111641143699e0,
      1.7848265399172913358e0,   2.9656057182850489123e-1,
      2.6532189526576123093e-2,  1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr double f[8] = {
      1.0,                       5.99832206555887937690e-1,
      1.3692988092273580531e-1,  1.48753612908506148525e-2,
      7.868691311456132591e-4,   1.8463183175100546818e-5,
      1.4215117583164458887e-7,  2.04426310338993978564e-15};

  auto poly = [](const double (&cf)[8], double r) {
    double s = cf[7];
    for (int i = 6; i >= 0; --i) s = s * r + cf[i];
    return s;
  };

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * poly(a, r) / poly(b, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    x = poly(c, r) / poly(d, r);
  } else {
    r -= 5.0;
    x = poly(e, r) / poly(f, r);
  }
  return q < 0.0 ? -x : x;
}

}  // namespace

double erf(double x) {
  const double y = std::fabs(x);
  if (y <= kThresh) return erf_small(x);
  if (y >= 6.0) return x > 0.0 ? 1.0 : -1.0;  // 1 - erf(6) ~ 2.2e-17
  const double c = exp_neg_sq(y) * erfcx_pos(y);
  const double r = (0.5 - c) + 0.5;
  return x < 0.0 ? -r : r;
}

double erfc(double x) {
  const double y = std::fabs(x);
  if (y <= kThresh) return 1.0 - erf_small(x);
  double r = 0.0;
  if (y < kXBig) r = exp_neg_sq(y) * erfcx_pos(y);
  return x < 0.0 ? 2.0 - r : r;
}

double erfcx(double x) {
  const double y = std::fabs(x);
  if (y <= kThresh) {
    const double ysq = y > kXSmall ? x * x : 0.0;
    return std::exp(ysq) * (1.0 - erf_small(x));
  }
  if (x > 0.0) return erfcx_pos(x);
  if (x < kXNeg) detail::throw_erfcx_overflow(x);
  return 2.0 * exp_pos_sq(y) - erfcx_pos(y);
}

double gaussian_pdf(double x) {
  const double y = std::fabs(x);
  if (y < 5.0) return kInvSqrt2Pi * std::exp(-0.5 * y * y);
  // split at a 2^-16 grid point so y1*y1 is exact
  const double y1 = std::floor(y * 0x1.0p16 + 0.5) * 0x1.0p-16;
  const double y2 = y - y1;
  return kInvSqrt2Pi * std::exp(-0.5 * y1 * y1) * std::exp((-0.5 * y2 - y1) * y2);
}

double log_erfc(double x) {
  if (x < -kThresh) {
    // erfc(x) = 2 - erfc(-x); keep precision near log(2)
    const double tail = erfc(-x);
    return std::log(2.0) + std::log1p(-0.5 * tail);
  }
  if (x <= kThresh) return std::log(1.0 - erf_small(x));
  return -x * x + std::log(erfcx_pos(x));
}

double inv_erfc(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    throw std::domain_error("inv_erfc: argument " + std::to_string(p) +
                            " outside (0, 2)");
  }
  const bool flipped = p > 1.0;
  const double pp = flipped ? 2.0 - p : p;
  // erfc(x) = pp  <=>  Phi(-x*sqrt(2)) = pp/2
  double x = -ppnd16(0.5 * pp) / kSqrt2;
  // One Newton step tightens the approximation to ~1 ulp.
  if (x > 1.0) {
    // log-space form stays stable however deep the tail is
    const double g = log_erfc(x) - std::log(pp);
    x += g * kHalfSqrtPi * erfcx_pos(x);
  } else {
    const double fx = erfc(x) - pp;
    x += fx * kHalfSqrtPi * exp_pos_sq(x);
  }
  return flipped ? -x : x;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: argument " + std::to_string(p) +
                            " outside (0, 1)");
  }
  return -kSqrt2 * inv_erfc(2.0 * p);
}

namespace detail {

void throw_erfcx_overflow(double x) {
  throw std::overflow_error("erfcx: exp(x^2) overflows for x = " +
                            std::to_string(x) + " (x < " +
                            std::to_string(cody::kXNeg) + ")");
}

void erf_batch_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = specfun::erf(x[i]);
}

void erfc_batch_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = specfun::erfc(x[i]);
}

void erfcx_batch_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < cody::kXNeg) throw_erfcx_overflow(x[i]);
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = specfun::erfcx(x[i]);
}

void gaussian_pdf_batch_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = specfun::gaussian_pdf(x[i]);
}

}  // namespace detail

}  // namespace signprior::specfun
