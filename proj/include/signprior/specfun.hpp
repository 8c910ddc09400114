#ifndef SIGNPRIOR_SPECFUN_HPP_
#define SIGNPRIOR_SPECFUN_HPP_

#include <cstddef>
#include <span>

/// Error-function family underpinning every closed-form expression in the
/// library.  Scalar functions are the reference kernels; the span overloads
/// are batch variants dispatched at runtime to the best available SIMD
/// backend and are required to agree with the scalar kernels to a few ulp
/// (see tests/test_specfun_batch.cpp).
namespace signprior::specfun {

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

/// erf(x).  Relative error below 1e-14 for |x| <= 6.
double erf(double x);

/// erfc(x) = 1 - erf(x).  Relative error below 1e-13 up to x ~ 26.5,
/// beyond which the result underflows and 0 is returned silently
/// (use erfcx for the deep tail).
double erfc(double x);

/// Scaled complement erfcx(x) = exp(x^2) * erfc(x).
/// Stable for arbitrarily large positive x (tends to 1/(x*sqrt(pi))).
/// Throws std::overflow_error for x <= -26.628 where exp(x^2) overflows.
double erfcx(double x);

/// Inverse of erfc on (0, 2): erfc(inv_erfc(p)) == p to ~1e-15 relative.
/// Throws std::domain_error outside (0, 2).
double inv_erfc(double p);

/// Standard normal density exp(-x^2/2)/sqrt(2*pi); underflows to 0.
double gaussian_pdf(double x);

/// log(erfc(x)), finite for every finite x (no premature underflow).
double log_erfc(double x);

/// Standard normal quantile Phi^{-1}(p) for p in (0, 1).
/// Throws std::domain_error outside (0, 1).
double normal_quantile(double p);

// ---------------------------------------------------------------------------
// Batch variants
// ---------------------------------------------------------------------------
// out.size() must equal x.size(); in-place (out == x) is allowed.
// Results match the scalar kernels to <= 4 ulp on every lane.

void erf(std::span<const double> x, std::span<double> out);
void erfc(std::span<const double> x, std::span<double> out);
void erfcx(std::span<const double> x, std::span<double> out);  // throws as scalar
void gaussian_pdf(std::span<const double> x, std::span<double> out);

// ---------------------------------------------------------------------------
// Backend control
// ---------------------------------------------------------------------------

enum class Backend { Scalar, Avx2 };

/// Backend the batch entry points currently dispatch to.
Backend active_backend();

bool backend_available(Backend b);

/// Pin the dispatch to one backend (throws std::runtime_error if the
/// backend is not available on this machine).  Intended for tests and for
/// the SIGNPRIOR_BACKEND=scalar|avx2 environment override.
void force_backend(Backend b);

/// Return to automatic selection.
void reset_backend();

}  // namespace signprior::specfun

#endif  // SIGNPRIOR_SPECFUN_HPP_
