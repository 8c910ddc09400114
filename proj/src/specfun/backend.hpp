#ifndef SIGNPRIOR_SPECFUN_BACKEND_HPP_
#define SIGNPRIOR_SPECFUN_BACKEND_HPP_

#include <cstddef>

// Internal batch-kernel entry points, one set per backend.  The dispatch
// table in dispatch.cpp selects between them at runtime.

namespace signprior::specfun::detail {

struct BatchTable {
  void (*erf)(const double*, double*, std::size_t);
  void (*erfc)(const double*, double*, std::size_t);
  void (*erfcx)(const double*, double*, std::size_t);
  void (*gaussian_pdf)(const double*, double*, std::size_t);
};

void erf_batch_scalar(const double* x, double* out, std::size_t n);
void erfc_batch_scalar(const double* x, double* out, std::size_t n);
void erfcx_batch_scalar(const double* x, double* out, std::size_t n);
void gaussian_pdf_batch_scalar(const double* x, double* out, std::size_t n);

#if defined(SIGNPRIOR_AVX2_TU)
void erf_batch_avx2(const double* x, double* out, std::size_t n);
void erfc_batch_avx2(const double* x, double* out, std::size_t n);
void erfcx_batch_avx2(const double* x, double* out, std::size_t n);
void gaussian_pdf_batch_avx2(const double* x, double* out, std::size_t n);
#endif

// Shared precondition check: erfcx overflows for arguments below kXNeg.
void throw_erfcx_overflow(double x);

}  // namespace signprior::specfun::detail

#endif  // SIGNPRIOR_SPECFUN_BACKEND_HPP_
