#include "signprior/specfun.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "backend.hpp"

namespace signprior::specfun {

namespace {

using detail::BatchTable;

constexpr BatchTable kScalarTable = {
    detail::erf_batch_scalar, detail::erfc_batch_scalar,
    detail::erfcx_batch_scalar, detail::gaussian_pdf_batch_scalar};

#if defined(SIGNPRIOR_AVX2_TU)
constexpr BatchTable kAvx2Table = {
    detail::erf_batch_avx2, detail::erfc_batch_avx2,
    detail::erfcx_batch_avx2, detail::gaussian_pdf_batch_avx2};

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

struct Dispatch {
  std::atomic<const BatchTable*> table{&kScalarTable};
  std::atomic<Backend> backend{Backend::Scalar};

  Dispatch() { select_auto(); }

  void set(Backend b) {
    backend.store(b, std::memory_order_relaxed);
#if defined(SIGNPRIOR_AVX2_TU)
    table.store(b == Backend::Avx2 ? &kAvx2Table : &kScalarTable,
                std::memory_order_relaxed);
#else
    table.store(&kScalarTable, std::memory_order_relaxed);
#endif
  }

  void select_auto() {
    Backend b = Backend::Scalar;
#if defined(SIGNPRIOR_AVX2_TU)
    if (cpu_has_avx2()) b = Backend::Avx2;
#endif
    if (const char* env = std::getenv("SIGNPRIOR_BACKEND")) {
      if (std::strcmp(env, "scalar") == 0) b = Backend::Scalar;
#if defined(SIGNPRIOR_AVX2_TU)
      else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) b = Backend::Avx2;
#endif
    }
    set(b);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

void check_sizes(std::span<const double> x, std::span<double> out) {
  if (x.size() != out.size()) {
    throw std::invalid_argument("specfun batch: input and output spans differ in size");
  }
}

}  // namespace

Backend active_backend() {
  return dispatch().backend.load(std::memory_order_relaxed);
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(SIGNPRIOR_AVX2_TU)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

void force_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::runtime_error("specfun: requested backend is not available on this machine");
  }
  dispatch().set(b);
}

void reset_backend() { dispatch().select_auto(); }

void erf(std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  dispatch().table.load(std::memory_order_relaxed)->erf(x.data(), out.data(), x.size());
}

void erfc(std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  dispatch().table.load(std::memory_order_relaxed)->erfc(x.data(), out.data(), x.size());
}

void erfcx(std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  dispatch().table.load(std::memory_order_relaxed)->erfcx(x.data(), out.data(), x.size());
}

void gaussian_pdf(std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  dispatch().table.load(std::memory_order_relaxed)->gaussian_pdf(x.data(), out.data(), x.size());
}

}  // namespace signprior::specfun
