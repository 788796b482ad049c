#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cardiodg::kern {

/// Arithmetic backends. `scalar` is the portable reference path and is
/// always available; `avx2` requires AVX2+FMA (compiled in on x86-64,
/// selected at runtime only if the CPU supports it).
enum class Backend { scalar, avx2 };

/// Backend currently driving all kern:: entry points.
Backend active_backend();

/// Switch backends. Returns false (and leaves the state unchanged) if the
/// requested backend is not available on this machine/build.
bool set_backend(Backend b);

bool backend_available(Backend b);
std::vector<Backend> available_backends();
std::string backend_name(Backend b);

// Vector kernels. All pointers may alias only where noted.

/// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

/// y += a*x
void axpy(double a, const double* x, double* y, std::size_t n);

/// x *= a
void scale(double a, double* x, std::size_t n);

/// y = A*x for a CSR matrix (row_offsets has n_rows+1 entries).
void csr_spmv(const std::int32_t* row_offsets, const std::int32_t* cols,
              const double* vals, std::int32_t n_rows, const double* x,
              double* y);

/// y = A*x for a dense row-major n_rows x n_cols matrix.
void dense_matvec(const double* a, std::size_t n_rows, std::size_t n_cols,
                  const double* x, double* y);

/// A += c * phi * phi^T, A dense row-major n x n (full matrix updated).
void rank1_update(double* a, const double* phi, double c, std::size_t n);

} // namespace cardiodg::kern
