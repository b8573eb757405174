#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qjudge::kernels {

// Arithmetic inner loops behind the linear algebra and the fit grid scan.
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup; the variants
// are equivalence-tested against the reference in tests/test_kernels.cpp.
//
// Complex data is viewed as interleaved doubles: element k of an array of n
// complex numbers occupies positions 2k (real) and 2k+1 (imag). All counts
// are in complex elements. Output buffers must not alias inputs unless a
// kernel says otherwise.

struct KernelTable {
    const char* name;

    /// out = sum_i conj(a_i) * b_i, written as {re, im}.
    void (*cdot_conj)(const double* a, const double* b, std::size_t n, double out[2]);

    /// Returns sum_i |a_i|^2.
    double (*sum_sqmag)(const double* a, std::size_t n);

    /// y_i += alpha * x_i with alpha = {re, im}. In-place on y.
    void (*caxpy)(const double alpha[2], const double* x, double* y, std::size_t n);

    /// y = M x for row-major complex M (rows x cols). y has rows elements.
    void (*cmatvec)(const double* m, const double* x, double* y, std::size_t rows,
                    std::size_t cols);

    /// out = A B for row-major complex A (rows x inner) and B (inner x cols).
    void (*cmatmul)(const double* a, const double* b, double* out, std::size_t rows,
                    std::size_t inner, std::size_t cols);

    /// m_ij += v_i * conj(v_j) for an n x n row-major complex m. In-place on m.
    void (*couter_acc)(const double* v, double* m, std::size_t n);

    /// Returns sum_i |a_i - b_i|^2.
    double (*diff_sqmag)(const double* a, const double* b, std::size_t n);

    /// One row of the 2D-fit residual grid. For j in [0, n):
    ///   c      = cos_psi[j]*cos_f + sin_psi[j]*sin_f
    ///   pred   = { cos_psi[j]^2, c^2, c^2*cos_f^2 }
    ///   out[j] = sum_k weight[k] * (pred[k] - target[k])^2
    /// cos_psi/sin_psi/out are plain double arrays of length n.
    void (*fit_residual_row)(const double* cos_psi, const double* sin_psi, std::size_t n,
                             double cos_f, double sin_f, const double target[3],
                             const double weight[3], double* out);
};

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Backends compiled into this binary and usable on this machine.
std::vector<Backend> available_backends();

/// The scalar reference table, always available.
const KernelTable& scalar_table();

/// The table selected at startup: the best available backend, unless the
/// QJUDGE_KERNELS environment variable (scalar|avx2|neon|auto) says otherwise.
const KernelTable& active();

Backend active_backend();

/// Overrides the active table. Throws std::invalid_argument if the backend is
/// not available on this machine. Intended for tests and benchmarks; not
/// thread-safe against concurrent kernel use.
void select_backend(Backend b);

/// Re-runs auto-detection (honouring QJUDGE_KERNELS).
void select_best_backend();

}  // namespace qjudge::kernels
