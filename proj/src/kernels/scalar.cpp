#include "qjudge/kernels.hpp"

#include <cstring>

// Reference kernels. Plain loops over interleaved (re, im) pairs; the SIMD
// backends must match these within floating-point reassociation noise.

namespace qjudge::kernels {
namespace {

void cdot_conj_scalar(const double* a, const double* b, std::size_t n, double out[2]) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    out[0] = re;
    out[1] = im;
}

double sum_sqmag_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < 2 * n; ++k) s += a[k] * a[k];
    return s;
}

void caxpy_scalar(const double alpha[2], const double* x, double* y, std::size_t n) {
    const double ar = alpha[0], ai = alpha[1];
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[2 * k], xi = x[2 * k + 1];
        y[2 * k] += ar * xr - ai * xi;
        y[2 * k + 1] += ar * xi + ai * xr;
    }
}

void cmatvec_scalar(const double* m, const double* x, double* y, std::size_t rows,
                    std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = m + 2 * i * cols;
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double mr = row[2 * j], mi = row[2 * j + 1];
            const double xr = x[2 * j], xi = x[2 * j + 1];
            re += mr * xr - mi * xi;
            im += mr * xi + mi * xr;
        }
        y[2 * i] = re;
        y[2 * i + 1] = im;
    }
}

void cmatmul_scalar(const double* a, const double* b, double* out, std::size_t rows,
                    std::size_t inner, std::size_t cols) {
    std::memset(out, 0, 2 * rows * cols * sizeof(double));
    for (std::size_t i = 0; i < rows; ++i) {
        double* out_row = out + 2 * i * cols;
        for (std::size_t k = 0; k < inner; ++k) {
            const double wr = a[2 * (i * inner + k)];
            const double wi = a[2 * (i * inner + k) + 1];
            const double* b_row = b + 2 * k * cols;
            for (std::size_t j = 0; j < cols; ++j) {
                const double br = b_row[2 * j], bi = b_row[2 * j + 1];
                out_row[2 * j] += wr * br - wi * bi;
                out_row[2 * j + 1] += wr * bi + wi * br;
            }
        }
    }
}

void couter_acc_scalar(const double* v, double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wr = v[2 * i], wi = v[2 * i + 1];
        double* row = m + 2 * i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double vr = v[2 * j], vi = v[2 * j + 1];
            // w * conj(v_j)
            row[2 * j] += wr * vr + wi * vi;
            row[2 * j + 1] += wi * vr - wr * vi;
        }
    }
}

double diff_sqmag_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

void fit_residual_row_scalar(const double* cos_psi, const double* sin_psi, std::size_t n,
                             double cos_f, double sin_f, const double target[3],
                             const double weight[3], double* out) {
    const double cf2 = cos_f * cos_f;
    for (std::size_t j = 0; j < n; ++j) {
        const double c = cos_psi[j] * cos_f + sin_psi[j] * sin_f;
        const double p0 = cos_psi[j] * cos_psi[j];
        const double p1 = c * c;
        const double p2 = p1 * cf2;
        const double d0 = p0 - target[0];
        const double d1 = p1 - target[1];
        const double d2 = p2 - target[2];
        out[j] = weight[0] * d0 * d0 + weight[1] * d1 * d1 + weight[2] * d2 * d2;
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table = {
        "scalar",          cdot_conj_scalar, sum_sqmag_scalar,
        caxpy_scalar,      cmatvec_scalar,   cmatmul_scalar,
        couter_acc_scalar, diff_sqmag_scalar, fit_residual_row_scalar,
    };
    return table;
}

}  // namespace qjudge::kernels
