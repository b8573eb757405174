#include "tables.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

// NEON variants. vld2q_f64 deinterleaves a pair of complex numbers into a
// real lane vector and an imag lane vector, so each loop body works on split
// components and re-interleaves on store with vst2q_f64. NEON is baseline on
// aarch64; no runtime feature check is needed beyond being on the right
// architecture.

namespace qjudge::kernels {
namespace {

inline double hsum2(float64x2_t v) { return vaddvq_f64(v); }

void cdot_conj_neon(const double* a, const double* b, std::size_t n, double out[2]) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2x2_t va = vld2q_f64(a + 2 * k);
        float64x2x2_t vb = vld2q_f64(b + 2 * k);
        acc_re = vfmaq_f64(acc_re, va.val[0], vb.val[0]);
        acc_re = vfmaq_f64(acc_re, va.val[1], vb.val[1]);
        acc_im = vfmaq_f64(acc_im, va.val[0], vb.val[1]);
        acc_im = vfmsq_f64(acc_im, va.val[1], vb.val[0]);
    }
    double re = hsum2(acc_re), im = hsum2(acc_im);
    for (; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    out[0] = re;
    out[1] = im;
}

double sum_sqmag_neon(const double* a, std::size_t n) {
    const std::size_t len = 2 * n;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        float64x2_t v = vld1q_f64(a + k);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = hsum2(acc);
    for (; k < len; ++k) s += a[k] * a[k];
    return s;
}

void caxpy_neon(const double alpha[2], const double* x, double* y, std::size_t n) {
    const float64x2_t ar = vdupq_n_f64(alpha[0]);
    const float64x2_t ai = vdupq_n_f64(alpha[1]);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2x2_t vx = vld2q_f64(x + 2 * k);
        float64x2x2_t vy = vld2q_f64(y + 2 * k);
        vy.val[0] = vfmaq_f64(vy.val[0], ar, vx.val[0]);
        vy.val[0] = vfmsq_f64(vy.val[0], ai, vx.val[1]);
        vy.val[1] = vfmaq_f64(vy.val[1], ar, vx.val[1]);
        vy.val[1] = vfmaq_f64(vy.val[1], ai, vx.val[0]);
        vst2q_f64(y + 2 * k, vy);
    }
    for (; k < n; ++k) {
        const double xr = x[2 * k], xi = x[2 * k + 1];
        y[2 * k] += alpha[0] * xr - alpha[1] * xi;
        y[2 * k + 1] += alpha[0] * xi + alpha[1] * xr;
    }
}

void cmatvec_neon(const double* m, const double* x, double* y, std::size_t rows,
                  std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = m + 2 * i * cols;
        float64x2_t acc_re = vdupq_n_f64(0.0);
        float64x2_t acc_im = vdupq_n_f64(0.0);
        std::size_t j = 0;
        for (; j + 2 <= cols; j += 2) {
            float64x2x2_t vm = vld2q_f64(row + 2 * j);
            float64x2x2_t vx = vld2q_f64(x + 2 * j);
            acc_re = vfmaq_f64(acc_re, vm.val[0], vx.val[0]);
            acc_re = vfmsq_f64(acc_re, vm.val[1], vx.val[1]);
            acc_im = vfmaq_f64(acc_im, vm.val[0], vx.val[1]);
            acc_im = vfmaq_f64(acc_im, vm.val[1], vx.val[0]);
        }
        double re = hsum2(acc_re), im = hsum2(acc_im);
        for (; j < cols; ++j) {
            const double mr = row[2 * j], mi = row[2 * j + 1];
            const double xr = x[2 * j], xi = x[2 * j + 1];
            re += mr * xr - mi * xi;
            im += mr * xi + mi * xr;
        }
        y[2 * i] = re;
        y[2 * i + 1] = im;
    }
}

void cmatmul_neon(const double* a, const double* b, double* out, std::size_t rows,
                  std::size_t inner, std::size_t cols) {
    std::memset(out, 0, 2 * rows * cols * sizeof(double));
    for (std::size_t i = 0; i < rows; ++i) {
        double* out_row = out + 2 * i * cols;
        for (std::size_t k = 0; k < inner; ++k) {
            const double wr_s = a[2 * (i * inner + k)];
            const double wi_s = a[2 * (i * inner + k) + 1];
            const float64x2_t wr = vdupq_n_f64(wr_s);
            const float64x2_t wi = vdupq_n_f64(wi_s);
            const double* b_row = b + 2 * k * cols;
            std::size_t j = 0;
            for (; j + 2 <= cols; j += 2) {
                float64x2x2_t vb = vld2q_f64(b_row + 2 * j);
                float64x2x2_t vo = vld2q_f64(out_row + 2 * j);
                vo.val[0] = vfmaq_f64(vo.val[0], wr, vb.val[0]);
                vo.val[0] = vfmsq_f64(vo.val[0], wi, vb.val[1]);
                vo.val[1] = vfmaq_f64(vo.val[1], wr, vb.val[1]);
                vo.val[1] = vfmaq_f64(vo.val[1], wi, vb.val[0]);
                vst2q_f64(out_row + 2 * j, vo);
            }
            for (; j < cols; ++j) {
                const double br = b_row[2 * j], bi = b_row[2 * j + 1];
                out_row[2 * j] += wr_s * br - wi_s * bi;
                out_row[2 * j + 1] += wr_s * bi + wi_s * br;
            }
        }
    }
}

void couter_acc_neon(const double* v, double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wr_s = v[2 * i], wi_s = v[2 * i + 1];
        const float64x2_t wr = vdupq_n_f64(wr_s);
        const float64x2_t wi = vdupq_n_f64(wi_s);
        double* row = m + 2 * i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            float64x2x2_t vv = vld2q_f64(v + 2 * j);
            float64x2x2_t vr = vld2q_f64(row + 2 * j);
            vr.val[0] = vfmaq_f64(vr.val[0], wr, vv.val[0]);
            vr.val[0] = vfmaq_f64(vr.val[0], wi, vv.val[1]);
            vr.val[1] = vfmaq_f64(vr.val[1], wi, vv.val[0]);
            vr.val[1] = vfmsq_f64(vr.val[1], wr, vv.val[1]);
            vst2q_f64(row + 2 * j, vr);
        }
        for (; j < n; ++j) {
            const double vr_s = v[2 * j], vi_s = v[2 * j + 1];
            row[2 * j] += wr_s * vr_s + wi_s * vi_s;
            row[2 * j + 1] += wi_s * vr_s - wr_s * vi_s;
        }
    }
}

double diff_sqmag_neon(const double* a, const double* b, std::size_t n) {
    const std::size_t len = 2 * n;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(a + k), vld1q_f64(b + k));
        acc = vfmaq_f64(acc, d, d);
    }
    double s = hsum2(acc);
    for (; k < len; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

void fit_residual_row_neon(const double* cos_psi, const double* sin_psi, std::size_t n,
                           double cos_f, double sin_f, const double target[3],
                           const double weight[3], double* out) {
    const float64x2_t cf = vdupq_n_f64(cos_f);
    const float64x2_t sf = vdupq_n_f64(sin_f);
    const float64x2_t cf2 = vdupq_n_f64(cos_f * cos_f);
    const float64x2_t t0 = vdupq_n_f64(target[0]);
    const float64x2_t t1 = vdupq_n_f64(target[1]);
    const float64x2_t t2 = vdupq_n_f64(target[2]);
    const float64x2_t w0 = vdupq_n_f64(weight[0]);
    const float64x2_t w1 = vdupq_n_f64(weight[1]);
    const float64x2_t w2 = vdupq_n_f64(weight[2]);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t cp = vld1q_f64(cos_psi + j);
        float64x2_t sp = vld1q_f64(sin_psi + j);
        float64x2_t c = vfmaq_f64(vmulq_f64(sp, sf), cp, cf);
        float64x2_t p0 = vmulq_f64(cp, cp);
        float64x2_t p1 = vmulq_f64(c, c);
        float64x2_t p2 = vmulq_f64(p1, cf2);
        float64x2_t d0 = vsubq_f64(p0, t0);
        float64x2_t d1 = vsubq_f64(p1, t1);
        float64x2_t d2 = vsubq_f64(p2, t2);
        float64x2_t r = vmulq_f64(w0, vmulq_f64(d0, d0));
        r = vfmaq_f64(r, w1, vmulq_f64(d1, d1));
        r = vfmaq_f64(r, w2, vmulq_f64(d2, d2));
        vst1q_f64(out + j, r);
    }
    const double cf2_s = cos_f * cos_f;
    for (; j < n; ++j) {
        const double c = cos_psi[j] * cos_f + sin_psi[j] * sin_f;
        const double p0 = cos_psi[j] * cos_psi[j];
        const double p1 = c * c;
        const double p2 = p1 * cf2_s;
        const double d0 = p0 - target[0];
        const double d1 = p1 - target[1];
        const double d2 = p2 - target[2];
        out[j] = weight[0] * d0 * d0 + weight[1] * d1 * d1 + weight[2] * d2 * d2;
    }
}

const KernelTable neon_kernels = {
    "neon",          cdot_conj_neon, sum_sqmag_neon,  caxpy_neon,          cmatvec_neon,
    cmatmul_neon,    couter_acc_neon, diff_sqmag_neon, fit_residual_row_neon,
};

}  // namespace
}  // namespace qjudge::kernels

namespace qjudge::kernels::detail {

const KernelTable* neon_table() { return &neon_kernels; }
bool neon_runtime_ok() { return true; }

}  // namespace qjudge::kernels::detail

#else  // not aarch64

namespace qjudge::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
bool neon_runtime_ok() { return false; }
}  // namespace qjudge::kernels::detail

#endif
