#include "tables.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstring>

// AVX2+FMA variants. A __m256d holds two interleaved complex numbers
// [r0, i0, r1, i1]; complex products are formed with the usual
// movedup/permute + fmaddsub shuffle pattern. Compiled with per-function
// target attributes so this TU links into binaries that must still run on
// machines without AVX2; the dispatcher only installs the table after a
// cpuid check.

#define QJ_AVX2 __attribute__((target("avx2,fma")))

namespace qjudge::kernels {
namespace {

QJ_AVX2 inline double hsum4(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sums even lanes into out[0], odd lanes into out[1].
QJ_AVX2 inline void hsum_pairs(__m256d v, double out[2]) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    out[0] = _mm_cvtsd_f64(s);
    out[1] = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

QJ_AVX2 void cdot_conj_avx2(const double* a, const double* b, std::size_t n, double out[2]) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d va = _mm256_loadu_pd(a + 2 * k);
        __m256d vb = _mm256_loadu_pd(b + 2 * k);
        __m256d a_swap = _mm256_permute_pd(va, 0x5);
        __m256d br = _mm256_movedup_pd(vb);
        __m256d bi = _mm256_permute_pd(vb, 0xF);
        // even lanes: ar*br + ai*bi, odd lanes: ai*br - ar*bi (negated imag)
        acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(va, br, _mm256_mul_pd(a_swap, bi)));
    }
    double pair[2];
    hsum_pairs(acc, pair);
    double re = pair[0], im = -pair[1];
    for (; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    out[0] = re;
    out[1] = im;
}

QJ_AVX2 double sum_sqmag_avx2(const double* a, std::size_t n) {
    const std::size_t len = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d v = _mm256_loadu_pd(a + k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum4(acc);
    for (; k < len; ++k) s += a[k] * a[k];
    return s;
}

QJ_AVX2 void caxpy_avx2(const double alpha[2], const double* x, double* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha[0]);
    const __m256d ai = _mm256_set1_pd(alpha[1]);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d vx = _mm256_loadu_pd(x + 2 * k);
        __m256d x_swap = _mm256_permute_pd(vx, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(ar, vx, _mm256_mul_pd(ai, x_swap));
        _mm256_storeu_pd(y + 2 * k, _mm256_add_pd(_mm256_loadu_pd(y + 2 * k), prod));
    }
    for (; k < n; ++k) {
        const double xr = x[2 * k], xi = x[2 * k + 1];
        y[2 * k] += alpha[0] * xr - alpha[1] * xi;
        y[2 * k + 1] += alpha[0] * xi + alpha[1] * xr;
    }
}

QJ_AVX2 void cmatvec_avx2(const double* m, const double* x, double* y, std::size_t rows,
                          std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = m + 2 * i * cols;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= cols; j += 2) {
            __m256d vm = _mm256_loadu_pd(row + 2 * j);
            __m256d vx = _mm256_loadu_pd(x + 2 * j);
            __m256d m_swap = _mm256_permute_pd(vm, 0x5);
            __m256d xr = _mm256_movedup_pd(vx);
            __m256d xi = _mm256_permute_pd(vx, 0xF);
            acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(vm, xr, _mm256_mul_pd(m_swap, xi)));
        }
        double pair[2];
        hsum_pairs(acc, pair);
        double re = pair[0], im = pair[1];
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

QJ_AVX2 void cmatmul_avx2(const double* a, const double* b, double* out, std::size_t rows,
                          std::size_t inner, std::size_t cols) {
    std::memset(out, 0, 2 * rows * cols * sizeof(double));
    for (std::size_t i = 0; i < rows; ++i) {
        double* out_row = out + 2 * i * cols;
        for (std::size_t k = 0; k < inner; ++k) {
            const double wr_s = a[2 * (i * inner + k)];
            const double wi_s = a[2 * (i * inner + k) + 1];
            const __m256d wr = _mm256_set1_pd(wr_s);
            const __m256d wi = _mm256_set1_pd(wi_s);
            const double* b_row = b + 2 * k * cols;
            std::size_t j = 0;
            for (; j + 2 <= cols; j += 2) {
                __m256d vb = _mm256_loadu_pd(b_row + 2 * j);
                __m256d b_swap = _mm256_permute_pd(vb, 0x5);
                __m256d prod = _mm256_fmaddsub_pd(wr, vb, _mm256_mul_pd(wi, b_swap));
                _mm256_storeu_pd(out_row + 2 * j,
                                 _mm256_add_pd(_mm256_loadu_pd(out_row + 2 * j), prod));
            }
            for (; j < cols; ++j) {
                const double br = b_row[2 * j], bi = b_row[2 * j + 1];
                out_row[2 * j] += wr_s * br - wi_s * bi;
                out_row[2 * j + 1] += wr_s * bi + wi_s * br;
            }
        }
    }
}

QJ_AVX2 void couter_acc_avx2(const double* v, double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double wr_s = v[2 * i], wi_s = v[2 * i + 1];
        const __m256d wr = _mm256_set1_pd(wr_s);
        const __m256d wi = _mm256_set1_pd(wi_s);
        double* row = m + 2 * i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d vv = _mm256_loadu_pd(v + 2 * j);
            __m256d v_swap = _mm256_permute_pd(vv, 0x5);
            // even: wi*vi + wr*vr, odd: wi*vr - wr*vi  (= w * conj(v_j))
            __m256d prod = _mm256_fmsubadd_pd(wi, v_swap, _mm256_mul_pd(wr, vv));
            _mm256_storeu_pd(row + 2 * j, _mm256_add_pd(_mm256_loadu_pd(row + 2 * j), prod));
        }
        for (; j < n; ++j) {
            const double vr = v[2 * j], vi = v[2 * j + 1];
            row[2 * j] += wr_s * vr + wi_s * vi;
            row[2 * j + 1] += wi_s * vr - wr_s * vi;
        }
    }
}

QJ_AVX2 double diff_sqmag_avx2(const double* a, const double* b, std::size_t n) {
    const std::size_t len = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum4(acc);
    for (; k < len; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

QJ_AVX2 void fit_residual_row_avx2(const double* cos_psi, const double* sin_psi, std::size_t n,
                                   double cos_f, double sin_f, const double target[3],
                                   const double weight[3], double* out) {
    const __m256d cf = _mm256_set1_pd(cos_f);
    const __m256d sf = _mm256_set1_pd(sin_f);
    const __m256d cf2 = _mm256_set1_pd(cos_f * cos_f);
    const __m256d t0 = _mm256_set1_pd(target[0]);
    const __m256d t1 = _mm256_set1_pd(target[1]);
    const __m256d t2 = _mm256_set1_pd(target[2]);
    const __m256d w0 = _mm256_set1_pd(weight[0]);
    const __m256d w1 = _mm256_set1_pd(weight[1]);
    const __m256d w2 = _mm256_set1_pd(weight[2]);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d cp = _mm256_loadu_pd(cos_psi + j);
        __m256d sp = _mm256_loadu_pd(sin_psi + j);
        __m256d c = _mm256_fmadd_pd(cp, cf, _mm256_mul_pd(sp, sf));
        __m256d p0 = _mm256_mul_pd(cp, cp);
        __m256d p1 = _mm256_mul_pd(c, c);
        __m256d p2 = _mm256_mul_pd(p1, cf2);
        __m256d d0 = _mm256_sub_pd(p0, t0);
        __m256d d1 = _mm256_sub_pd(p1, t1);
        __m256d d2 = _mm256_sub_pd(p2, t2);
        __m256d r = _mm256_mul_pd(w0, _mm256_mul_pd(d0, d0));
        r = _mm256_fmadd_pd(w1, _mm256_mul_pd(d1, d1), r);
        r = _mm256_fmadd_pd(w2, _mm256_mul_pd(d2, d2), r);
        _mm256_storeu_pd(out + j, r);
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

const KernelTable avx2_kernels = {
    "avx2",          cdot_conj_avx2, sum_sqmag_avx2,  caxpy_avx2,          cmatvec_avx2,
    cmatmul_avx2,    couter_acc_avx2, diff_sqmag_avx2, fit_residual_row_avx2,
};

}  // namespace
}  // namespace qjudge::kernels

namespace qjudge::kernels::detail {

const KernelTable* avx2_table() { return &avx2_kernels; }

bool avx2_runtime_ok() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace qjudge::kernels::detail

#else  // not x86

namespace qjudge::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
bool avx2_runtime_ok() { return false; }
}  // namespace qjudge::kernels::detail

#endif
