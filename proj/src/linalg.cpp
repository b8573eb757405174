#include "qjudge/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qjudge/kernels.hpp"

namespace qjudge {

namespace {

void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(what) + ": dims " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

Vec Vec::real(std::initializer_list<double> xs) {
    Vec v(xs.size());
    std::size_t i = 0;
    for (double x : xs) v.c[i++] = cdouble(x, 0.0);
    return v;
}

Vec Vec::real(const std::vector<double>& xs) {
    Vec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v.c[i] = cdouble(xs[i], 0.0);
    return v;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

cdouble inner_product(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "inner_product");
    double out[2];
    kernels::active().cdot_conj(a.raw(), b.raw(), a.dim(), out);
    return cdouble(out[0], out[1]);
}

double norm_squared(const Vec& a) { return kernels::active().sum_sqmag(a.raw(), a.dim()); }

double norm(const Vec& a) { return std::sqrt(norm_squared(a)); }

Vec normalize(const Vec& a) {
    const double n = norm(a);
    if (n <= EPS_ZERO) throw ZeroVector("normalize: vector is numerically zero");
    return scaled(a, cdouble(1.0 / n, 0.0));
}

void axpy(cdouble alpha, const Vec& x, Vec& y) {
    require_same_dim(x, y, "axpy");
    const double al[2] = {alpha.real(), alpha.imag()};
    kernels::active().caxpy(al, x.raw(), y.raw(), x.dim());
}

Vec scaled(const Vec& a, cdouble alpha) {
    Vec out(a.dim());
    axpy(alpha, a, out);
    return out;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs) {
    if (vs.empty()) throw ZeroVector("gram_schmidt: empty input spans nothing");
    const std::size_t d = vs.front().dim();
    std::vector<Vec> out;
    out.reserve(vs.size());
    for (const Vec& v : vs) {
        if (v.dim() != d) {
            throw DimensionMismatch("gram_schmidt: dims " + std::to_string(d) + " vs " +
                                    std::to_string(v.dim()));
        }
        Vec w = v;
        // Two projection-removal passes keep the pairwise inner products at
        // the 1e-10 bound even for nearly dependent inputs.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vec& u : out) {
                axpy(-inner_product(u, w), u, w);
            }
        }
        const double r = norm(w);
        if (r > EPS_RANK) out.push_back(scaled(w, cdouble(1.0 / r, 0.0)));
    }
    if (out.empty()) throw ZeroVector("gram_schmidt: all inputs are numerically zero");
    return out;
}

bool is_orthonormal(const std::vector<Vec>& vs, double tol) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].dim() != vs.front().dim()) return false;
        for (std::size_t j = i; j < vs.size(); ++j) {
            const cdouble p = inner_product(vs[i], vs[j]);
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(p - want) > tol) return false;
        }
    }
    return true;
}

Mat projector_from_basis(const std::vector<Vec>& onb) {
    if (onb.empty()) throw NotOrthonormal("projector_from_basis: empty basis");
    const std::size_t d = onb.front().dim();
    for (const Vec& v : onb) {
        if (v.dim() != d) {
            throw DimensionMismatch("projector_from_basis: dims " + std::to_string(d) + " vs " +
                                    std::to_string(v.dim()));
        }
    }
    if (!is_orthonormal(onb, EPS_ORTHO)) {
        throw NotOrthonormal("projector_from_basis: family fails the 1e-10 orthonormality check");
    }
    Mat p(d, d);
    for (const Vec& v : onb) kernels::active().couter_acc(v.raw(), p.raw(), d);
    return p;
}

Vec apply(const Mat& m, const Vec& v) {
    if (m.cols != v.dim()) {
        throw DimensionMismatch("apply: matrix cols " + std::to_string(m.cols) + " vs vector dim " +
                                std::to_string(v.dim()));
    }
    Vec out(m.rows);
    kernels::active().cmatvec(m.raw(), v.raw(), out.raw(), m.rows, m.cols);
    return out;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) {
        throw DimensionMismatch("matmul: inner dims " + std::to_string(a.cols) + " vs " +
                                std::to_string(b.rows));
    }
    Mat out(a.rows, b.cols);
    kernels::active().cmatmul(a.raw(), b.raw(), out.raw(), a.rows, a.cols, b.cols);
    return out;
}

Mat adjoint(const Mat& m) {
    Mat out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out.at(j, i) = std::conj(m.at(i, j));
        }
    }
    return out;
}

double frobenius_norm(const Mat& m) {
    return std::sqrt(kernels::active().sum_sqmag(m.raw(), m.e.size()));
}

double frobenius_distance(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw DimensionMismatch("frobenius_distance: shape mismatch");
    }
    return std::sqrt(kernels::active().diff_sqmag(a.raw(), b.raw(), a.e.size()));
}

double commutator_fro_norm(const Mat& a, const Mat& b) {
    if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows) {
        throw DimensionMismatch("commutator_fro_norm: need square matrices of equal dims");
    }
    return frobenius_distance(matmul(a, b), matmul(b, a));
}

}  // namespace qjudge
