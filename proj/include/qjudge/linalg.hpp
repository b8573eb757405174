#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qjudge/errors.hpp"

namespace qjudge {

using cdouble = std::complex<double>;

// Numeric thresholds shared across the engine. Ambient dimensions stay small
// (d <= 16 in every intended use), so double precision leaves several orders
// of magnitude between genuine signal and these cutoffs.
inline constexpr double EPS_ZERO = 1e-12;    // below this squared-length scale, a vector is zero
inline constexpr double EPS_RANK = 1e-10;    // Gram-Schmidt residual drop threshold
inline constexpr double EPS_ORTHO = 1e-10;   // orthonormality acceptance bound
inline constexpr double EPS_COMMUTE = 1e-9;  // projector commutator bound for compatibility

/// Dense complex vector. raw() exposes the interleaved {re,im} double view
/// consumed by the kernel layer; std::complex guarantees that layout.
struct Vec {
    std::vector<cdouble> c;

    Vec() = default;
    explicit Vec(std::size_t dim) : c(dim) {}
    Vec(std::initializer_list<cdouble> xs) : c(xs) {}
    explicit Vec(std::vector<cdouble> xs) : c(std::move(xs)) {}

    static Vec real(std::initializer_list<double> xs);
    static Vec real(const std::vector<double>& xs);

    std::size_t dim() const { return c.size(); }
    cdouble& operator[](std::size_t i) { return c[i]; }
    const cdouble& operator[](std::size_t i) const { return c[i]; }

    double* raw() { return reinterpret_cast<double*>(c.data()); }
    const double* raw() const { return reinterpret_cast<const double*>(c.data()); }
};

/// Dense row-major complex matrix.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cdouble> e;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    static Mat identity(std::size_t n);

    cdouble& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    double* raw() { return reinterpret_cast<double*>(e.data()); }
    const double* raw() const { return reinterpret_cast<const double*>(e.data()); }
};

/// <a|b> with conjugation on the first argument.
/// Throws DimensionMismatch if dims differ.
cdouble inner_product(const Vec& a, const Vec& b);

/// sum_i |a_i|^2, i.e. <a|a> without the sqrt.
double norm_squared(const Vec& a);

double norm(const Vec& a);

/// a / norm(a). Throws ZeroVector if norm(a) <= EPS_ZERO.
Vec normalize(const Vec& a);

/// y += alpha * x. Throws DimensionMismatch.
void axpy(cdouble alpha, const Vec& x, Vec& y);

Vec scaled(const Vec& a, cdouble alpha);

/// Orthonormal basis of span(vs) by modified Gram-Schmidt with one
/// re-orthogonalization pass. Vectors whose residual norm falls to EPS_RANK
/// or below are dropped, so the output length is the numerical rank.
/// Throws ZeroVector if every input is numerically zero (or vs is empty),
/// DimensionMismatch on mixed dims.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs);

/// True iff the family is pairwise orthogonal and unit within tol.
bool is_orthonormal(const std::vector<Vec>& vs, double tol = EPS_ORTHO);

/// P = sum_i |v_i><v_i| for an orthonormal family. Throws NotOrthonormal if
/// the onb check at EPS_ORTHO fails (or onb is empty), DimensionMismatch on
/// mixed dims.
Mat projector_from_basis(const std::vector<Vec>& onb);

/// m * v. Throws DimensionMismatch if m.cols != v.dim.
Vec apply(const Mat& m, const Vec& v);

/// a * b. Throws DimensionMismatch if a.cols != b.rows.
Mat matmul(const Mat& a, const Mat& b);

Mat adjoint(const Mat& m);

double frobenius_norm(const Mat& m);

/// ||a - b||_F. Throws DimensionMismatch unless shapes match.
double frobenius_distance(const Mat& a, const Mat& b);

/// ||AB - BA||_F for square a, b of equal dims; 0 for commuting matrices.
/// Throws DimensionMismatch.
double commutator_fro_norm(const Mat& a, const Mat& b);

}  // namespace qjudge
