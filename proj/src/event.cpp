#include "qjudge/event.hpp"

#include <cstddef>
#include <utility>

namespace qjudge {

namespace {

Event make_event(std::string name, std::size_t ambient_dim, std::vector<Vec> onb) {
    Mat p = projector_from_basis(onb);
    return Event{std::move(name), Subspace{ambient_dim, std::move(onb)}, std::move(p)};
}

}  // namespace

Event event_from_vectors(const std::string& name, std::size_t ambient_dim,
                         const std::vector<Vec>& raw) {
    for (const Vec& v : raw) {
        if (v.dim() != ambient_dim) {
            throw DimensionMismatch("event " + name + ": vector dim " + std::to_string(v.dim()) +
                                    " vs ambient dim " + std::to_string(ambient_dim));
        }
    }
    return make_event(name, ambient_dim, gram_schmidt(raw));
}

Event complement(const Event& e) {
    const std::size_t d = e.subspace.ambient_dim;
    const std::size_t k = e.subspace.dim();
    if (k >= d) {
        throw FullSpace("complement: event " + e.name + " spans the whole space");
    }
    // Extend the basis by the canonical axes and orthonormalize; the first k
    // outputs reproduce the basis, the rest span the orthocomplement.
    std::vector<Vec> work = e.subspace.basis;
    for (std::size_t i = 0; i < d; ++i) {
        Vec axis(d);
        axis[i] = 1.0;
        work.push_back(std::move(axis));
    }
    std::vector<Vec> full = gram_schmidt(work);
    std::vector<Vec> rest(full.begin() + static_cast<std::ptrdiff_t>(k), full.end());
    if (rest.size() != d - k) {
        throw InternalInconsistency("complement: rank bookkeeping failed for " + e.name);
    }
    return make_event("~" + e.name, d, std::move(rest));
}

bool is_compatible(const Event& a, const Event& b, double tol) {
    if (a.subspace.ambient_dim != b.subspace.ambient_dim) {
        throw DimensionMismatch("is_compatible: ambient dims " +
                                std::to_string(a.subspace.ambient_dim) + " vs " +
                                std::to_string(b.subspace.ambient_dim));
    }
    return commutator_fro_norm(a.projector, b.projector) <= tol;
}

Event meet(const Event& a, const Event& b) {
    if (!is_compatible(a, b, EPS_COMMUTE)) {
        throw IncompatibleEvents("meet: " + a.name + " and " + b.name +
                                 " do not commute; only sequences are defined");
    }
    const std::size_t d = a.subspace.ambient_dim;
    const Mat prod = matmul(a.projector, b.projector);
    std::vector<Vec> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        Vec col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = prod.at(i, j);
        cols.push_back(std::move(col));
    }
    std::vector<Vec> onb;
    try {
        onb = gram_schmidt(cols);
    } catch (const ZeroVector&) {
        throw ZeroVector("meet: " + a.name + " and " + b.name + " intersect only in {0}");
    }
    return make_event(a.name + "&" + b.name, d, std::move(onb));
}

}  // namespace qjudge
