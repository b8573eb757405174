#pragma once

#include <string>
#include <vector>

#include "qjudge/linalg.hpp"

namespace qjudge {

/// Subspace of a fixed ambient space, held as an orthonormal basis.
/// Invariant: 1 <= basis.size() <= ambient_dim, pairwise orthonormal at
/// EPS_ORTHO.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;

    std::size_t dim() const { return basis.size(); }
};

/// A named event: a subspace plus its cached orthogonal projector. Events are
/// immutable after construction; the projector is re-derivable from the basis
/// at any time within 1e-10 Frobenius.
struct Event {
    std::string name;
    Subspace subspace;
    Mat projector;
};

/// Event spanned by the given raw vectors; rank-deficient input silently
/// reduces to its true rank. Throws ZeroVector if the span is trivial,
/// DimensionMismatch if any vector's dim differs from ambient_dim.
Event event_from_vectors(const std::string& name, std::size_t ambient_dim,
                         const std::vector<Vec>& raw);

/// Orthocomplement, named "~"+name. Throws FullSpace if e already spans the
/// whole ambient space.
Event complement(const Event& e);

/// True iff the projectors commute: ||[P_a, P_b]||_F <= tol.
/// Throws DimensionMismatch on unequal ambient dims.
bool is_compatible(const Event& a, const Event& b, double tol = EPS_COMMUTE);

/// Intersection of two compatible events, named "a&b". For commuting
/// projectors P_a P_b is itself the projector onto the intersection; its
/// range supplies the basis. Throws IncompatibleEvents when the commutator
/// check fails, ZeroVector when the intersection is {0}.
Event meet(const Event& a, const Event& b);

}  // namespace qjudge
