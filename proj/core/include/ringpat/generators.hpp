#pragma once

#include <map>
#include <string>
#include <vector>

#include "ringpat/rings.hpp"

namespace ringpat {

/// rho_{m,n} = m x - n y, (x, y) != (0, 0).
struct DoyleParams {
    double x = 0.0;
    double y = 0.0;
};

/// rho_{m,n} = a m n, a > 0.
struct ErfParams {
    double a = 1.0;
};

/// Discrete z^alpha on the wedge V = {(m,n) : m >= |n|, m <= extent}.
struct ZAlphaParams {
    double alpha = 1.0;
    int extent = 8;
};

inline constexpr int kMaxZAlphaExtent = 40;

/// Throws RingError(InvalidArgument) for (x, y) = (0, 0).
RhoField doyle_field(const ComplexPtr& complex, DoyleParams p);

/// Throws RingError(InvalidArgument) unless a > 0.
RhoField erf_field(const ComplexPtr& complex, ErfParams p);

/// Circle radii of the discrete z^alpha pattern.
///
/// r_{0,0} = 1 and r_{1,0} = tan(alpha pi / 4) for the circle next to the
/// origin; column m+1 follows from column m by the boundary recurrence
/// r_{m+1,-(m+1)} = r_{m,-m} (2m + alpha) / (2m + 2 - alpha), the boundary
/// form r_{m+1,-m} = r_{m,-m}^2 / r_{m,-m+1}, and the quad relation solved for
/// r_{m+1,n+1}, then mirrored in n. The recurrence amplifies rounding errors
/// roughly like e^{1.7 m}, so it runs in 50-digit arithmetic.
struct ZAlphaRadii {
    double alpha = 1.0;
    int extent = 0;
    std::map<Vertex, double> radii;
    std::vector<std::string> notes;
};

/// Throws RingError(InvalidArgument) unless 0 < alpha < 2 and
/// 1 <= extent <= kMaxZAlphaExtent; RingError(NonpositiveRadius) if the sweep
/// produces r <= 0.
ZAlphaRadii zalpha_radii(ZAlphaParams p);

/// rho = log r on the wedge complex of the given extent (extent >= 2). The
/// apex (0,0) lies on no square of the wedge and is left out of the field.
RhoField zalpha_rho_field(ZAlphaParams p);

/// Quad relation on the square with lower-left corner `base`, divided by the
/// sum of the absolute values of its four terms. Requires all four radii.
double zalpha_quad_residual(const std::map<Vertex, double>& r, Vertex base, double alpha);

/// Interior (vertex) relation at v, relative to the sum of the absolute values
/// of its expanded monomials. Requires r at v, (m+1,n), (m,n-1), (m,n+1).
double zalpha_vertex_residual(const std::map<Vertex, double>& r, Vertex v, double alpha);

}  // namespace ringpat
