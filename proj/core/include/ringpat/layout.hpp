#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ringpat/rings.hpp"

namespace ringpat {

using Point = std::complex<double>;

/// Rings placed in the plane. centers follow the vertex order of the complex,
/// face_points the face order; each face point is the common point of the
/// inner circles at the lower-left and upper-right corners and the outer
/// circles at the other two.
struct PlanarPattern {
    RhoField rho;
    double ell0 = 1.0;
    std::vector<Point> centers;
    std::vector<Point> face_points;
};

enum class Traversal { BreadthFirst, DepthFirst };

struct LayoutOptions {
    std::optional<Vertex> seed_vertex;  ///< default: first vertex
    Point seed_position{0.0, 0.0};
    /// Direction of the edge from the seed to its first neighbor in E, N, W, S order.
    double seed_direction = 0.0;
    Traversal traversal = Traversal::BreadthFirst;
    double closure_tol = 1e-8;
    /// Two routes to the same center may disagree by this much, times the
    /// largest of ell0, the edge length and the coordinates involved.
    double consistency_tol = 1e-7;
};

/// Distance between the centers of adjacent rings,
/// ell0 sqrt((cosh 2 rho_i + cosh 2 rho_j) / 2).
double center_distance(double rho_i, double rho_j, double ell0 = 1.0);

/// Places all ring centers by walking the complex from the seed, turning
/// around each vertex by the kite-angle pieces of the faces in between.
/// Throws RingError(ClosureViolation) if some interior vertex misses closure
/// by more than closure_tol, RingError(InconsistentPropagation) if two routes
/// disagree, RingError(InvalidArgument) for ell0 <= 0.
PlanarPattern layout(const RhoField& field, double ell0 = 1.0, const LayoutOptions& opts = {});

/// Orientation test at each corner of a face (ll, lr, ur, ul). The face
/// point and its mirror images across the two edges at the corner lie on one
/// circle of that ring; their turning sign should match the sign of r there.
struct FaceOrientation {
    std::array<int, 4> observed{};  ///< -1, 0 (degenerate) or +1
    std::array<int, 4> expected{};  ///< sign of r; 0 places no constraint
    bool consistent = true;
};

struct VerifyReport {
    /// | |z_i - z_j| - d_ij | / d_ij per edge.
    std::vector<double> edge_errors;
    /// Largest distance of the face point from its four circles, divided by
    /// ell0 times the largest cosh(rho) at the corners.
    std::vector<double> face_errors;
    std::vector<FaceOrientation> orientation;
    double max_edge_error = 0.0;
    double max_face_error = 0.0;
    std::size_t orientation_mismatches = 0;
    /// No two kites overlap. Empty when the pattern is too large to check.
    std::optional<bool> embedded;

    double max_error() const noexcept { return max_edge_error > max_face_error ? max_edge_error : max_face_error; }
};

inline constexpr std::size_t kEmbeddingCheckLimit = 20000;

/// Never throws for a pattern whose vectors match its complex; patterns with
/// mismatched sizes raise RingError(InvalidArgument).
VerifyReport verify(const PlanarPattern& pattern);

/// The kite of edge e: its two centers and the two intersection points of
/// the circles involved, in the order (z_a, cw point, z_b, ccw point).
std::array<Point, 4> edge_kite(const PlanarPattern& pattern, const Edge& e);

}  // namespace ringpat
