#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringpat/energy.hpp"
#include "ringpat/rings.hpp"

namespace ringpat {

enum class BoundaryMode { Dirichlet, Neumann };

/// Either fixed boundary rho-radii (Dirichlet) or prescribed boundary
/// kite-angle sums Phi (Neumann, with one vertex pinned to rho = 0).
struct BoundaryConditions {
    BoundaryMode mode = BoundaryMode::Dirichlet;
    std::map<Vertex, double> dirichlet_rho;
    std::map<Vertex, double> neumann_phi;
    std::optional<Vertex> gauge_vertex;

    static BoundaryConditions dirichlet(std::map<Vertex, double> values);
    static BoundaryConditions neumann(std::map<Vertex, double> phi, Vertex gauge);
};

/// Dirichlet data sampled from a field on the boundary of its complex.
BoundaryConditions dirichlet_from_field(const RhoField& field);

/// Neumann data with Phi = deg * pi / 2 on the boundary (a constant field
/// solves it), gauge at the lexicographically first vertex.
BoundaryConditions flat_neumann(const LatticeComplex& complex);

/// Neumann data for the dual pattern: every kite angle phi becomes pi - phi,
/// so Phi_i -> deg_i * pi - Phi_i.
BoundaryConditions dual_neumann(const LatticeComplex& complex, const BoundaryConditions& bc);

struct LineSearchOptions {
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    int max_backtracks = 60;
};

struct SolveOptions {
    double tol_grad = 1e-10;
    int max_iter = 100;
    LineSearchOptions line_search;
    /// Starting point (one value per vertex). Defaults to rho = 0; Dirichlet
    /// boundary values and the Neumann gauge are imposed on top of it.
    std::optional<std::vector<double>> initial;
    /// Above this many free variables the Newton system is solved with
    /// Jacobi-preconditioned conjugate gradients instead of sparse Cholesky.
    std::size_t cholesky_limit = 100000;
};

enum class SolveStatus { Converged, MaxIterationsExceeded };

struct SolveReport {
    SolveStatus status = SolveStatus::MaxIterationsExceeded;
    int iterations = 0;
    double gradient_norm = 0.0;  ///< max-norm over free vertices
    std::vector<double> energy_trace;
    std::vector<double> gradient_trace;
    bool used_conjugate_gradient = false;
    std::vector<std::string> warnings;

    bool converged() const noexcept { return status == SolveStatus::Converged; }
};

struct SolveResult {
    RhoField field;
    SolveReport report;
};

/// Validates boundary data against the complex and returns the full weight
/// vector (Phi = 2 pi inside). Throws RingError(InvalidBoundaryConditions,
/// PhiSumMismatch).
VertexWeights weights_for(const ComplexPtr& complex, const BoundaryConditions& bc);

/// Minimises the ring-pattern functional by damped Newton iteration on the
/// free vertices (interior for Dirichlet, all but the gauge vertex for
/// Neumann). A run that hits max_iter returns its last iterate with
/// status MaxIterationsExceeded. Throws RingError(SingularHessian) if the
/// reduced Hessian cannot be factored.
SolveResult solve(const ComplexPtr& complex, const BoundaryConditions& bc, const SolveOptions& opts = {});

/// Kite-angle sum at each vertex of a field: sum_j kite angle of the
/// positive branch, pi - 2 atan(e^{rho_i - rho_j}).
std::vector<double> angle_sums(const RhoField& field);

}  // namespace ringpat
