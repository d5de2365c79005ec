#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "ringpat/rings.hpp"

namespace ringpat {

inline constexpr double kCatalan = 0.915965594177219015054603514932384110774;

/// Inverse tangent integral Ti2(y) = int_0^y atan(t)/t dt = Im Li2(i y).
/// Throws RingError(NegativeArgument) for y < 0.
double ti2(double y);

/// Ti2(e^u) for any real u, without overflow for large u.
double ti2_exp(double u);

/// Target kite-angle sums Phi_i, one per vertex. Unset entries are NaN.
class VertexWeights {
public:
    explicit VertexWeights(ComplexPtr complex);

    /// Phi = 2 pi at interior vertices, boundary vertices unset.
    static VertexWeights interior_default(ComplexPtr complex);
    /// Phi = deg * pi / 2 everywhere: the kite-angle sums of a constant field.
    static VertexWeights flat(ComplexPtr complex);

    void set(Vertex v, double phi) { phi_[complex_->index(v)] = phi; }
    void set_index(std::size_t i, double phi) { phi_[i] = phi; }
    double operator[](std::size_t i) const { return phi_[i]; }
    bool has(std::size_t i) const;
    bool complete() const;

    double sum() const;
    const std::vector<double>& values() const noexcept { return phi_; }
    const LatticeComplex& complex() const noexcept { return *complex_; }

private:
    ComplexPtr complex_;
    std::vector<double> phi_;
};

/// Sum of Phi over all vertices that makes the functional gauge invariant and
/// a critical point possible: pi times the number of edges.
double required_phi_total(const LatticeComplex& complex);

/// Sum over boundary vertices implied by required_phi_total() with Phi = 2 pi
/// at interior vertices.
double required_boundary_phi_sum(const LatticeComplex& complex);

/// S(rho) = sum_edges [Ti2(e^{rho_j-rho_i}) + Ti2(e^{rho_i-rho_j}) - pi/2 (rho_i+rho_j)]
///        + sum_vertices Phi_i rho_i.
/// Throws RingError(MissingWeight) if any Phi is unset.
double energy(const RhoField& field, const VertexWeights& weights);

/// dS/drho_i = Phi_i + sum_{j~i} (2 atan(e^{rho_i-rho_j}) - pi).
Eigen::VectorXd gradient(const RhoField& field, const VertexWeights& weights);

/// Weighted graph Laplacian with edge weights 1/cosh(rho_i - rho_j).
Eigen::SparseMatrix<double> hessian(const RhoField& field);

struct EnergyReport {
    double value = 0.0;
    Eigen::VectorXd gradient;
    Eigen::SparseMatrix<double> hessian;
    double gradient_max_norm = 0.0;
    double max_closure_residual = 0.0;
};

EnergyReport evaluate(const RhoField& field, const VertexWeights& weights);

}  // namespace ringpat
