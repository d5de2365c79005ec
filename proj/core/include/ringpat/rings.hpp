#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ringpat/lattice.hpp"

namespace ringpat {

using ComplexPtr = std::shared_ptr<const LatticeComplex>;

inline ComplexPtr make_complex(const std::set<Vertex>& squares)
{
    return std::make_shared<const LatticeComplex>(LatticeComplex::build(squares));
}

/// One finite rho-radius per vertex of a complex, indexed like
/// LatticeComplex::vertices().
class RhoField {
public:
    /// Throws RingError(InvalidArgument) on size mismatch or non-finite values.
    RhoField(ComplexPtr complex, std::vector<double> rho);

    /// Field with the same value at every vertex.
    static RhoField constant(ComplexPtr complex, double value);

    const LatticeComplex& complex() const noexcept { return *complex_; }
    const ComplexPtr& complex_ptr() const noexcept { return complex_; }

    std::size_t size() const noexcept { return rho_.size(); }
    double operator[](std::size_t i) const { return rho_[i]; }
    double at(Vertex v) const { return rho_[complex_->index(v)]; }
    std::span<const double> values() const noexcept { return rho_; }

private:
    ComplexPtr complex_;
    std::vector<double> rho_;
};

/// Signed inner radius r and outer radius R of a ring.
struct RingRadii {
    double r = 0.0;
    double R = 0.0;
};

/// r = ell0 sinh(rho), R = ell0 cosh(rho).
RingRadii ring_radii(double rho, double ell0 = 1.0);

/// Angle at v_i of the cyclic quadrilateral spanned by the rings at v_i and
/// v_j. pi - 2 atan(e^{rho_i - rho_j}) for rho_i >= 0, -2 atan(e^{rho_i - rho_j})
/// for rho_i < 0.
double kite_angle(double rho_i, double rho_j);

/// The two pieces of a kite angle on either side of the centre line: the part
/// swept towards the intersection point on the inner circle of v_i,
/// atan(R_j / r_i), and the part towards the point on its outer circle,
/// atan(r_j / R_i). Their sum is kite_angle(rho_i, rho_j). At rho_i = 0 the
/// inner part is +pi/2.
double inner_kite_part(double rho_i, double rho_j);
double outer_kite_part(double rho_i, double rho_j);

/// sum_j 2 atan(e^{rho_i - rho_j}) - 2 pi over the flower of an interior
/// vertex. Throws RingError(NotInterior).
double closure_residual(const RhoField& field, Vertex v);
double closure_residual(const RhoField& field, std::size_t vertex_index);

/// Largest |closure_residual| over interior vertices (0 if there are none).
struct ClosureSummary {
    double max_abs = 0.0;
    std::size_t worst_vertex = 0;
};
ClosureSummary max_closure_residual(const RhoField& field);

struct DeformationParam {
    double delta = 0.0;
};

/// rho -> rho + delta at every vertex.
RhoField deform(const RhoField& field, DeformationParam d);

/// Radii of the deformed pattern rescaled by 2 e^{-|delta|}, which stay
/// bounded as delta -> +-infinity.
RingRadii rescaled_radii(double rho, double delta);

/// Area scale ell0 = 2 e^{-|delta|} that goes with rescaled_radii().
double rescaled_ell0(double delta);

enum class LimitSide { Plus = 1, Minus = -1 };

/// Logarithmic radii of the orthogonal circle pattern reached as
/// delta -> +infinity (Plus: rho) or its dual at -infinity (Minus: -rho).
/// Circle radii are e^{value}.
struct CirclePatternField {
    RhoField log_radii;
    LimitSide side;
};
CirclePatternField circle_limit(const RhoField& field, LimitSide side);

/// Angle 2 atan(r_j / r_i) of the right-angled kite of two orthogonal circles
/// with logarithmic radii rho_i, rho_j.
double circle_kite_angle(double rho_i, double rho_j);

/// Field with every value negated (the dual pattern's rho-radii).
RhoField negate(const RhoField& field);

}  // namespace ringpat
