#include "ringpat/rings.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

constexpr double kPi = std::numbers::pi;

// Beyond this difference atan(e^x) equals its asymptote to < 1e-17.
constexpr double kAngleClamp = 40.0;

double two_atan_exp(double x)
{
    if (x > kAngleClamp) return kPi;
    if (x < -kAngleClamp) return 0.0;
    return 2.0 * std::atan(std::exp(x));
}

}  // namespace

RhoField::RhoField(ComplexPtr complex, std::vector<double> rho) : complex_(std::move(complex)), rho_(std::move(rho))
{
    if (!complex_) throw RingError(ErrorCode::InvalidArgument, "rho field needs a complex");
    if (rho_.size() != complex_->vertex_count()) {
        throw RingError(ErrorCode::InvalidArgument, "rho field has " + std::to_string(rho_.size()) +
                                                        " values for " +
                                                        std::to_string(complex_->vertex_count()) + " vertices");
    }
    for (const double x : rho_) {
        if (!std::isfinite(x)) throw RingError(ErrorCode::InvalidArgument, "rho values must be finite");
    }
}

RhoField RhoField::constant(ComplexPtr complex, double value)
{
    const std::size_t n = complex ? complex->vertex_count() : 0;
    return RhoField(std::move(complex), std::vector<double>(n, value));
}

RingRadii ring_radii(double rho, double ell0)
{
    return {ell0 * std::sinh(rho), ell0 * std::cosh(rho)};
}

double kite_angle(double rho_i, double rho_j)
{
    const double t = two_atan_exp(rho_i - rho_j);
    return rho_i >= 0.0 ? kPi - t : -t;
}

double inner_kite_part(double rho_i, double rho_j)
{
    const double s = std::sinh(rho_i);
    if (s == 0.0) return kPi / 2.0;
    return std::atan(std::cosh(rho_j) / s);
}

double outer_kite_part(double rho_i, double rho_j)
{
    return std::atan(std::sinh(rho_j) / std::cosh(rho_i));
}

double closure_residual(const RhoField& field, Vertex v)
{
    const LatticeComplex& c = field.complex();
    const std::size_t i = c.index(v);
    if (!c.is_interior(i)) {
        throw RingError(ErrorCode::NotInterior,
                        "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ") is not interior");
    }
    return closure_residual(field, i);
}

double closure_residual(const RhoField& field, std::size_t i)
{
    const LatticeComplex& c = field.complex();
    if (!c.is_interior(i)) throw RingError(ErrorCode::NotInterior, "vertex index is not interior");
    double sum = 0.0;
    for (const auto& j : c.neighbors(i)) sum += two_atan_exp(field[i] - field[*j]);
    return sum - 2.0 * kPi;
}

ClosureSummary max_closure_residual(const RhoField& field)
{
    ClosureSummary out;
    for (const std::size_t i : field.complex().interior_vertices()) {
        const double r = std::abs(closure_residual(field, i));
        if (r > out.max_abs) {
            out.max_abs = r;
            out.worst_vertex = i;
        }
    }
    return out;
}

RhoField deform(const RhoField& field, DeformationParam d)
{
    std::vector<double> rho(field.values().begin(), field.values().end());
    for (double& x : rho) x += d.delta;
    return RhoField(field.complex_ptr(), std::move(rho));
}

double rescaled_ell0(double delta) { return 2.0 * std::exp(-std::abs(delta)); }

RingRadii rescaled_radii(double rho, double delta)
{
    // 2 e^{-|d|} sinh(rho + d) expanded so that neither factor overflows.
    const double x = rho + delta;
    const double a = std::abs(delta);
    return {std::exp(x - a) - std::exp(-x - a), std::exp(x - a) + std::exp(-x - a)};
}

CirclePatternField circle_limit(const RhoField& field, LimitSide side)
{
    if (side == LimitSide::Plus) return {field, side};
    return {negate(field), side};
}

double circle_kite_angle(double rho_i, double rho_j) { return two_atan_exp(rho_j - rho_i); }

RhoField negate(const RhoField& field)
{
    std::vector<double> rho(field.values().begin(), field.values().end());
    for (double& x : rho) x = -x;
    return RhoField(field.complex_ptr(), std::move(rho));
}

}  // namespace ringpat
