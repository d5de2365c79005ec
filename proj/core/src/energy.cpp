#include "ringpat/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_complete(const RhoField& field, const VertexWeights& weights)
{
    if (&field.complex() != &weights.complex() &&
        field.complex().vertices() != weights.complex().vertices()) {
        throw RingError(ErrorCode::MissingWeight, "weights belong to a different complex");
    }
    if (!weights.complete()) throw RingError(ErrorCode::MissingWeight, "Phi is unset at some vertex");
}

double two_atan_exp(double x)
{
    if (x > 40.0) return kPi;
    if (x < -40.0) return 0.0;
    return 2.0 * std::atan(std::exp(x));
}

}  // namespace

VertexWeights::VertexWeights(ComplexPtr complex)
    : complex_(std::move(complex)),
      phi_(complex_ ? complex_->vertex_count() : 0, std::numeric_limits<double>::quiet_NaN())
{
    if (!complex_) throw RingError(ErrorCode::InvalidArgument, "weights need a complex");
}

VertexWeights VertexWeights::interior_default(ComplexPtr complex)
{
    VertexWeights w(std::move(complex));
    for (const std::size_t i : w.complex().interior_vertices()) w.phi_[i] = 2.0 * kPi;
    return w;
}

VertexWeights VertexWeights::flat(ComplexPtr complex)
{
    VertexWeights w(std::move(complex));
    for (std::size_t i = 0; i < w.phi_.size(); ++i) w.phi_[i] = 0.5 * kPi * w.complex().degree(i);
    return w;
}

bool VertexWeights::has(std::size_t i) const { return !std::isnan(phi_[i]); }

bool VertexWeights::complete() const
{
    for (const double x : phi_)
        if (std::isnan(x)) return false;
    return true;
}

double VertexWeights::sum() const
{
    double s = 0.0;
    for (const double x : phi_) s += x;
    return s;
}

double required_phi_total(const LatticeComplex& complex)
{
    return kPi * static_cast<double>(complex.edge_count());
}

double required_boundary_phi_sum(const LatticeComplex& complex)
{
    return required_phi_total(complex) - 2.0 * kPi * static_cast<double>(complex.interior_vertices().size());
}

double energy(const RhoField& field, const VertexWeights& weights)
{
    require_complete(field, weights);
    const LatticeComplex& c = field.complex();
    double edge_sum = 0.0;
    for (const Edge& e : c.edges()) {
        const double ri = field[e.a];
        const double rj = field[e.b];
        // Ti2(e^d) + Ti2(e^-d) = 2 Ti2(e^-|d|) + (pi/2)|d|.
        const double d = std::abs(ri - rj);
        edge_sum += 2.0 * ti2_exp(-d) + 0.5 * kPi * d - 0.5 * kPi * (ri + rj);
    }
    double vertex_sum = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) vertex_sum += weights[i] * field[i];
    return edge_sum + vertex_sum;
}

Eigen::VectorXd gradient(const RhoField& field, const VertexWeights& weights)
{
    require_complete(field, weights);
    const LatticeComplex& c = field.complex();
    Eigen::VectorXd g(static_cast<Eigen::Index>(field.size()));
    for (std::size_t i = 0; i < field.size(); ++i) g[static_cast<Eigen::Index>(i)] = weights[i];
    for (const Edge& e : c.edges()) {
        const double t = two_atan_exp(field[e.a] - field[e.b]);
        g[static_cast<Eigen::Index>(e.a)] += t - kPi;
        // 2 atan(e^{-x}) - pi = -(2 atan(e^x))
        g[static_cast<Eigen::Index>(e.b)] += -t;
    }
    return g;
}

Eigen::SparseMatrix<double> hessian(const RhoField& field)
{
    const LatticeComplex& c = field.complex();
    const auto n = static_cast<Eigen::Index>(field.size());
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(4 * c.edge_count());
    for (const Edge& e : c.edges()) {
        const double w = 1.0 / std::cosh(field[e.a] - field[e.b]);
        const auto a = static_cast<Eigen::Index>(e.a);
        const auto b = static_cast<Eigen::Index>(e.b);
        triplets.emplace_back(a, b, -w);
        triplets.emplace_back(b, a, -w);
        triplets.emplace_back(a, a, w);
        triplets.emplace_back(b, b, w);
    }
    Eigen::SparseMatrix<double> h(n, n);
    h.setFromTriplets(triplets.begin(), triplets.end());
    return h;
}

EnergyReport evaluate(const RhoField& field, const VertexWeights& weights)
{
    EnergyReport r;
    r.value = energy(field, weights);
    r.gradient = gradient(field, weights);
    r.hessian = hessian(field);
    r.gradient_max_norm = r.gradient.size() ? r.gradient.cwiseAbs().maxCoeff() : 0.0;
    r.max_closure_residual = max_closure_residual(field).max_abs;
    return r;
}

}  // namespace ringpat
