#include "ringpat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhiSumTolerance = 1e-9;

std::string describe(Vertex v) { return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ")"; }

void check_boundary_keys(const LatticeComplex& c, const std::map<Vertex, double>& values, const char* what)
{
    for (const auto& [v, x] : values) {
        const auto i = c.find(v);
        if (!i) throw RingError(ErrorCode::InvalidBoundaryConditions, std::string(what) + " at unknown vertex " + describe(v));
        if (c.is_interior(*i))
            throw RingError(ErrorCode::InvalidBoundaryConditions, std::string(what) + " at interior vertex " + describe(v));
        if (!std::isfinite(x))
            throw RingError(ErrorCode::InvalidBoundaryConditions, std::string(what) + " is not finite at " + describe(v));
    }
    for (const std::size_t i : c.boundary_vertices()) {
        if (!values.contains(c.vertices()[i]))
            throw RingError(ErrorCode::InvalidBoundaryConditions,
                            std::string(what) + " missing at boundary vertex " + describe(c.vertices()[i]));
    }
}

double max_abs_free(const Eigen::VectorXd& g, const std::vector<std::size_t>& free)
{
    double m = 0.0;
    for (const std::size_t i : free) m = std::max(m, std::abs(g[static_cast<Eigen::Index>(i)]));
    return m;
}

}  // namespace

BoundaryConditions BoundaryConditions::dirichlet(std::map<Vertex, double> values)
{
    BoundaryConditions bc;
    bc.mode = BoundaryMode::Dirichlet;
    bc.dirichlet_rho = std::move(values);
    return bc;
}

BoundaryConditions BoundaryConditions::neumann(std::map<Vertex, double> phi, Vertex gauge)
{
    BoundaryConditions bc;
    bc.mode = BoundaryMode::Neumann;
    bc.neumann_phi = std::move(phi);
    bc.gauge_vertex = gauge;
    return bc;
}

BoundaryConditions dirichlet_from_field(const RhoField& field)
{
    std::map<Vertex, double> values;
    const LatticeComplex& c = field.complex();
    for (const std::size_t i : c.boundary_vertices()) values.emplace(c.vertices()[i], field[i]);
    return BoundaryConditions::dirichlet(std::move(values));
}

BoundaryConditions flat_neumann(const LatticeComplex& complex)
{
    std::map<Vertex, double> phi;
    for (const std::size_t i : complex.boundary_vertices())
        phi.emplace(complex.vertices()[i], 0.5 * kPi * complex.degree(i));
    return BoundaryConditions::neumann(std::move(phi), complex.vertices().front());
}

BoundaryConditions dual_neumann(const LatticeComplex& complex, const BoundaryConditions& bc)
{
    if (bc.mode != BoundaryMode::Neumann)
        throw RingError(ErrorCode::InvalidBoundaryConditions, "dual weights need Neumann data");
    BoundaryConditions out = bc;
    for (auto& [v, phi] : out.neumann_phi) phi = kPi * complex.degree(complex.index(v)) - phi;
    return out;
}

VertexWeights weights_for(const ComplexPtr& complex, const BoundaryConditions& bc)
{
    const LatticeComplex& c = *complex;
    VertexWeights w = VertexWeights::interior_default(complex);
    if (bc.mode == BoundaryMode::Dirichlet) {
        check_boundary_keys(c, bc.dirichlet_rho, "Dirichlet value");
        // Phi multiplies fixed values at the boundary; it only shifts S by a constant.
        for (const std::size_t i : c.boundary_vertices()) w.set_index(i, 0.0);
        return w;
    }

    check_boundary_keys(c, bc.neumann_phi, "Neumann Phi");
    if (!bc.gauge_vertex) throw RingError(ErrorCode::InvalidBoundaryConditions, "Neumann data needs a gauge vertex");
    if (!c.contains(*bc.gauge_vertex))
        throw RingError(ErrorCode::InvalidBoundaryConditions, "gauge vertex " + describe(*bc.gauge_vertex) + " not in complex");

    double sum = 0.0;
    for (const auto& [v, phi] : bc.neumann_phi) {
        const std::size_t i = c.index(v);
        const double upper = kPi * c.degree(i);
        if (!(phi > 0.0 && phi < upper)) {
            throw RingError(ErrorCode::InvalidBoundaryConditions,
                            "Phi at " + describe(v) + " must lie in (0, " + std::to_string(c.degree(i)) + " pi)");
        }
        w.set_index(i, phi);
        sum += phi;
    }
    const double required = required_boundary_phi_sum(c);
    if (std::abs(sum - required) > kPhiSumTolerance) {
        throw RingError(ErrorCode::PhiSumMismatch, "boundary Phi sum " + std::to_string(sum) + " != " +
                                                       std::to_string(required) + " (= pi*E - 2 pi * interior)");
    }
    return w;
}

std::vector<double> angle_sums(const RhoField& field)
{
    const LatticeComplex& c = field.complex();
    std::vector<double> out(field.size(), 0.0);
    for (const Edge& e : c.edges()) {
        const double t = 2.0 * std::atan(std::exp(field[e.a] - field[e.b]));
        out[e.a] += kPi - t;
        out[e.b] += t;
    }
    return out;
}

SolveResult solve(const ComplexPtr& complex, const BoundaryConditions& bc, const SolveOptions& opts)
{
    if (!(opts.tol_grad > 0.0)) throw RingError(ErrorCode::InvalidArgument, "tol_grad must be positive");
    if (opts.max_iter < 1) throw RingError(ErrorCode::InvalidArgument, "max_iter must be at least 1");

    const LatticeComplex& c = *complex;
    const VertexWeights weights = weights_for(complex, bc);
    const std::size_t n = c.vertex_count();

    std::vector<double> x(n, 0.0);
    if (opts.initial) {
        if (opts.initial->size() != n) throw RingError(ErrorCode::InvalidArgument, "initial guess has wrong size");
        x = *opts.initial;
    }

    std::vector<char> fixed(n, 0);
    if (bc.mode == BoundaryMode::Dirichlet) {
        for (const auto& [v, rho] : bc.dirichlet_rho) {
            const std::size_t i = c.index(v);
            x[i] = rho;
            fixed[i] = 1;
        }
    } else {
        const std::size_t g = c.index(*bc.gauge_vertex);
        x[g] = 0.0;
        fixed[g] = 1;
    }

    std::vector<std::size_t> free;
    std::vector<Eigen::Index> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!fixed[i]) {
            slot[i] = static_cast<Eigen::Index>(free.size());
            free.push_back(i);
        }
    }
    const auto nf = static_cast<Eigen::Index>(free.size());

    SolveReport report;
    if (!c.zigzag_boundary()) {
        report.warnings.push_back(std::to_string(c.degree4_boundary_vertices().size()) +
                                  " boundary vertices have degree 4");
    }

    RhoField field(complex, x);
    double value = energy(field, weights);
    Eigen::VectorXd grad = gradient(field, weights);
    double gnorm = max_abs_free(grad, free);
    report.energy_trace.push_back(value);
    report.gradient_trace.push_back(gnorm);

    if (nf == 0) {
        report.status = SolveStatus::Converged;
        report.gradient_norm = 0.0;
        return {field, report};
    }

    const bool use_cg = free.size() > opts.cholesky_limit;
    report.used_conjugate_gradient = use_cg;

    for (int iter = 0; iter < opts.max_iter && gnorm >= opts.tol_grad; ++iter) {
        const Eigen::SparseMatrix<double> h = hessian(field);
        std::vector<Eigen::Triplet<double>> triplets;
        triplets.reserve(static_cast<std::size_t>(h.nonZeros()));
        for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
            if (slot[static_cast<std::size_t>(col)] < 0) continue;
            for (Eigen::SparseMatrix<double>::InnerIterator it(h, col); it; ++it) {
                const Eigen::Index row = slot[static_cast<std::size_t>(it.row())];
                if (row >= 0) triplets.emplace_back(row, slot[static_cast<std::size_t>(col)], it.value());
            }
        }
        Eigen::SparseMatrix<double> hf(nf, nf);
        hf.setFromTriplets(triplets.begin(), triplets.end());

        Eigen::VectorXd gf(nf);
        for (Eigen::Index k = 0; k < nf; ++k) gf[k] = grad[static_cast<Eigen::Index>(free[static_cast<std::size_t>(k)])];

        Eigen::VectorXd step;
        if (use_cg) {
            Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                                     Eigen::DiagonalPreconditioner<double>>
                cg;
            cg.setTolerance(1e-14);
            cg.setMaxIterations(std::max<Eigen::Index>(1000, 10 * nf));
            cg.compute(hf);
            step = cg.solve(-gf);
            if (cg.info() != Eigen::Success && cg.error() > 1e-8)
                throw RingError(ErrorCode::SingularHessian, "conjugate gradients did not converge");
        } else {
            Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(hf);
            if (llt.info() != Eigen::Success)
                throw RingError(ErrorCode::SingularHessian, "reduced Hessian is not positive definite");
            step = llt.solve(-gf);
        }

        const double slope = gf.dot(step);
        const LineSearchOptions& ls = opts.line_search;
        double t = 1.0;
        bool accepted = false;
        for (int k = 0; k <= ls.max_backtracks; ++k, t *= ls.backtrack) {
            std::vector<double> trial = x;
            for (Eigen::Index j = 0; j < nf; ++j) trial[free[static_cast<std::size_t>(j)]] += t * step[j];
            RhoField trial_field(complex, trial);
            const double trial_value = energy(trial_field, weights);
            const bool armijo = trial_value <= value + ls.armijo_c * t * slope;
            bool roundoff_ok = false;
            Eigen::VectorXd trial_grad;
            if (!armijo && std::abs(trial_value - value) <= 1e-13 * std::max(1.0, std::abs(value))) {
                // Energy differences below rounding: judge the step by the gradient.
                trial_grad = gradient(trial_field, weights);
                roundoff_ok = max_abs_free(trial_grad, free) < gnorm;
            }
            if (armijo || roundoff_ok) {
                x = std::move(trial);
                field = std::move(trial_field);
                value = trial_value;
                grad = roundoff_ok ? trial_grad : gradient(field, weights);
                accepted = true;
                break;
            }
        }
        report.iterations = iter + 1;
        gnorm = max_abs_free(grad, free);
        report.energy_trace.push_back(value);
        report.gradient_trace.push_back(gnorm);
        if (!accepted) {
            report.warnings.push_back("line search failed at iteration " + std::to_string(iter + 1));
            break;
        }
    }

    report.gradient_norm = gnorm;
    report.status = gnorm < opts.tol_grad ? SolveStatus::Converged : SolveStatus::MaxIterationsExceeded;
    return {field, report};
}

}  // namespace ringpat
