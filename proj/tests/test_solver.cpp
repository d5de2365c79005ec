#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ringpat/error.hpp"
#include "ringpat/generators.hpp"
#include "ringpat/solver.hpp"
#include "support/gen.hpp"

using namespace ringpat;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexPtr block(int w, int h) { return make_complex(block_squares(0, 0, w, h)); }

double max_diff(const RhoField& a, const RhoField& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const RingError& e) {
        return e.code();
    }
    FAIL("expected RingError");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Dirichlet constant boundary on a 2x2 block")
{
    const auto c = block(2, 2);
    const SolveResult r = solve(c, dirichlet_from_field(RhoField::constant(c, 0.37)));
    REQUIRE(r.report.converged());
    CHECK(r.field.at({1, 1}) == Approx(0.37).epsilon(1e-12));
}

TEST_CASE("Dirichlet zero boundary on a 5x5 block stays zero")
{
    const auto c = block(5, 5);
    const SolveResult r = solve(c, dirichlet_from_field(RhoField::constant(c, 0.0)));
    REQUIRE(r.report.converged());
    for (const double x : r.field.values()) CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("Dirichlet data from a Doyle field recovers it")
{
    const auto c = block(3, 3);
    const RhoField doyle = doyle_field(c, {0.3, 0.2});
    const SolveResult r = solve(c, dirichlet_from_field(doyle));
    REQUIRE(r.report.converged());
    CHECK(max_diff(r.field, doyle) < 1e-9);
    for (const std::size_t i : c->boundary_vertices()) CHECK(r.field[i] == doyle[i]);
}

TEST_CASE("Neumann flat weights give the constant field")
{
    const auto c = block(2, 2);
    std::map<Vertex, double> phi;
    for (const std::size_t i : c->boundary_vertices()) phi[c->vertices()[i]] = c->degree(i) == 2 ? kPi : 1.5 * kPi;
    const SolveResult r = solve(c, BoundaryConditions::neumann(phi, {0, 0}));
    REQUIRE(r.report.converged());
    for (const double x : r.field.values()) CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("Neumann solution meets the prescribed angle sums")
{
    gen::Rng rng(41);
    const auto c = block(4, 3);
    // Perturb flat weights by a zero-sum pattern.
    BoundaryConditions bc = flat_neumann(*c);
    std::vector<Vertex> keys;
    for (const auto& [v, x] : bc.neumann_phi) keys.push_back(v);
    for (std::size_t k = 0; k + 1 < keys.size(); k += 2) {
        const double eps = rng.uniform(-0.3, 0.3);
        bc.neumann_phi[keys[k]] += eps;
        bc.neumann_phi[keys[k + 1]] -= eps;
    }
    const SolveResult r = solve(c, bc);
    REQUIRE(r.report.converged());
    CHECK(r.field.at(*bc.gauge_vertex) == 0.0);
    const std::vector<double> sums = angle_sums(r.field);
    for (const auto& [v, phi] : bc.neumann_phi) CHECK(sums[c->index(v)] == Approx(phi).epsilon(1e-9));
    for (const std::size_t i : c->interior_vertices()) CHECK(std::abs(closure_residual(r.field, i)) < 1e-9);
}

TEST_CASE("energy decreases along the iteration")
{
    const auto c = block(6, 6);
    gen::Rng rng(43);
    const SolveResult r = solve(c, dirichlet_from_field(rng.field(c, -2, 2)));
    REQUIRE(r.report.converged());
    for (std::size_t k = 1; k < r.report.energy_trace.size(); ++k)
        CHECK(r.report.energy_trace[k] <= r.report.energy_trace[k - 1] + 1e-12);
}

TEST_CASE("different starting points reach the same solution")
{
    gen::Rng rng(47);
    const auto c = block(5, 4);
    const BoundaryConditions bc = dirichlet_from_field(rng.field(c, -1, 1));
    SolveOptions opts;
    const SolveResult a = solve(c, bc, opts);
    opts.initial = rng.values(c->vertex_count(), -1, 1);
    const SolveResult b = solve(c, bc, opts);
    REQUIRE(a.report.converged());
    REQUIRE(b.report.converged());
    CHECK(max_diff(a.field, b.field) < 1e-8);
}

TEST_CASE("dual Neumann weights give the negated field")
{
    gen::Rng rng(53);
    const auto c = block(4, 4);
    BoundaryConditions bc = flat_neumann(*c);
    auto it = bc.neumann_phi.begin();
    const double eps = 0.25;
    it->second += eps;
    std::next(it, 5)->second -= eps;
    const SolveResult primal = solve(c, bc);
    const SolveResult dual = solve(c, dual_neumann(*c, bc));
    REQUIRE(primal.report.converged());
    REQUIRE(dual.report.converged());
    for (std::size_t i = 0; i < primal.field.size(); ++i) CHECK(dual.field[i] == Approx(-primal.field[i]).epsilon(1e-8));
}

TEST_CASE("max_iter exhaustion is reported, not thrown")
{
    const auto c = block(6, 6);
    gen::Rng rng(59);
    SolveOptions opts;
    opts.max_iter = 1;
    const SolveResult r = solve(c, dirichlet_from_field(rng.field(c, -3, 3)), opts);
    CHECK(r.report.status == SolveStatus::MaxIterationsExceeded);
    CHECK(r.report.iterations == 1);
}

TEST_CASE("conjugate gradients above the Cholesky limit")
{
    const auto c = block(6, 6);
    gen::Rng rng(61);
    const BoundaryConditions bc = dirichlet_from_field(rng.field(c, -1, 1));
    SolveOptions opts;
    opts.cholesky_limit = 0;
    const SolveResult cg = solve(c, bc, opts);
    const SolveResult llt = solve(c, bc);
    CHECK(cg.report.used_conjugate_gradient);
    REQUIRE(cg.report.converged());
    CHECK(max_diff(cg.field, llt.field) < 1e-9);
}

TEST_CASE("boundary condition validation")
{
    const auto c = block(2, 2);
    BoundaryConditions flat = flat_neumann(*c);

    BoundaryConditions off = flat;
    off.neumann_phi.begin()->second += 0.1;
    CHECK(code_of([&] { (void)solve(c, off); }) == ErrorCode::PhiSumMismatch);

    BoundaryConditions missing = flat;
    missing.neumann_phi.erase(missing.neumann_phi.begin());
    CHECK(code_of([&] { (void)solve(c, missing); }) == ErrorCode::InvalidBoundaryConditions);

    BoundaryConditions interior = flat;
    interior.neumann_phi[{1, 1}] = 2 * kPi;
    CHECK(code_of([&] { (void)solve(c, interior); }) == ErrorCode::InvalidBoundaryConditions);

    BoundaryConditions no_gauge = flat;
    no_gauge.gauge_vertex.reset();
    CHECK(code_of([&] { (void)solve(c, no_gauge); }) == ErrorCode::InvalidBoundaryConditions);

    BoundaryConditions out_of_range = flat;
    out_of_range.neumann_phi[{0, 0}] = 0.0;
    CHECK(code_of([&] { (void)solve(c, out_of_range); }) == ErrorCode::InvalidBoundaryConditions);

    BoundaryConditions dir = dirichlet_from_field(RhoField::constant(c, 0.0));
    dir.dirichlet_rho.erase({0, 0});
    CHECK(code_of([&] { (void)solve(c, dir); }) == ErrorCode::InvalidBoundaryConditions);

    SolveOptions bad;
    bad.tol_grad = 0.0;
    CHECK(code_of([&] { (void)solve(c, flat, bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree-4 boundary vertices are solved with a warning")
{
    const auto c = make_complex(diamond_squares(3));
    const SolveResult r = solve(c, flat_neumann(*c));
    CHECK(r.report.converged());
    CHECK_FALSE(r.report.warnings.empty());
}
