#include "ringpat/generators.hpp"

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

}  // namespace

RhoField doyle_field(const ComplexPtr& complex, DoyleParams p)
{
    if (p.x == 0.0 && p.y == 0.0) throw RingError(ErrorCode::InvalidArgument, "Doyle parameter x + iy must be nonzero");
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw RingError(ErrorCode::InvalidArgument, "Doyle parameters must be finite");
    std::vector<double> rho;
    rho.reserve(complex->vertex_count());
    for (const Vertex v : complex->vertices()) rho.push_back(v.m * p.x - v.n * p.y);
    return RhoField(complex, std::move(rho));
}

RhoField erf_field(const ComplexPtr& complex, ErfParams p)
{
    if (!(p.a > 0.0) || !std::isfinite(p.a)) throw RingError(ErrorCode::InvalidArgument, "Erf parameter a must be positive");
    std::vector<double> rho;
    rho.reserve(complex->vertex_count());
    for (const Vertex v : complex->vertices()) rho.push_back(p.a * v.m * v.n);
    return RhoField(complex, std::move(rho));
}

ZAlphaRadii zalpha_radii(ZAlphaParams p)
{
    if (!(p.alpha > 0.0 && p.alpha < 2.0)) throw RingError(ErrorCode::InvalidArgument, "alpha must lie in (0, 2)");
    if (p.extent < 1 || p.extent > kMaxZAlphaExtent) {
        throw RingError(ErrorCode::InvalidArgument,
                        "extent must lie in [1, " + std::to_string(kMaxZAlphaExtent) + "]");
    }

    const Real alpha(p.alpha);
    const Real pi = boost::math::constants::pi<Real>();
    // Column-major storage: column m holds n = -m..m at offset n + m.
    std::vector<std::vector<Real>> col(static_cast<std::size_t>(p.extent) + 1);
    col[0] = {Real(1)};
    col[1] = {alpha / (2 - alpha), tan(alpha * pi / 4), alpha / (2 - alpha)};
    auto at = [&](int m, int n) -> Real& { return col[static_cast<std::size_t>(m)][static_cast<std::size_t>(n + m)]; };

    for (int m = 1; m < p.extent; ++m) {
        col[static_cast<std::size_t>(m) + 1].assign(static_cast<std::size_t>(2 * m + 3), Real(0));
        const Real corner = at(m, -m) * (2 * m + alpha) / (2 * m + 2 - alpha);
        at(m + 1, -(m + 1)) = corner;
        at(m + 1, m + 1) = corner;
        at(m + 1, -m) = at(m, -m) * at(m, -m) / at(m, -m + 1);
        // Quad relation on the square (m,n),(m+1,n),(m+1,n+1),(m,n+1), solved for r_{m+1,n+1}.
        for (int n = -m; n < 0; ++n) {
            const Real& a = at(m, n);
            const Real& b = at(m + 1, n);
            const Real& d = at(m, n + 1);
            const Real num = a * b * (-2 * n - alpha) + d * a * (-2 * m - alpha);
            const Real den = b * (2 * (m + 1) - alpha) + d * (2 * (n + 1) - alpha);
            at(m + 1, n + 1) = -num / den;
        }
        for (int n = 1; n <= m; ++n) at(m + 1, n) = at(m + 1, -n);
    }

    ZAlphaRadii out;
    out.alpha = p.alpha;
    out.extent = p.extent;
    for (int m = 0; m <= p.extent; ++m) {
        for (int n = -m; n <= m; ++n) {
            const double r = static_cast<double>(at(m, n));
            if (!(r > 0.0) || !std::isfinite(r)) {
                throw RingError(ErrorCode::NonpositiveRadius, "z^alpha sweep produced r <= 0 at (" +
                                                                  std::to_string(m) + "," + std::to_string(n) + ")");
            }
            out.radii.emplace(Vertex{m, n}, r);
        }
    }
    out.notes.push_back("apex (0,0) touches only (1,0); it belongs to no square of the wedge");
    return out;
}

RhoField zalpha_rho_field(ZAlphaParams p)
{
    if (p.extent < 2) throw RingError(ErrorCode::InvalidArgument, "z^alpha field needs extent >= 2");
    const ZAlphaRadii radii = zalpha_radii(p);
    auto complex = make_complex(wedge_squares(p.extent));
    std::vector<double> rho;
    rho.reserve(complex->vertex_count());
    for (const Vertex v : complex->vertices()) rho.push_back(std::log(radii.radii.at(v)));
    return RhoField(complex, std::move(rho));
}

double zalpha_quad_residual(const std::map<Vertex, double>& r, Vertex base, double alpha)
{
    const int m = base.m;
    const int n = base.n;
    const double a = r.at(base);
    const double b = r.at({m + 1, n});
    const double c = r.at({m + 1, n + 1});
    const double d = r.at({m, n + 1});
    const double t1 = a * b * (-2.0 * n - alpha);
    const double t2 = b * c * (2.0 * (m + 1) - alpha);
    const double t3 = c * d * (2.0 * (n + 1) - alpha);
    const double t4 = d * a * (-2.0 * m - alpha);
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
    return scale > 0.0 ? (t1 + t2 + t3 + t4) / scale : 0.0;
}

double zalpha_vertex_residual(const std::map<Vertex, double>& r, Vertex v, double /*alpha*/)
{
    const int m = v.m;
    const int n = v.n;
    const double c = r.at(v);
    const double east = r.at({m + 1, n});
    const double south = r.at({m, n - 1});
    const double north = r.at({m, n + 1});
    const double p1 = (m + n) * (c * c - east * south) * (north + east);
    const double p2 = (n - m) * (c * c - north * east) * (east + south);
    // Scale by the absolute values of the expanded monomials, so that locally
    // constant radii (where both products vanish) do not divide by zero.
    const double scale = std::abs(m + n) * (c * c + east * south) * (north + east) +
                         std::abs(n - m) * (c * c + north * east) * (east + south);
    return scale > 0.0 ? (p1 + p2) / scale : 0.0;
}

}  // namespace ringpat
