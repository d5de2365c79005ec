#include "ringpat/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

constexpr double kPi = std::numbers::pi;

// Square between slot s and slot s+1 at a vertex, as an offset of its base.
constexpr std::array<Vertex, 4> kFanOffsets{Vertex{0, 0}, Vertex{-1, 0}, Vertex{-1, -1}, Vertex{0, -1}};

std::string describe(Vertex v) { return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ")"; }

int sign_of(double x, double eps)
{
    if (x > eps) return 1;
    if (x < -eps) return -1;
    return 0;
}

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

Point reflect(Point p, Point a, Point b)
{
    const Point u = (b - a) / std::abs(b - a);
    const Point q = (p - a) / u;
    return a + std::conj(q) * u;
}

// A vertex reached from the neighbor in `slot`, which lies in direction `angle`.
struct Arrival {
    std::size_t vertex = 0;
    int slot = -1;
    double angle = 0.0;
};

class Propagation {
public:
    Propagation(const RhoField& field, double ell0, const LayoutOptions& opts)
        : field_(field), c_(field.complex()), ell0_(ell0), opts_(opts),
          centers_(c_.vertex_count()), placed_(c_.vertex_count(), 0)
    {
    }

    std::vector<Point> run()
    {
        const std::size_t seed = opts_.seed_vertex ? c_.index(*opts_.seed_vertex) : 0;
        centers_[seed] = opts_.seed_position;
        placed_[seed] = 1;

        std::deque<Arrival> queue;
        int seed_slot = -1;
        for (int s = 0; s < 4; ++s) {
            if (c_.neighbors(seed)[static_cast<std::size_t>(s)]) {
                seed_slot = s;
                break;
            }
        }
        queue.push_back({seed, seed_slot, opts_.seed_direction});
        std::vector<char> done(c_.vertex_count(), 0);

        while (!queue.empty()) {
            Arrival item;
            if (opts_.traversal == Traversal::BreadthFirst) {
                item = queue.front();
                queue.pop_front();
            } else {
                item = queue.back();
                queue.pop_back();
            }
            if (done[item.vertex]) continue;
            done[item.vertex] = 1;
            visit(item, queue);
        }
        return centers_;
    }

private:
    bool has_fan_face(std::size_t v, int s) const
    {
        return c_.has_square(c_.vertices()[v] + kFanOffsets[static_cast<std::size_t>(s)]);
    }

    // Angle at v between the neighbors in slots s and s+1.
    double turn(std::size_t v, int s) const
    {
        const auto& nb = c_.neighbors(v);
        const double rv = field_[v];
        const double rj = field_[*nb[static_cast<std::size_t>(s)]];
        const double rk = field_[*nb[static_cast<std::size_t>((s + 1) % 4)]];
        if (s % 2 == 0) return inner_kite_part(rv, rj) + inner_kite_part(rv, rk);
        return outer_kite_part(rv, rj) + outer_kite_part(rv, rk);
    }

    void walk_fan(std::size_t v, int start, double angle, std::array<std::optional<double>, 4>& dir) const
    {
        dir[static_cast<std::size_t>(start)] = angle;
        for (int s = start; has_fan_face(v, s);) {
            const int next = (s + 1) % 4;
            if (dir[static_cast<std::size_t>(next)]) break;
            dir[static_cast<std::size_t>(next)] = *dir[static_cast<std::size_t>(s)] + turn(v, s);
            s = next;
        }
        for (int s = start;;) {
            const int prev = (s + 3) % 4;
            if (!has_fan_face(v, prev) || dir[static_cast<std::size_t>(prev)]) break;
            dir[static_cast<std::size_t>(prev)] = *dir[static_cast<std::size_t>(s)] - turn(v, prev);
            s = prev;
        }
    }

    void visit(const Arrival& at, std::deque<Arrival>& queue)
    {
        const std::size_t v = at.vertex;
        const auto& nb = c_.neighbors(v);
        std::array<std::optional<double>, 4> dir;
        if (at.slot >= 0) walk_fan(v, at.slot, at.angle, dir);
        // Fans that do not contain the reference slot (pinched vertices) are
        // oriented from any neighbor that is already placed.
        for (int s = 0; s < 4; ++s) {
            const auto& k = nb[static_cast<std::size_t>(s)];
            if (k && !dir[static_cast<std::size_t>(s)] && placed_[*k])
                walk_fan(v, s, std::arg(centers_[*k] - centers_[v]), dir);
        }

        for (int s = 0; s < 4; ++s) {
            const auto& k = nb[static_cast<std::size_t>(s)];
            if (!k || !dir[static_cast<std::size_t>(s)]) continue;
            const double d = center_distance(field_[v], field_[*k], ell0_);
            const Point z = centers_[v] + std::polar(d, *dir[static_cast<std::size_t>(s)]);
            if (placed_[*k]) {
                const double gap = std::abs(z - centers_[*k]);
                // Rounding grows with the coordinates, not just with the edge.
                const double scale = std::max({ell0_, d, std::abs(centers_[v]), std::abs(centers_[*k])});
                if (gap > opts_.consistency_tol * scale) {
                    throw RingError(ErrorCode::InconsistentPropagation,
                                    fmt::format("routes to {} disagree by {:.3e}", describe(c_.vertices()[*k]), gap));
                }
                continue;
            }
            centers_[*k] = z;
            placed_[*k] = 1;
            queue.push_back({*k, (s + 2) % 4, *dir[static_cast<std::size_t>(s)] + kPi});
        }
    }

    const RhoField& field_;
    const LatticeComplex& c_;
    double ell0_;
    const LayoutOptions& opts_;
    std::vector<Point> centers_;
    std::vector<char> placed_;
};

struct Box {
    double x0, x1, y0, y1;
};

Box bounds(const std::array<Point, 4>& k)
{
    Box b{k[0].real(), k[0].real(), k[0].imag(), k[0].imag()};
    for (const Point& p : k) {
        b.x0 = std::min(b.x0, p.real());
        b.x1 = std::max(b.x1, p.real());
        b.y0 = std::min(b.y0, p.imag());
        b.y1 = std::max(b.y1, p.imag());
    }
    return b;
}

double signed_area(const std::array<Point, 4>& k)
{
    double a = 0.0;
    for (std::size_t i = 0; i < 4; ++i) a += cross(k[i], k[(i + 1) % 4]);
    return 0.5 * a;
}

// Turning sign of p -> q -> r; 0 when r lies within eps of the line pq.
int orient(Point p, Point q, Point r, double eps)
{
    const Point u = q - p;
    return sign_of(cross(u, r - p), eps * std::abs(u));
}

bool proper_crossing(Point a, Point b, Point c, Point d, double eps)
{
    return orient(a, b, c, eps) * orient(a, b, d, eps) < 0 && orient(c, d, a, eps) * orient(c, d, b, eps) < 0;
}

double segment_distance(Point p, Point a, Point b)
{
    const Point ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

bool strictly_inside(Point p, const std::array<Point, 4>& k, double eps)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (segment_distance(p, k[i], k[(i + 1) % 4]) <= eps) return false;
    bool inside = false;
    for (std::size_t i = 0, j = 3; i < 4; j = i++) {
        const Point a = k[i];
        const Point b = k[j];
        if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
            const double x = (b.real() - a.real()) * (p.imag() - a.imag()) / (b.imag() - a.imag()) + a.real();
            if (p.real() < x) inside = !inside;
        }
    }
    return inside;
}

bool kites_overlap(const std::array<Point, 4>& a, const std::array<Point, 4>& b, double eps)
{
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (proper_crossing(a[i], a[(i + 1) % 4], b[j], b[(j + 1) % 4], eps)) return true;
    const Point ca = 0.25 * (a[0] + a[1] + a[2] + a[3]);
    const Point cb = 0.25 * (b[0] + b[1] + b[2] + b[3]);
    if (strictly_inside(ca, b, eps) || strictly_inside(cb, a, eps)) return true;
    for (const Point& p : a)
        if (strictly_inside(p, b, eps)) return true;
    for (const Point& p : b)
        if (strictly_inside(p, a, eps)) return true;
    return false;
}

std::optional<bool> check_embedding(const PlanarPattern& p)
{
    const auto& edges = p.rho.complex().edges();
    if (edges.size() > kEmbeddingCheckLimit) return std::nullopt;

    std::vector<std::array<Point, 4>> kites;
    std::vector<Box> boxes;
    std::vector<double> areas;
    double scale = 0.0;
    for (const Edge& e : edges) {
        kites.push_back(edge_kite(p, e));
        boxes.push_back(bounds(kites.back()));
        areas.push_back(signed_area(kites.back()));
        scale = std::max({scale, boxes.back().x1 - boxes.back().x0, boxes.back().y1 - boxes.back().y0});
    }
    const double eps = 1e-9 * std::max(scale, p.ell0);

    int area_sign = 0;
    for (const double a : areas) {
        const int s = sign_of(a, eps * eps);
        if (s == 0) continue;
        if (area_sign == 0) area_sign = s;
        if (s != area_sign) return false;
    }

    std::vector<std::size_t> order(kites.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return boxes[x].x0 < boxes[y].x0; });
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
        const Box& bi = boxes[order[ii]];
        for (std::size_t jj = ii + 1; jj < order.size() && boxes[order[jj]].x0 < bi.x1 - eps; ++jj) {
            const Box& bj = boxes[order[jj]];
            if (bj.y0 >= bi.y1 - eps || bi.y0 >= bj.y1 - eps) continue;
            if (kites_overlap(kites[order[ii]], kites[order[jj]], eps)) return false;
        }
    }
    return true;
}

}  // namespace

double center_distance(double rho_i, double rho_j, double ell0)
{
    return ell0 * std::sqrt(0.5 * (std::cosh(2.0 * rho_i) + std::cosh(2.0 * rho_j)));
}

PlanarPattern layout(const RhoField& field, double ell0, const LayoutOptions& opts)
{
    if (!(ell0 > 0.0) || !std::isfinite(ell0)) throw RingError(ErrorCode::InvalidArgument, "ell0 must be positive");
    const LatticeComplex& c = field.complex();
    const ClosureSummary closure = max_closure_residual(field);
    if (closure.max_abs > opts.closure_tol) {
        throw RingError(ErrorCode::ClosureViolation, "closure residual " + std::to_string(closure.max_abs) + " at " +
                                                         describe(c.vertices()[closure.worst_vertex]));
    }

    PlanarPattern out{field, ell0, Propagation(field, ell0, opts).run(), {}};
    out.face_points.reserve(c.face_count());
    for (const Face& f : c.faces()) {
        const std::size_t ll = f.corners[0];
        const std::size_t lr = f.corners[1];
        const double a = std::arg(out.centers[lr] - out.centers[ll]) + inner_kite_part(field[ll], field[lr]);
        out.face_points.push_back(out.centers[ll] + std::polar(std::abs(ell0 * std::sinh(field[ll])), a));
    }
    return out;
}

std::array<Point, 4> edge_kite(const PlanarPattern& p, const Edge& e)
{
    const double ra = p.rho[e.a];
    const double rb = p.rho[e.b];
    const Point za = p.centers[e.a];
    const Point zb = p.centers[e.b];
    const double a = std::arg(zb - za);
    const double inner_r = std::abs(p.ell0 * std::sinh(ra));
    const double outer_r = p.ell0 * std::cosh(ra);
    const double in = inner_kite_part(ra, rb);
    const double out = outer_kite_part(ra, rb);
    if (e.horizontal) return {za, za + std::polar(outer_r, a - out), zb, za + std::polar(inner_r, a + in)};
    return {za, za + std::polar(inner_r, a - in), zb, za + std::polar(outer_r, a + out)};
}

VerifyReport verify(const PlanarPattern& p)
{
    const LatticeComplex& c = p.rho.complex();
    if (p.centers.size() != c.vertex_count() || p.face_points.size() != c.face_count())
        throw RingError(ErrorCode::InvalidArgument, "pattern does not match its complex");

    VerifyReport report;
    report.edge_errors.reserve(c.edge_count());
    for (const Edge& e : c.edges()) {
        const double d = center_distance(p.rho[e.a], p.rho[e.b], p.ell0);
        const double err = std::abs(std::abs(p.centers[e.a] - p.centers[e.b]) - d) / d;
        report.edge_errors.push_back(err);
        report.max_edge_error = std::max(report.max_edge_error, err);
    }

    report.face_errors.reserve(c.face_count());
    report.orientation.reserve(c.face_count());
    for (std::size_t fi = 0; fi < c.face_count(); ++fi) {
        const Face& f = c.faces()[fi];
        const Point t = p.face_points[fi];
        double scale = 0.0;
        double err = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            const double rho = p.rho[f.corners[k]];
            // Inner circles at ll and ur, outer circles at lr and ul.
            const double radius = k % 2 == 0 ? std::abs(p.ell0 * std::sinh(rho)) : p.ell0 * std::cosh(rho);
            err = std::max(err, std::abs(std::abs(t - p.centers[f.corners[k]]) - radius));
            scale = std::max(scale, p.ell0 * std::cosh(rho));
        }
        report.face_errors.push_back(err / scale);
        report.max_face_error = std::max(report.max_face_error, err / scale);

        FaceOrientation o;
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t v = f.corners[k];
            const Point z = p.centers[v];
            const Point p1 = reflect(t, z, p.centers[f.corners[(k + 1) % 4]]);
            const Point p3 = reflect(t, z, p.centers[f.corners[(k + 3) % 4]]);
            o.observed[k] = sign_of(cross(t - p1, p3 - p1), 1e-18 * scale * scale);
            o.expected[k] = sign_of(p.rho[v], 0.0);
            if (o.expected[k] != 0 && o.observed[k] != o.expected[k]) o.consistent = false;
        }
        if (!o.consistent) ++report.orientation_mismatches;
        report.orientation.push_back(o);
    }

    report.embedded = check_embedding(p);
    return report;
}

}  // namespace ringpat
