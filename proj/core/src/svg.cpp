#include "ringpat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include <fmt/format.h>

#include "ringpat/error.hpp"

namespace ringpat {

std::string render_svg(const PlanarPattern& p, const RenderOptions& opts)
{
    if (!(opts.size > 2.0 * opts.margin)) throw RingError(ErrorCode::InvalidArgument, "canvas smaller than its margins");

    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    for (std::size_t i = 0; i < p.centers.size(); ++i) {
        const double reach = opts.show_outer ? p.ell0 * std::cosh(p.rho[i]) : std::abs(p.ell0 * std::sinh(p.rho[i]));
        x0 = std::min(x0, p.centers[i].real() - reach);
        x1 = std::max(x1, p.centers[i].real() + reach);
        y0 = std::min(y0, p.centers[i].imag() - reach);
        y1 = std::max(y1, p.centers[i].imag() + reach);
    }
    const double extent = std::max({x1 - x0, y1 - y0, 1e-300});
    const double scale = (opts.size - 2.0 * opts.margin) / extent;
    // Flip y so that the lattice's n axis points up.
    auto sx = [&](double x) { return opts.margin + (x - x0) * scale; };
    auto sy = [&](double y) { return opts.size - opts.margin - (y - y0) * scale; };

    std::string out;
    auto it = std::back_inserter(out);
    fmt::format_to(it,
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{0:.0f}\" "
                   "viewBox=\"0 0 {0:.0f} {0:.0f}\">\n",
                   opts.size);
    fmt::format_to(it, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    fmt::format_to(it, "<g fill=\"none\" stroke-width=\"{:.6f}\">\n", opts.stroke_width);
    for (std::size_t i = 0; i < p.centers.size(); ++i) {
        const double rho = p.rho[i];
        const std::string& color = rho < 0.0 ? opts.negative_color : opts.positive_color;
        const double cx = sx(p.centers[i].real());
        const double cy = sy(p.centers[i].imag());
        const double r = std::abs(p.ell0 * std::sinh(rho)) * scale;
        if (opts.show_outer) {
            fmt::format_to(it, "<circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" stroke=\"{}\"/>\n", cx, cy,
                           p.ell0 * std::cosh(rho) * scale, color);
        }
        if (!opts.show_inner) continue;
        if (rho == 0.0) {
            fmt::format_to(it, "<circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"{}\" stroke=\"none\"/>\n", cx, cy,
                           1.5 * opts.stroke_width, color);
        } else {
            fmt::format_to(it, "<circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" stroke=\"{}\"/>\n", cx, cy, r, color);
        }
    }
    fmt::format_to(it, "</g>\n");
    if (opts.show_touching_points) {
        fmt::format_to(it, "<g fill=\"black\">\n");
        for (const Point& t : p.face_points) {
            fmt::format_to(it, "<circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\"/>\n", sx(t.real()), sy(t.imag()),
                           opts.stroke_width);
        }
        fmt::format_to(it, "</g>\n");
    }
    fmt::format_to(it, "</svg>\n");
    return out;
}

}  // namespace ringpat
