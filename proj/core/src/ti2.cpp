#include <array>
#include <cmath>
#include <numbers>

#include "ringpat/energy.hpp"
#include "ringpat/error.hpp"

namespace ringpat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGaussPoints = 24;

struct GaussLegendre {
    std::array<double, kGaussPoints> nodes{};
    std::array<double, kGaussPoints> weights{};

    GaussLegendre()
    {
        constexpr int n = kGaussPoints;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
    }
};

const GaussLegendre& gauss()
{
    static const GaussLegendre rule;
    return rule;
}

// Alternating Maclaurin series; used for y <= 1/2 where it converges like 4^-k.
double ti2_series(double y)
{
    const double y2 = y * y;
    double term = y;
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double d = 2.0 * k + 1.0;
        const double add = term / (d * d);
        sum += (k % 2 == 0) ? add : -add;
        if (add < 1e-18 * std::abs(sum)) break;
        term *= y2;
    }
    return sum;
}

// Ti2(1/2) + int_{1/2}^{y} atan(t)/t dt for y in (1/2, 2).
double ti2_quadrature(double y)
{
    const double a = 0.5;
    const double half = 0.5 * (y - a);
    const double mid = 0.5 * (y + a);
    const GaussLegendre& g = gauss();
    double sum = 0.0;
    for (int i = 0; i < kGaussPoints; ++i) {
        const double t = mid + half * g.nodes[i];
        sum += g.weights[i] * std::atan(t) / t;
    }
    return ti2_series(a) + half * sum;
}

}  // namespace

double ti2(double y)
{
    if (std::isnan(y) || y < 0.0) throw RingError(ErrorCode::NegativeArgument, "Ti2 needs y >= 0");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return kCatalan;
    if (y <= 0.5) return ti2_series(y);
    if (y < 2.0) return ti2_quadrature(y);
    if (std::isinf(y)) return y;
    // Reflection: Ti2(y) = Ti2(1/y) + (pi/2) ln y.
    return ti2(1.0 / y) + 0.5 * kPi * std::log(y);
}

double ti2_exp(double u)
{
    if (u <= 0.0) return ti2(std::exp(u));
    return ti2(std::exp(-u)) + 0.5 * kPi * u;
}

}  // namespace ringpat
