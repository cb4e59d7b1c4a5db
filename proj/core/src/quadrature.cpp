#include "bctk/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace bctk {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Node parameter cutoff: beyond |t| = 6.5 the weights underflow.
constexpr double kTMax = 6.5;
// Nodes closer to an endpoint than this are dropped; for the integrable
// singularities we integrate, their true contribution is below 1e-13.
constexpr double kMinOffset = 1e-300;

struct Accumulator {
    Complex s1{0.0};
    Complex s2{0.0};
    void add(const ComplexPair& term, double weight) {
        s1 += term[0] * weight;
        s2 += term[1] * weight;
    }
};

double pair_dist(const Accumulator& a, const Accumulator& b, double ha,
                 double hb) {
    return std::max(std::abs(a.s1 * ha - b.s1 * hb),
                    std::abs(a.s2 * ha - b.s2 * hb));
}

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

QuadOutcome tanh_sinh(const Integrand& f, double a, double b,
                      const QuadConfig& config) {
    const double width = b - a;
    if (!(width > 0.0)) {
        throw BadParameters("tanh_sinh: requires a < b");
    }

    long evals = 0;
    // One term of the transformed sum at node parameter t.
    const auto term_at = [&](double t) -> ComplexPair {
        const double u = kHalfPi * std::sinh(t);
        // x = a + width * sigma(2u). The distance to the nearer endpoint is
        // width / (1 + e^{2|u|}), which stays accurate down to the underflow
        // floor without cancellation.
        const double near_offset = width / (1.0 + std::exp(2.0 * std::fabs(u)));
        const double cosh_u = std::cosh(u);
        const double weight =
            width * kHalfPi * std::cosh(t) / (2.0 * cosh_u * cosh_u);
        if (near_offset < kMinOffset || weight == 0.0) {
            return {Complex{0.0}, Complex{0.0}};
        }
        const double x = (u >= 0.0) ? b - near_offset : a + near_offset;
        ++evals;
        ComplexPair v = f(x);
        if (!finite(v[0]) || !finite(v[1])) {
            throw QuadratureFailure("integrand produced non-finite values");
        }
        v[0] *= weight;
        v[1] *= weight;
        return v;
    };

    Accumulator sum;
    double h = 1.0;
    // Level 0: k = 0, +-1, ..., while |k*h| <= kTMax.
    sum.add(term_at(0.0), 1.0);
    for (int k = 1; k * h <= kTMax; ++k) {
        sum.add(term_at(k * h), 1.0);
        sum.add(term_at(-k * h), 1.0);
    }

    Accumulator prev = sum;
    double prev_h = h;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= config.max_levels; ++level) {
        h /= 2.0;
        for (int k = 1; k * h <= kTMax; k += 2) {
            sum.add(term_at(k * h), 1.0);
            sum.add(term_at(-k * h), 1.0);
        }
        err = pair_dist(sum, prev, h, prev_h);
        prev = sum;
        prev_h = h;
        if (level >= 3 && err <= config.abs_tol) break;
    }

    return {Bicomplex::idempotent(sum.s1 * h, sum.s2 * h), err, evals};
}

QuadOutcome integrate_zero_to_inf(const Integrand& f, double growth_exponent,
                                  const QuadConfig& config) {
    const double g = std::max(growth_exponent, 0.0);
    // Truncation point: e^{-T} T^g a couple of orders below the budget.
    double upper = 32.0;
    while (std::exp(-upper) * std::pow(upper, g) > config.abs_tol * 1e-3 &&
           upper < 1e6) {
        upper *= 2.0;
    }

    std::vector<std::pair<double, double>> panels;
    panels.emplace_back(0.0, 1.0);
    for (double lo = 1.0; lo < upper; lo *= 2.0) {
        panels.emplace_back(lo, std::min(lo * 2.0, upper));
    }

    QuadConfig panel_config = config;
    panel_config.abs_tol =
        config.abs_tol / (2.0 * static_cast<double>(panels.size()));

    Complex total1{0.0}, total2{0.0};
    double err = std::exp(-upper) * std::pow(upper, g);  // truncated tail
    long evals = 0;
    for (const auto& [lo, hi] : panels) {
        const QuadOutcome part = tanh_sinh(f, lo, hi, panel_config);
        total1 += part.value.z1();
        total2 += part.value.z2();
        err += part.error_estimate;
        evals += part.evaluations;
    }
    if (err > config.abs_tol * 10.0) {
        throw QuadratureFailure("error estimate exceeds the budget");
    }
    return {Bicomplex::idempotent(total1, total2), err, evals};
}

}  // namespace bctk
