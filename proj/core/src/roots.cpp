#include "bctk/roots.hpp"

#include <cmath>
#include <numbers>

namespace bctk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex root_component(double magnitude, double argument, int h, int n) {
    const double r = std::pow(magnitude, 1.0 / n);
    return std::polar(r, (kTwoPi * h + argument) / n);
}

double principal_arg(Complex z) {
    double a = std::arg(z);
    if (a == -std::numbers::pi) a = std::numbers::pi;
    return a;
}

}  // namespace

std::vector<Bicomplex> nth_roots(const Bicomplex& w, int n) {
    if (n < 1) {
        throw BadParameters("nth_roots: n must be >= 1");
    }
    if (w.is_zero()) {
        return {Bicomplex()};
    }
    std::vector<Bicomplex> roots;
    if (w.is_unit()) {
        const double m1 = std::abs(w.z1()), m2 = std::abs(w.z2());
        const double a1 = principal_arg(w.z1()), a2 = principal_arg(w.z2());
        roots.reserve(static_cast<std::size_t>(n) * n);
        for (int h1 = 0; h1 < n; ++h1) {
            for (int h2 = 0; h2 < n; ++h2) {
                roots.push_back(Bicomplex::idempotent(
                    root_component(m1, a1, h1, n),
                    root_component(m2, a2, h2, n)));
            }
        }
        return roots;
    }
    // Zero divisor: the null component has only the null root.
    const bool first_nonzero = w.z1() != 0.0;
    const Complex z = first_nonzero ? w.z1() : w.z2();
    const double m = std::abs(z), a = principal_arg(z);
    roots.reserve(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
        const Complex comp = root_component(m, a, h, n);
        roots.push_back(first_nonzero ? Bicomplex::idempotent(comp, 0.0)
                                      : Bicomplex::idempotent(0.0, comp));
    }
    return roots;
}

std::vector<Bicomplex> roots_of_unity(int n) {
    if (n < 1) {
        throw BadParameters("roots_of_unity: n must be >= 1");
    }
    std::vector<Bicomplex> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
            out.push_back(Bicomplex::idempotent(
                std::polar(1.0, kTwoPi * h1 / n),
                std::polar(1.0, kTwoPi * h2 / n)));
        }
    }
    return out;
}

bool on_unit_dsphere(const Bicomplex& w, double tol) {
    if (tol < 0.0) {
        throw BadParameters("on_unit_dsphere: negative tolerance");
    }
    return riesz_norm(j_modulus(w) - Hyperbolic(1.0)) <= tol;
}

TorusAngles torus_coordinates(const Bicomplex& w, double tol) {
    if (!on_unit_dsphere(w, tol)) {
        throw NotOnSphere("torus_coordinates: |w|_j != 1");
    }
    const auto wrap = [](double arg) {
        double t = std::fmod(arg, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        if (t == kTwoPi) t = 0.0;
        return t;
    };
    return {wrap(std::arg(w.z1())), wrap(std::arg(w.z2()))};
}

}  // namespace bctk
