// Test-only oracles, independent of the library implementation paths:
//  - Cart2/Cart4: hyperbolic and bicomplex arithmetic done in Cartesian
//    coordinates straight from the multiplication table.
//  - zeta_em: Euler-Maclaurin zeta evaluation.
//  - gamma_gl: Gauss-Legendre quadrature of the gamma integral with a
//    recurrence lift, on geometrically graded panels.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "bctk/bicomplex.hpp"

namespace oracle {

using bctk::Bicomplex;
using bctk::Complex;
using bctk::Hyperbolic;

// ---------------------------------------------------------------- Cart2

struct Cart2 {
    double x = 0.0;
    double y = 0.0;
};

inline Cart2 from(const Hyperbolic& z) { return {z.x(), z.y()}; }
inline Hyperbolic to_hyperbolic(const Cart2& c) {
    return Hyperbolic::cartesian(c.x, c.y);
}
inline Cart2 add(const Cart2& a, const Cart2& b) {
    return {a.x + b.x, a.y + b.y};
}
inline Cart2 mul(const Cart2& a, const Cart2& b) {
    // (x1 + j y1)(x2 + j y2) with j^2 = 1.
    return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
}

// ---------------------------------------------------------------- Cart4

struct Cart4 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

inline Cart4 from(const Bicomplex& w) {
    const auto p = w.parts();
    return {p[0], p[1], p[2], p[3]};
}
inline Bicomplex to_bicomplex(const Cart4& u) {
    return Bicomplex::cartesian(u.a, u.b, u.c, u.d);
}
inline Cart4 add(const Cart4& u, const Cart4& v) {
    return {u.a + v.a, u.b + v.b, u.c + v.c, u.d + v.d};
}
inline Cart4 sub(const Cart4& u, const Cart4& v) {
    return {u.a - v.a, u.b - v.b, u.c - v.c, u.d - v.d};
}
// Multiplication table: i^2 = k^2 = -1, j^2 = 1, ik = j, ij = -k, jk = -i.
inline Cart4 mul(const Cart4& u, const Cart4& v) {
    return {u.a * v.a - u.b * v.b + u.c * v.c - u.d * v.d,
            u.a * v.b + u.b * v.a - u.c * v.d - u.d * v.c,
            u.a * v.c + u.c * v.a + u.b * v.d + u.d * v.b,
            u.a * v.d + u.d * v.a - u.b * v.c - u.c * v.b};
}
// Conjugations as Cartesian sign flips.
inline Cart4 conj_i(const Cart4& u) { return {u.a, u.b, -u.c, -u.d}; }
inline Cart4 conj_j(const Cart4& u) { return {u.a, -u.b, u.c, -u.d}; }
inline Cart4 conj_k(const Cart4& u) { return {u.a, -u.b, -u.c, u.d}; }

// ---------------------------------------------------------------- RNG

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    Hyperbolic hyperbolic(double lo = -10.0, double hi = 10.0) {
        return Hyperbolic::idempotent(uniform(lo, hi), uniform(lo, hi));
    }
    Complex complex_in(double lo = -10.0, double hi = 10.0) {
        return {uniform(lo, hi), uniform(lo, hi)};
    }
    Bicomplex bicomplex(double lo = -10.0, double hi = 10.0) {
        return Bicomplex::idempotent(complex_in(lo, hi), complex_in(lo, hi));
    }
    Bicomplex unit_bicomplex(double lo = -10.0, double hi = 10.0) {
        for (;;) {
            const Bicomplex w = bicomplex(lo, hi);
            if (std::abs(w.z1()) > 1e-3 && std::abs(w.z2()) > 1e-3) return w;
        }
    }
    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// ---------------------------------------------------------------- close()

inline bool close(double a, double b, double atol = 1e-12,
                  double rtol = 1e-10) {
    return std::fabs(a - b) <= atol + rtol * std::max(std::fabs(a),
                                                      std::fabs(b));
}
inline bool close(Complex a, Complex b, double atol = 1e-12,
                  double rtol = 1e-10) {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a),
                                                     std::abs(b));
}
inline bool close(const Hyperbolic& a, const Hyperbolic& b,
                  double atol = 1e-12, double rtol = 1e-10) {
    return close(a.p1(), b.p1(), atol, rtol) &&
           close(a.p2(), b.p2(), atol, rtol);
}
inline bool close(const Bicomplex& a, const Bicomplex& b,
                  double atol = 1e-12, double rtol = 1e-10) {
    return close(a.z1(), b.z1(), atol, rtol) &&
           close(a.z2(), b.z2(), atol, rtol);
}

// ------------------------------------------------------- zeta (E-M form)

// Euler-Maclaurin with N = 36 and Bernoulli terms through B_20. Good to
// ~1e-12 relative for Re(s) > -9, |Im(s)| <= 20, away from s = 1.
inline Complex zeta_em(Complex s) {
    constexpr double kB[10] = {1.0 / 6.0,
                               -1.0 / 30.0,
                               1.0 / 42.0,
                               -1.0 / 30.0,
                               5.0 / 66.0,
                               -691.0 / 2730.0,
                               7.0 / 6.0,
                               -3617.0 / 510.0,
                               43867.0 / 798.0,
                               -174611.0 / 330.0};
    const double N = 36.0;
    Complex sum = 0.0;
    for (int n = 1; n < 36; ++n) {
        sum += std::pow(static_cast<double>(n), -s);
    }
    const Complex Ns = std::pow(N, -s);
    sum += Ns * 0.5;
    sum += Ns * N / (s - 1.0);
    Complex poch = s;
    Complex scale = Ns / N;
    double fact = 2.0;
    for (int k = 1; k <= 10; ++k) {
        sum += kB[k - 1] / fact * poch * scale;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        scale /= N * N;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

// ------------------------------------------------------ gamma (GL form)

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gl_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
            }
            dp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = -p0 / dp;
            t += dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// Gamma for Re(s) >= 0.4 via graded-panel GL quadrature on (0, 90].
inline Complex gamma_gl_right(Complex s) {
    static std::vector<double> x, w;
    if (x.empty()) gl_rule(24, x, w);
    Complex total = 0.0;
    double hi = 90.0;
    for (int panel = 0; panel < 130; ++panel) {
        const double lo = hi / 2.0;
        const double mid = (lo + hi) / 2.0, half = (hi - lo) / 2.0;
        for (std::size_t q = 0; q < x.size(); ++q) {
            const double t = mid + half * x[q];
            total += w[q] * half * std::exp(-t) *
                     std::exp((s - 1.0) * std::log(t));
        }
        hi = lo;
    }
    return total;
}

// Full-plane gamma oracle: recurrence lift below Re = 0.4.
inline Complex gamma_gl(Complex s) {
    Complex factor = 1.0;
    while (s.real() < 0.4) {
        factor *= s;
        s += 1.0;
    }
    return gamma_gl_right(s) / factor;
}

}  // namespace oracle
