#include "bctk/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bctk/trig.hpp"

namespace bctk {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double pole_distance_nonpositive_int(Complex s) {
    const double nearest = std::min(std::round(s.real()), 0.0);
    return std::hypot(s.real() - nearest, s.imag());
}

Complex lanczos_gamma_right(Complex s) {
    // Valid for Re(s) >= 0.5.
    const Complex x = s - 1.0;
    Complex acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        acc += kLanczos[k] / (x + static_cast<double>(k));
    }
    const Complex t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

Complex gamma_unchecked(Complex s) {
    if (s.real() >= 0.5) {
        return lanczos_gamma_right(s);
    }
    // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
    return kPi / (std::sin(kPi * s) * lanczos_gamma_right(1.0 - s));
}

// Cohen-Villegas-Zagier acceleration of the alternating eta series.
Complex eta_cvz(Complex s) {
    // (3 + sqrt 8)^n must stay below the double range; 350 leaves margin.
    const int n =
        std::min(350, 48 + static_cast<int>(2.0 * std::fabs(s.imag())));
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

// Euler-Maclaurin fallback, used only near the zeros of 1 - 2^{1-s} away
// from s = 1 where the eta form is ill-conditioned.
Complex zeta_euler_maclaurin(Complex s) {
    constexpr double kBernoulli[8] = {
        1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};
    constexpr double kN = 24.0;
    Complex sum = 0.0;
    for (int n = 1; n < static_cast<int>(kN); ++n) {
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    }
    const Complex n_minus_s = std::exp(-s * std::log(kN));
    sum += n_minus_s * (0.5 + kN / (s - 1.0));
    Complex pochhammer = s;           // (s)_{2k-1}
    Complex scale = n_minus_s / kN;   // N^{-s-2k+1}
    double factorial = 2.0;           // (2k)!
    for (int k = 1; k <= 8; ++k) {
        sum += kBernoulli[k - 1] / factorial * pochhammer * scale;
        pochhammer *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        scale /= kN * kN;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

Complex zeta_via_eta(Complex s) {
    const Complex denom = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    if (std::abs(denom) < 1e-8) {
        return zeta_euler_maclaurin(s);
    }
    return eta_cvz(s) / denom;
}

Complex zeta_unchecked(Complex s) {
    if (s.real() >= 0.5 || std::abs(s) < 0.5) {
        return zeta_via_eta(s);
    }
    // zeta(s) = 2 (2 pi)^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s).
    return 2.0 * std::pow(2.0 * kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma_unchecked(1.0 - s) * zeta_via_eta(1.0 - s);
}

}  // namespace

Complex complex_gamma(Complex s) {
    const double dist = pole_distance_nonpositive_int(s);
    if (dist <= kIntegerTol) {
        throw PoleError("gamma: pole at a non-positive integer");
    }
    if (dist <= kPoleGuard) {
        throw NearPole("gamma: within the pole guard distance");
    }
    return gamma_unchecked(s);
}

Complex complex_zeta(Complex s) {
    const double dist = std::abs(s - Complex{1.0});
    if (dist <= kIntegerTol) {
        throw PoleError("zeta: pole at s = 1");
    }
    if (dist <= kPoleGuard) {
        throw NearPole("zeta: within the pole guard distance");
    }
    return zeta_unchecked(s);
}

namespace {

bool near_integer(Complex z) {
    return std::hypot(z.real() - std::round(z.real()), z.imag()) <=
           kIntegerTol;
}

bool near_nonpositive_integer(Complex z) {
    return pole_distance_nonpositive_int(z) <= kIntegerTol;
}

}  // namespace

DomainFlags domain_flags(const Bicomplex& w) {
    DomainFlags flags;
    flags.in_U = i_real(w) > 1.0;
    flags.in_Omega = !near_integer(w.z1()) && !near_integer(w.z2());
    flags.in_Omega_minus =
        !near_nonpositive_integer(w.z1()) && !near_nonpositive_integer(w.z2());
    flags.in_one_plus_Bstar = std::abs(w.z1() - Complex{1.0}) > kIntegerTol &&
                              std::abs(w.z2() - Complex{1.0}) > kIntegerTol;
    return flags;
}

SeriesReport zeta_series(const Bicomplex& w, long max_terms) {
    if (max_terms < 1) {
        throw BadParameters("zeta_series: max_terms must be >= 1");
    }
    const double a = i_real(w);
    if (!(a > 1.0)) {
        throw OutOfDomain("zeta_series: requires i_R(w) > 1");
    }
    Complex s1 = 0.0, s2 = 0.0;
    long n = 0;
    double tail = std::numeric_limits<double>::infinity();
    while (n < max_terms) {
        ++n;
        const double log_n = std::log(static_cast<double>(n));
        s1 += std::exp(-w.z1() * log_n);
        s2 += std::exp(-w.z2() * log_n);
        if (n % 64 == 0 || n == max_terms) {
            tail = std::pow(static_cast<double>(n), 1.0 - a) / (a - 1.0);
            const double scale =
                std::max(1.0, std::max(std::abs(s1), std::abs(s2)));
            if (tail <= 1e-16 * scale) break;
        }
    }
    SeriesReport report;
    report.value = Bicomplex::idempotent(s1, s2);
    report.terms_used = n;
    report.subnorm_bound = complex_zeta(Complex{a}).real();
    report.residual_estimate =
        std::pow(static_cast<double>(n), 1.0 - a) / (a - 1.0);
    return report;
}

namespace {

Complex zeta_component(Complex z) {
    const double dist = std::abs(z - Complex{1.0});
    if (dist <= kIntegerTol) {
        throw OnSingularSet("zeta: component on the singular set 1 + e*C");
    }
    if (dist <= kPoleGuard) {
        throw NearPole("zeta: component within the pole guard distance");
    }
    return zeta_unchecked(z);
}

}  // namespace

Bicomplex zeta(const Bicomplex& w) {
    return Bicomplex::idempotent(zeta_component(w.z1()),
                                 zeta_component(w.z2()));
}

namespace {

std::vector<long> primes_up_to(long bound) {
    std::vector<long> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= bound; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return primes;
}

}  // namespace

Bicomplex euler_product(const Bicomplex& w, long prime_bound) {
    if (!(i_real(w) > 1.0)) {
        throw OutOfDomain("euler_product: requires i_R(w) > 1");
    }
    if (prime_bound < 0 || prime_bound > 100000000) {
        throw BadParameters("euler_product: prime bound out of range");
    }
    Complex p1 = 1.0, p2 = 1.0;
    for (long p : primes_up_to(prime_bound)) {
        const double log_p = std::log(static_cast<double>(p));
        p1 *= 1.0 / (1.0 - std::exp(-w.z1() * log_p));
        p2 *= 1.0 / (1.0 - std::exp(-w.z2() * log_p));
    }
    return Bicomplex::idempotent(p1, p2);
}

bool is_trivial_zero(const Bicomplex& w) {
    const auto component_ok = [](Complex z) {
        if (std::fabs(z.imag()) > kIntegerTol) return false;
        const double half = std::round(z.real() / 2.0);
        return half <= -1.0 && std::fabs(z.real() - 2.0 * half) <= kIntegerTol;
    };
    return component_ok(w.z1()) && component_ok(w.z2());
}

Bicomplex gamma_integral(const Bicomplex& w, const QuadConfig& config) {
    if (!(i_real(w) > 0.0)) {
        throw OutOfDomain("gamma_integral: requires Re_j(w) >> 0");
    }
    const Complex e1 = w.z1() - 1.0;
    const Complex e2 = w.z2() - 1.0;
    const Integrand f = [&](double t) -> ComplexPair {
        const double log_t = std::log(t);
        const double decay = std::exp(-t);
        return {decay * std::exp(e1 * log_t), decay * std::exp(e2 * log_t)};
    };
    return integrate_zero_to_inf(f, s_real(w) - 1.0, config).value;
}

Bicomplex gamma(const Bicomplex& w) {
    return Bicomplex::idempotent(complex_gamma(w.z1()),
                                 complex_gamma(w.z2()));
}

Bicomplex weierstrass_gamma(const Bicomplex& w, long n_terms) {
    if (n_terms < 1) {
        throw BadParameters("weierstrass_gamma: n_terms must be >= 1");
    }
    if (!domain_flags(w).in_Omega) {
        throw OutOfDomain("weierstrass_gamma: requires w in Omega");
    }
    const auto component = [n_terms](Complex z) {
        Complex denom = z;
        for (long n = 1; n <= n_terms; ++n) {
            const double inv_n = 1.0 / static_cast<double>(n);
            denom *= (1.0 + z * inv_n) * std::exp(-z * inv_n);
        }
        return std::exp(-kEulerGamma * z) / denom;
    };
    return Bicomplex::idempotent(component(w.z1()), component(w.z2()));
}

MellinCheck mellin_check(const Bicomplex& w, const QuadConfig& config) {
    if (!(i_real(w) > 1.0)) {
        throw OutOfDomain("mellin_check: requires Re_j(w) >> 1");
    }
    MellinCheck check;
    check.lhs = zeta(w) * gamma(w);
    const Complex e1 = w.z1() - 1.0;
    const Complex e2 = w.z2() - 1.0;
    const Integrand f = [&](double t) -> ComplexPair {
        const double log_t = std::log(t);
        // 1 / (e^t - 1), stable for small t.
        const double bose = 1.0 / std::expm1(t);
        return {bose * std::exp(e1 * log_t), bose * std::exp(e2 * log_t)};
    };
    check.rhs = integrate_zero_to_inf(f, s_real(w) - 1.0, config).value;
    check.residual = riesz_subnorm(check.lhs - check.rhs);
    return check;
}

double recurrence_residual(const Bicomplex& w) {
    return riesz_subnorm(gamma(w + Bicomplex(1.0)) - w * gamma(w));
}

double reflection_residual(const Bicomplex& w) {
    const Bicomplex pi_w = Bicomplex(kPi) * w;
    const Bicomplex lhs =
        gamma(Bicomplex(1.0) - w) * gamma(w) * sin(pi_w);
    return riesz_subnorm(lhs - Bicomplex(kPi));
}

double functional_equation_residual(const Bicomplex& w) {
    const Bicomplex one{1.0};
    const Bicomplex lhs = zeta(w);
    const Bicomplex rhs = Bicomplex(2.0) *
                          pow(Bicomplex(2.0 * kPi), w - one) *
                          sin(Bicomplex(kPi / 2.0) * w) * gamma(one - w) *
                          zeta(one - w);
    return riesz_subnorm(lhs - rhs);
}

}  // namespace bctk
