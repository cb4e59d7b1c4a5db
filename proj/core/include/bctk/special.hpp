#pragma once

#include "bctk/quadrature.hpp"

namespace bctk {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// Guard distance: evaluations closer than this to a pole throw NearPole.
inline constexpr double kPoleGuard = 1e-6;

/// Scalar gamma backend: Lanczos approximation (g = 7, 9 coefficients) with
/// reflection for Re(s) < 0.5. Throws PoleError at non-positive integers and
/// NearPole within kPoleGuard of one.
Complex complex_gamma(Complex s);

/// Scalar zeta backend: eta series with Cohen-Villegas-Zagier acceleration
/// for Re(s) >= 0.5 (and on the disk |s| < 0.5), the functional equation
/// elsewhere. Throws PoleError at s = 1 and NearPole within kPoleGuard.
Complex complex_zeta(Complex s);

struct DomainFlags {
    bool in_U = false;              // i_R(w) > 1
    bool in_Omega = false;          // no idempotent component an integer
    bool in_Omega_minus = false;    // none a non-positive integer
    bool in_one_plus_Bstar = false; // w - 1 invertible
};

/// Membership of the zeta/gamma domains, with kIntegerTol play.
DomainFlags domain_flags(const Bicomplex& w);

struct SeriesReport {
    Bicomplex value;
    long terms_used = 0;
    double subnorm_bound = 0.0;      // zeta(i_R(w)), the Riesz-subnorm bound
    double residual_estimate = 0.0;  // integral bound on the dropped tail
};

/// Partial sum of sum_n n^{-w} on U = {i_R > 1}. Each term has
/// ||n^{-w}||_j = n^{-i_R(w)}, which prices the tail. Throws OutOfDomain.
SeriesReport zeta_series(const Bicomplex& w, long max_terms);

/// Analytic continuation zeta(P1)e1 + zeta(P2)e2 on 1 + B*. Throws
/// OnSingularSet when a component equals 1 (NearPole just off it).
Bicomplex zeta(const Bicomplex& w);

/// prod_{p <= bound} (1 - p^{-w})^{-1} over primes. Throws OutOfDomain off U.
Bicomplex euler_product(const Bicomplex& w, long prime_bound);

/// True iff w = -2h for a hyperbolic integer h >= 1 (within kIntegerTol).
bool is_trivial_zero(const Bicomplex& w);

/// Gamma as the absolutely convergent integral of e^{-t} t^{w-1} on
/// {i_R > 0}, by componentwise quadrature. Throws OutOfDomain off the
/// domain and QuadratureFailure on a missed budget.
Bicomplex gamma_integral(const Bicomplex& w, const QuadConfig& config = {});

/// Analytic continuation Gamma(P1)e1 + Gamma(P2)e2 off the non-positive
/// hyperbolic integers. Throws PoleError / NearPole via the backend.
Bicomplex gamma(const Bicomplex& w);

/// Weierstrass product with n_terms factors; O(1/n_terms) error.
/// Requires w in Omega; throws OutOfDomain.
Bicomplex weierstrass_gamma(const Bicomplex& w, long n_terms);

struct MellinCheck {
    Bicomplex lhs;    // zeta(w) * gamma(w)
    Bicomplex rhs;    // integral of t^{w-1} / (e^t - 1)
    double residual;  // ||lhs - rhs||_j
};

/// Mellin integral identity on {i_R > 1}. Throws OutOfDomain.
MellinCheck mellin_check(const Bicomplex& w, const QuadConfig& config = {});

/// Residuals (Riesz subnorm of lhs - rhs) of the three functional
/// identities; domain errors from the constituents propagate.
double recurrence_residual(const Bicomplex& w);  // Gamma(1+w) = w Gamma(w)
double reflection_residual(const Bicomplex& w);  // G(1-w)G(w) sin(pi w) = pi
double functional_equation_residual(const Bicomplex& w);
// zeta(w) = 2 (2 pi)^{w-1} sin(pi w / 2) Gamma(1-w) zeta(1-w)

}  // namespace bctk
