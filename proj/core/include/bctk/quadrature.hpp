#pragma once

#include <array>
#include <functional>

#include "bctk/bicomplex.hpp"

namespace bctk {

struct QuadConfig {
    double abs_tol = 1e-10;  // error budget for the whole integral
    int max_levels = 10;     // tanh-sinh refinement levels per panel
};

struct QuadOutcome {
    Bicomplex value;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Integrand evaluated on both idempotent components at once. Raw complex
/// pairs keep intermediate overflow out of the checked Bicomplex constructor.
using ComplexPair = std::array<Complex, 2>;
using Integrand = std::function<ComplexPair(double)>;

/// tanh-sinh rule on (a, b); handles integrable endpoint singularities.
QuadOutcome tanh_sinh(const Integrand& f, double a, double b,
                      const QuadConfig& config);

/// Integral over (0, inf) of an integrand decaying like e^{-t} t^growth:
/// tanh-sinh on (0,1], dyadic tanh-sinh panels on [1,T], tail truncated at T
/// with e^{-T} T^growth below the budget. Throws QuadratureFailure when the
/// estimate misses the budget or the integrand produces non-finite values.
QuadOutcome integrate_zero_to_inf(const Integrand& f, double growth_exponent,
                                  const QuadConfig& config);

}  // namespace bctk
