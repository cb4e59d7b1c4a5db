#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bctk/special.hpp"

namespace bctk {

/// Component grid for the identity sweeps: the idempotent component of index
/// t walks the diagonal of [re_lo, re_hi] x [im_lo, im_hi] in `steps` steps;
/// point (r, c) of the sweep is z1 = sample(r), z2 = sample(c).
struct GridSpec {
    int steps = 20;
    double re_lo = -2.5;
    double re_hi = 4.0;
    double im_lo = -3.0;
    double im_hi = 3.0;

    Complex sample(int t) const;
};

struct SweepRow {
    Bicomplex omega;
    double residual = 0.0;
};

struct SweepSummary {
    std::string name;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;  // points refused by domain / pole guards
    std::vector<SweepRow> rows;
};

/// Gamma recurrence Gamma(1+w) = w Gamma(w) over the grid.
SweepSummary sweep_recurrence(const GridSpec& grid = {});

/// Reflection Gamma(1-w) Gamma(w) sin(pi w) = pi over the grid,
/// restricted to Omega.
SweepSummary sweep_reflection(const GridSpec& grid = {});

/// Functional equation over `count` seeded random admissible points
/// (components clear of the integer exclusion margin).
SweepSummary sweep_functional_equation(std::size_t count = 100,
                                       unsigned seed = 20210901);

/// Mellin identity at the given points (defaults used when empty).
SweepSummary sweep_mellin(const std::vector<Bicomplex>& points = {},
                          const QuadConfig& config = {});

/// Partial-sum subnorm bound: residual is the overshoot
/// ||sum_{n<=N} n^{-w}||_j - zeta(i_R(w)), clipped at 0.
SweepSummary sweep_series_bound(std::size_t count = 200,
                                long max_terms = 100000,
                                unsigned seed = 20210902);

/// CSV rows: omega_z1_re, omega_z1_im, omega_z2_re, omega_z2_im, residual.
void write_csv(const SweepSummary& summary, std::ostream& out);

/// JSON summary with a schema_version field (max/mean residual, counts).
std::string summary_json(const SweepSummary& summary);

}  // namespace bctk
