#include "bctk/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "bctk/detail/format_util.hpp"
#include "json.hpp"

namespace bctk {

namespace {

// Exclusion margin around the integer lattice for the functional-equation
// sweep; inside it sin(pi w / 2), Gamma(1 - w) or zeta degenerate.
constexpr double kAdmissibleMargin = 0.05;

void finish(SweepSummary& summary) {
    double total = 0.0;
    for (const SweepRow& row : summary.rows) {
        total += row.residual;
        summary.max_residual = std::max(summary.max_residual, row.residual);
    }
    summary.evaluated = summary.rows.size();
    summary.mean_residual =
        summary.rows.empty() ? 0.0 : total / static_cast<double>(summary.rows.size());
}

template <typename Fn>
SweepSummary grid_sweep(std::string name, const GridSpec& grid, Fn&& residual) {
    SweepSummary summary;
    summary.name = std::move(name);
    for (int r = 0; r < grid.steps; ++r) {
        for (int c = 0; c < grid.steps; ++c) {
            const Bicomplex omega =
                Bicomplex::idempotent(grid.sample(r), grid.sample(c));
            try {
                summary.rows.push_back({omega, residual(omega)});
            } catch (const Error&) {
                ++summary.skipped;
            }
        }
    }
    finish(summary);
    return summary;
}

bool component_admissible(Complex z) {
    if (std::fabs(z.imag()) >= kAdmissibleMargin) return true;
    return std::fabs(z.real() - std::round(z.real())) >= kAdmissibleMargin;
}

}  // namespace

Complex GridSpec::sample(int t) const {
    const double frac =
        steps > 1 ? static_cast<double>(t) / (steps - 1) : 0.0;
    return {re_lo + frac * (re_hi - re_lo), im_lo + frac * (im_hi - im_lo)};
}

SweepSummary sweep_recurrence(const GridSpec& grid) {
    return grid_sweep("gamma_recurrence", grid, recurrence_residual);
}

SweepSummary sweep_reflection(const GridSpec& grid) {
    return grid_sweep("euler_reflection", grid, [](const Bicomplex& w) {
        if (!domain_flags(w).in_Omega) {
            throw OutOfDomain("reflection sweep: requires w in Omega");
        }
        return reflection_residual(w);
    });
}

SweepSummary sweep_functional_equation(std::size_t count, unsigned seed) {
    SweepSummary summary;
    summary.name = "riemann_functional_equation";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-2.5, 3.5);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    while (summary.rows.size() < count) {
        const Complex z1{re(rng), im(rng)};
        const Complex z2{re(rng), im(rng)};
        if (!component_admissible(z1) || !component_admissible(z2)) {
            ++summary.skipped;
            continue;
        }
        const Bicomplex omega = Bicomplex::idempotent(z1, z2);
        try {
            summary.rows.push_back({omega, functional_equation_residual(omega)});
        } catch (const Error&) {
            ++summary.skipped;
        }
    }
    finish(summary);
    return summary;
}

SweepSummary sweep_mellin(const std::vector<Bicomplex>& points,
                          const QuadConfig& config) {
    std::vector<Bicomplex> targets = points;
    if (targets.empty()) {
        targets = {Bicomplex(2.0), Bicomplex(3.0), Bicomplex(4.0),
                   Bicomplex(Hyperbolic::idempotent(3.0, 2.0)),
                   Bicomplex(2.0) + Bicomplex(0.5) * Bicomplex::i() *
                                        Bicomplex(Hyperbolic::j())};
    }
    SweepSummary summary;
    summary.name = "mellin_integral";
    for (const Bicomplex& omega : targets) {
        try {
            summary.rows.push_back({omega, mellin_check(omega, config).residual});
        } catch (const Error&) {
            ++summary.skipped;
        }
    }
    finish(summary);
    return summary;
}

SweepSummary sweep_series_bound(std::size_t count, long max_terms,
                                unsigned seed) {
    SweepSummary summary;
    summary.name = "series_subnorm_bound";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(1.1, 5.0);
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    std::uniform_real_distribution<double> spread(0.0, 2.0);
    for (std::size_t k = 0; k < count; ++k) {
        const double base = re(rng);
        const Complex z1{base, im(rng)};
        const Complex z2{std::min(base + spread(rng), 5.0), im(rng)};
        const Bicomplex omega = Bicomplex::idempotent(z1, z2);
        const SeriesReport report = zeta_series(omega, max_terms);
        const double overshoot =
            riesz_subnorm(report.value) - report.subnorm_bound;
        summary.rows.push_back({omega, std::max(overshoot, 0.0)});
    }
    finish(summary);
    return summary;
}

void write_csv(const SweepSummary& summary, std::ostream& out) {
    out << "omega_z1_re,omega_z1_im,omega_z2_re,omega_z2_im,residual\n";
    for (const SweepRow& row : summary.rows) {
        out << detail::shortest(row.omega.z1().real()) << ','
            << detail::shortest(row.omega.z1().imag()) << ','
            << detail::shortest(row.omega.z2().real()) << ','
            << detail::shortest(row.omega.z2().imag()) << ','
            << detail::shortest(row.residual) << '\n';
    }
}

std::string summary_json(const SweepSummary& summary) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["name"] = summary.name;
    j["max_residual"] = summary.max_residual;
    j["mean_residual"] = summary.mean_residual;
    j["evaluated"] = summary.evaluated;
    j["skipped"] = summary.skipped;
    return j.dump();
}

}  // namespace bctk
