#include "bctk/dnorm.hpp"

#include <cmath>

namespace bctk {

namespace {

// Slack for inequality checks: the evaluators round, so an exact >= can be
// off by a few ulps of the magnitudes involved.
bool leq_slack(const Hyperbolic& a, const Hyperbolic& b, double scale) {
    const double slack = 1e-12 * std::max(1.0, scale);
    return a.p1() <= b.p1() + slack && a.p2() <= b.p2() + slack;
}

}  // namespace

DNorm dnorm_j_modulus() {
    return {[](const Bicomplex& w) { return j_modulus(w); }, "j_modulus"};
}

DNorm dnorm_euclidean() {
    return {[](const Bicomplex& w) { return Hyperbolic(euclidean_norm(w)); },
            "euclidean"};
}

std::function<double(const Bicomplex&)> subnorm_of(const DNorm& norm) {
    auto eval = norm.eval;
    return [eval](const Bicomplex& w) { return riesz_norm(eval(w)); };
}

AxiomReport check_dnorm_axioms(const DNorm& norm,
                               std::span<const Bicomplex> samples,
                               std::span<const double> scalars) {
    AxiomReport report;
    auto violate = [&](std::string axiom, const Bicomplex& w,
                       const Bicomplex& w2, double scalar,
                       std::string detail) {
        report.violations.push_back(
            {std::move(axiom), w, w2, scalar, std::move(detail)});
    };

    for (const Bicomplex& w : samples) {
        const Hyperbolic value = norm.eval(w);
        ++report.checks;
        if (!is_positive(value)) {
            violate("positivity", w, {}, 0.0, "N(w) has a negative component");
        }
        if (value.is_zero() && !w.is_zero()) {
            violate("definiteness", w, {}, 0.0, "N(w) = 0 with w != 0");
        }
        for (double lambda : scalars) {
            ++report.checks;
            const Hyperbolic lhs = norm.eval(Bicomplex(lambda) * w);
            const Hyperbolic rhs = Hyperbolic(std::fabs(lambda)) * value;
            if (riesz_norm(lhs - rhs) >
                1e-12 * std::max(1.0, riesz_norm(rhs))) {
                violate("homogeneity", w, {}, lambda,
                        "N(lambda w) != |lambda| N(w)");
            }
        }
    }
    for (const Bicomplex& w : samples) {
        const Hyperbolic nw = norm.eval(w);
        for (const Bicomplex& p : samples) {
            const Hyperbolic np = norm.eval(p);
            const double scale = riesz_norm(nw) + riesz_norm(np);
            ++report.checks;
            if (!leq_slack(norm.eval(w + p), nw + np, scale)) {
                violate("triangle", w, p, 0.0, "N(w+p) > N(w)+N(p)");
            }
            ++report.checks;
            if (!leq_slack(abs(nw - np), norm.eval(w - p), scale)) {
                violate("second_triangle", w, p, 0.0,
                        "|N(w)-N(p)| > N(w-p)");
            }
        }
    }
    return report;
}

IntegralCheck is_integral_dnorm(const DNorm& norm,
                                std::span<const Bicomplex> samples) {
    for (const Bicomplex& w : samples) {
        if (w.is_zero()) continue;
        if (square_modulus(norm.eval(w)) == 0.0) {
            return {false, w};
        }
    }
    return {true, std::nullopt};
}

DBall::DBall(Bicomplex center, Hyperbolic radius, DNorm norm, BallKind kind)
    : center_(center), radius_(radius), norm_(std::move(norm)), kind_(kind) {
    if (!is_strictly_positive(radius_)) {
        throw BadParameters("DBall: radius must be >> 0");
    }
    if (!norm_.eval) {
        throw BadParameters("DBall: norm evaluator is empty");
    }
}

bool DBall::contains(const Bicomplex& w) const {
    const Hyperbolic dist = norm_.eval(w - center_);
    return kind_ == BallKind::open ? strictly_less(dist, radius_)
                                   : leq(dist, radius_);
}

}  // namespace bctk
