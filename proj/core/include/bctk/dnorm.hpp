#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bctk/bicomplex.hpp"

namespace bctk {

/// A hyperbolic-valued norm on B as an evaluable object. The evaluator must
/// be pure (no side effects, no state) and return values in D+; the axioms
/// are validated by sampling, not by proof.
struct DNorm {
    std::function<Hyperbolic(const Bicomplex&)> eval;
    std::string label;
};

/// The j-modulus |.|_j, the canonical multiplicative D-norm.
DNorm dnorm_j_modulus();

/// The integral D-norm ||.|| * (e1 + e2) built from the Euclidean norm.
DNorm dnorm_euclidean();

/// Riesz subnorm of N: w -> min{a >= 0 : a >= N(w)} = ||N(w)||_R, a real norm.
std::function<double(const Bicomplex&)> subnorm_of(const DNorm& norm);

struct AxiomViolation {
    std::string axiom;    // "definiteness", "homogeneity", "triangle",
                          // "second_triangle", "positivity"
    Bicomplex witness;    // offending sample
    Bicomplex witness2;   // second sample for the pair axioms
    double scalar;        // scalar for the homogeneity axiom
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
};

/// Verifies definiteness, real absolute homogeneity, the triangle inequality
/// and the second triangle inequality |N(w) - N(p)| <= N(w - p) on every
/// sample (pairs included). Numerical slack: rounding-level only.
AxiomReport check_dnorm_axioms(const DNorm& norm,
                               std::span<const Bicomplex> samples,
                               std::span<const double> scalars);

struct IntegralCheck {
    bool integral = true;
    std::optional<Bicomplex> witness;  // sample with ||N(w)||_h = 0, w != 0
};

/// Sampled check that ||N(w)||_h = 0 implies w = 0.
IntegralCheck is_integral_dnorm(const DNorm& norm,
                                std::span<const Bicomplex> samples);

enum class BallKind { open, closed };

/// A D-ball for a D-norm; the radius must satisfy radius >> 0.
class DBall {
public:
    DBall(Bicomplex center, Hyperbolic radius, DNorm norm, BallKind kind);

    const Bicomplex& center() const noexcept { return center_; }
    const Hyperbolic& radius() const noexcept { return radius_; }
    BallKind kind() const noexcept { return kind_; }

    /// open: N(w - center) << radius;  closed: N(w - center) <= radius.
    bool contains(const Bicomplex& w) const;

private:
    Bicomplex center_;
    Hyperbolic radius_;
    DNorm norm_;
    BallKind kind_;
};

}  // namespace bctk
