#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "bctk/hyperbolic.hpp"

namespace bctk {

using Complex = std::complex<double>;

/// A bicomplex number w = a + bi + cj + dk with
///
///     i^2 = k^2 = -1,  j^2 = 1,  ik = ki = j   (hence ij = -k, jk = -i),
///
/// stored through the idempotent components (P1(w), P2(w)) in C x C:
///
///     w = z1*e1 + z2*e2,  z1 = (a+c) + (b-d)i,  z2 = (a-c) + (b+d)i.
///
/// Ring operations are componentwise on (z1, z2); the Cartesian quadruple
/// (a, b, c, d) is a derived view. Values are immutable; non-finite
/// components are rejected at construction.
class Bicomplex {
public:
    constexpr Bicomplex() noexcept : z1_(0.0), z2_(0.0) {}

    /// Embeds a real scalar.
    Bicomplex(double real);  // NOLINT(google-explicit-constructor)
    /// Embeds D = R(j): x + jy has real idempotent components (x+y, x-y).
    Bicomplex(const Hyperbolic& z);  // NOLINT(google-explicit-constructor)

    static Bicomplex idempotent(Complex z1, Complex z2);
    static Bicomplex cartesian(double a, double b, double c, double d);

    static Bicomplex i() { return idempotent({0.0, 1.0}, {0.0, 1.0}); }
    static Bicomplex j() { return idempotent(1.0, -1.0); }
    static Bicomplex k() { return idempotent({0.0, -1.0}, {0.0, 1.0}); }
    static Bicomplex e1() { return idempotent(1.0, 0.0); }
    static Bicomplex e2() { return idempotent(0.0, 1.0); }

    Complex z1() const noexcept { return z1_; }
    Complex z2() const noexcept { return z2_; }

    /// Cartesian view {a, b, c, d}.
    std::array<double, 4> parts() const noexcept;
    double a() const noexcept { return (z1_.real() + z2_.real()) / 2.0; }
    double b() const noexcept { return (z1_.imag() + z2_.imag()) / 2.0; }
    double c() const noexcept { return (z1_.real() - z2_.real()) / 2.0; }
    double d() const noexcept { return (z2_.imag() - z1_.imag()) / 2.0; }

    bool is_zero() const noexcept { return z1_ == 0.0 && z2_ == 0.0; }
    /// True iff w is invertible (both idempotent components nonzero).
    bool is_unit() const noexcept { return z1_ != 0.0 && z2_ != 0.0; }
    bool is_zero_divisor() const noexcept { return !is_zero() && !is_unit(); }

    /// Multiplicative inverse; throws NotInvertible off the units.
    Bicomplex inverse() const;

    friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b);
    friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b);
    friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b);
    friend Bicomplex operator-(const Bicomplex& a);
    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.z1_ == b.z1_ && a.z2_ == b.z2_;
    }
    friend bool operator!=(const Bicomplex& a, const Bicomplex& b) {
        return !(a == b);
    }

private:
    Bicomplex(Complex z1, Complex z2, int) noexcept : z1_(z1), z2_(z2) {}

    Complex z1_;
    Complex z2_;
};

/// The three imaginary units that generate the R(u) subalgebras.
enum class Unit { i, j, k };

/// The permutation i -> k, j -> i, k -> j used by the u-representations.
Unit permuted(Unit u);
Bicomplex unit_value(Unit u);
const char* to_string(Unit u);

struct UParts {
    Bicomplex re;  // Re_u(w), in R(u)
    Bicomplex im;  // Im_u(w), in R(u)
};

/// Splits w = Re_u(w) + permuted(u) * Im_u(w) with both parts in R(u).
UParts decompose(const Bicomplex& w, Unit u);

/// Conjugation with respect to u: Re_u(w) - permuted(u) * Im_u(w).
Bicomplex conj(const Bicomplex& w, Unit u);

/// Hyperbolic-valued parts of w = Re_j(w) + i Im_j(w).
Hyperbolic re_j(const Bicomplex& w);
Hyperbolic im_j(const Bicomplex& w);

/// j-modulus |w|_j = sqrt(w * conj_j(w)) = |z1| e1 + |z2| e2, in D+.
Hyperbolic j_modulus(const Bicomplex& w);

/// Euclidean norm sqrt(a^2+b^2+c^2+d^2) = sqrt(Re(|w|_j^2)).
double euclidean_norm(const Bicomplex& w);

/// Riesz subnorm of the j-modulus: ||w||_j = max(|z1|, |z2|).
double riesz_subnorm(const Bicomplex& w);

/// Max / min of the real parts of the idempotent components.
double s_real(const Bicomplex& w);
double i_real(const Bicomplex& w);

/// Componentwise complex exponential; group homomorphism (B,+) -> (B*,.)
/// with kernel 2*pi*i*Z (Z the hyperbolic integers).
Bicomplex exp(const Bicomplex& w);

/// Principal D-argument, the unique phi in (-pi, pi]_D with
/// w = |w|_j (cos phi + i sin phi). Throws NotInvertible off the units.
Hyperbolic arg_principal(const Bicomplex& w);

/// Principal logarithm ln|w|_j + i Arg_D(w). Throws NotInvertible.
Bicomplex log(const Bicomplex& w);

/// Bicomplex exponentiation w^alpha = exp(alpha * Log w). Throws NotInvertible.
Bicomplex pow(const Bicomplex& w, const Bicomplex& alpha);

/// Inner product <a,b>_j = Re_j(a * conj_j(b)).
Hyperbolic inner_product_j(const Bicomplex& a, const Bicomplex& b);

/// D-angle between invertible a, b: arccos(<a,b>_j / (|a|_j |b|_j)), in [0,pi]_D.
Hyperbolic d_angle(const Bicomplex& a, const Bicomplex& b);

/// If Arg_D(w) = (1-eps)/2 * pi for some sign eps (within tol), returns eps.
std::optional<Sign> cone_classify(const Bicomplex& w, double tol = 1e-12);

struct Polar {
    Bicomplex unit;      // upsilon, always on the unit D-sphere
    Hyperbolic modulus;  // |w|_j
};

/// w = unit * modulus with conj_j(unit) * w = modulus. For zero divisors the
/// null component of the unit is set to 1. Throws ZeroInput at 0.
Polar polar_decompose(const Bicomplex& w);

/// Display formats.
std::string to_string_cartesian(const Bicomplex& w);   // a+bi+cj+dk
std::string to_string_idempotent(const Bicomplex& w);  // [z1, z2]e
/// JSON object {"z1": [re, im], "z2": [re, im]}.
std::string to_json(const Bicomplex& w);
Bicomplex bicomplex_from_json(const std::string& text);

}  // namespace bctk
