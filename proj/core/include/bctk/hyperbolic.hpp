#pragma once

#include <string>
#include <utility>

#include "bctk/errors.hpp"

namespace bctk {

/// Tolerance used when detecting (hyperbolic) integers.
inline constexpr double kIntegerTol = 1e-9;

/// A hyperbolic (split-complex) number x + jy with j^2 = 1, stored in the
/// idempotent basis e1 = (1+j)/2, e2 = (1-j)/2:
///
///     z = p1*e1 + p2*e2,   p1 = x + y,  p2 = x - y.
///
/// Every ring and lattice operation is componentwise in (p1, p2), which keeps
/// the algebra exact where the inputs are. The Cartesian pair (x, y) is a
/// derived view. Values are immutable; non-finite components are rejected at
/// construction.
class Hyperbolic {
public:
    /// Zero.
    constexpr Hyperbolic() noexcept : p1_(0.0), p2_(0.0) {}

    /// Embeds a real scalar: x -> x*e1 + x*e2.
    Hyperbolic(double real);  // NOLINT(google-explicit-constructor)

    static Hyperbolic idempotent(double p1, double p2);
    static Hyperbolic cartesian(double x, double y);

    /// The unit j = e1 - e2.
    static Hyperbolic j() { return idempotent(1.0, -1.0); }
    static Hyperbolic e1() { return idempotent(1.0, 0.0); }
    static Hyperbolic e2() { return idempotent(0.0, 1.0); }

    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }
    double x() const noexcept { return (p1_ + p2_) / 2.0; }
    double y() const noexcept { return (p1_ - p2_) / 2.0; }

    /// Hyperbolic conjugate x - jy; swaps the idempotent components.
    Hyperbolic conj() const noexcept;

    bool is_zero() const noexcept { return p1_ == 0.0 && p2_ == 0.0; }
    /// True iff z is invertible (both idempotent components nonzero).
    bool is_unit() const noexcept { return p1_ != 0.0 && p2_ != 0.0; }
    bool is_zero_divisor() const noexcept { return !is_zero() && !is_unit(); }

    /// Multiplicative inverse; throws NotInvertible on zero divisors and 0.
    Hyperbolic inverse() const;

    friend Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b);
    friend Hyperbolic operator-(const Hyperbolic& a, const Hyperbolic& b);
    friend Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b);
    friend Hyperbolic operator-(const Hyperbolic& a);
    friend bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return a.p1_ == b.p1_ && a.p2_ == b.p2_;
    }
    friend bool operator!=(const Hyperbolic& a, const Hyperbolic& b) {
        return !(a == b);
    }

private:
    Hyperbolic(double p1, double p2, int) noexcept : p1_(p1), p2_(p2) {}

    double p1_;
    double p2_;
};

/// z * conj(z) = x^2 - y^2 = p1*p2.
double square_modulus(const Hyperbolic& z);

/// Lattice operations (componentwise max / min) and absolute value.
Hyperbolic sup(const Hyperbolic& z, const Hyperbolic& w);
Hyperbolic inf(const Hyperbolic& z, const Hyperbolic& w);
Hyperbolic abs(const Hyperbolic& z);

/// Partial order: z <= w componentwise.
bool leq(const Hyperbolic& z, const Hyperbolic& w);
/// z < w, i.e. w - z in the positive cone and nonzero.
bool lt(const Hyperbolic& z, const Hyperbolic& w);
/// z << w: both components of w - z strictly positive.
bool strictly_less(const Hyperbolic& z, const Hyperbolic& w);
bool is_positive(const Hyperbolic& z);           // z in D+
bool is_strictly_positive(const Hyperbolic& z);  // z >> 0

/// Riesz norm ||z||_R = min{a >= 0 : a*1 >= |z|} = max(|p1|, |p2|).
double riesz_norm(const Hyperbolic& z);

/// Unique positive square root of u in D+. Throws NotPositive otherwise.
Hyperbolic sqrt_positive(const Hyperbolic& u);

/// Componentwise exponential; a bijection from D onto the strictly positive
/// units, preserving conjugation and the lattice operations.
Hyperbolic exp(const Hyperbolic& z);
/// Inverse of exp; requires u >> 0, throws DomainError otherwise.
Hyperbolic log(const Hyperbolic& u);

/// The group of signs S = {1, -1, j, -j} (kernel of |.| on the units).
enum class Sign { plus_one, minus_one, plus_j, minus_j };

Hyperbolic to_hyperbolic(Sign s);
Sign operator*(Sign a, Sign b);
const char* to_string(Sign s);

/// Writes an invertible z as (eps, |z|) with z = eps * |z|.
/// Throws NotInvertible for zero divisors (the sign is not unique there).
std::pair<Sign, Hyperbolic> sign_decompose(const Hyperbolic& z);

/// True iff |z| = eps * z, i.e. z lies in the eps-cone of D.
bool in_cone(const Hyperbolic& z, Sign eps);

/// True iff both idempotent components are integers within kIntegerTol.
bool is_hyperbolic_integer(const Hyperbolic& z);

enum class IntervalKind { closed, open, half_open_left, half_open_right };

/// A hyperbolic interval. Closed sides use <=, open sides use <<.
/// half_open_left is (lo, hi], half_open_right is [lo, hi).
class Interval {
public:
    Interval(Hyperbolic lo, Hyperbolic hi, IntervalKind kind);

    const Hyperbolic& lo() const noexcept { return lo_; }
    const Hyperbolic& hi() const noexcept { return hi_; }
    IntervalKind kind() const noexcept { return kind_; }

    bool contains(const Hyperbolic& z) const;

private:
    Hyperbolic lo_;
    Hyperbolic hi_;
    IntervalKind kind_;
};

/// Display as "x+yj" with shortest round-trip float formatting.
std::string to_string(const Hyperbolic& z);
/// JSON object {"p1": .., "p2": ..}.
std::string to_json(const Hyperbolic& z);
Hyperbolic hyperbolic_from_json(const std::string& text);

}  // namespace bctk
