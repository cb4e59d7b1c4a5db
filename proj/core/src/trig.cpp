#include "bctk/trig.hpp"

#include <cmath>
#include <numbers>

namespace bctk {

Hyperbolic cos(const Hyperbolic& z) {
    return Hyperbolic::idempotent(std::cos(z.p1()), std::cos(z.p2()));
}

Hyperbolic sin(const Hyperbolic& z) {
    return Hyperbolic::idempotent(std::sin(z.p1()), std::sin(z.p2()));
}

namespace {

double checked_inverse_input(double v, const char* what) {
    if (v < -1.0 || v > 1.0) {
        throw DomainError(std::string(what) + ": input outside [-1,1]_D");
    }
    return v;
}

}  // namespace

Hyperbolic acos(const Hyperbolic& u) {
    return Hyperbolic::idempotent(
        std::acos(checked_inverse_input(u.p1(), "acos")),
        std::acos(checked_inverse_input(u.p2(), "acos")));
}

Hyperbolic asin(const Hyperbolic& u) {
    return Hyperbolic::idempotent(
        std::asin(checked_inverse_input(u.p1(), "asin")),
        std::asin(checked_inverse_input(u.p2(), "asin")));
}

Bicomplex sin(const Bicomplex& w) {
    return Bicomplex::idempotent(std::sin(w.z1()), std::sin(w.z2()));
}

Bicomplex cos(const Bicomplex& w) {
    return Bicomplex::idempotent(std::cos(w.z1()), std::cos(w.z2()));
}

TrigForm to_trig_form(const Bicomplex& w) {
    if (w.is_zero()) {
        throw ZeroInput("to_trig_form: zero input");
    }
    if (w.is_unit()) {
        return {j_modulus(w), arg_principal(w)};
    }
    // Zero divisor: a real argument taken from the nonzero component works
    // for both (the null component stays null whatever the angle).
    const Complex nonzero = (w.z1() != 0.0) ? w.z1() : w.z2();
    double phi = std::arg(nonzero);
    if (phi == -std::numbers::pi) phi = std::numbers::pi;
    return {j_modulus(w), Hyperbolic(phi)};
}

Bicomplex from_trig_form(const TrigForm& form) {
    const Hyperbolic c = cos(form.argument);
    const Hyperbolic s = sin(form.argument);
    return Bicomplex::idempotent(
        form.modulus.p1() * Complex{c.p1(), s.p1()},
        form.modulus.p2() * Complex{c.p2(), s.p2()});
}

}  // namespace bctk
