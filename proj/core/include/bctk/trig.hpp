#pragma once

#include "bctk/bicomplex.hpp"

namespace bctk {

/// Componentwise circular functions on D.
Hyperbolic cos(const Hyperbolic& z);
Hyperbolic sin(const Hyperbolic& z);

/// Inverses on [-1,1]_D with values in [0,pi]_D resp. [-pi/2,pi/2]_D.
/// Throw DomainError outside [-1,1]_D.
Hyperbolic acos(const Hyperbolic& u);
Hyperbolic asin(const Hyperbolic& u);

/// Componentwise complex circular functions on B.
Bicomplex sin(const Bicomplex& w);
Bicomplex cos(const Bicomplex& w);

/// D-trigonometric form w = modulus * (cos(argument) + i sin(argument)).
struct TrigForm {
    Hyperbolic modulus;   // in D+
    Hyperbolic argument;  // in (-pi, pi]_D for invertible sources
};

/// For invertible w the argument is Arg_D(w); for a zero divisor it is the
/// real argument of the nonzero component. Throws ZeroInput at 0.
TrigForm to_trig_form(const Bicomplex& w);
Bicomplex from_trig_form(const TrigForm& form);

}  // namespace bctk
