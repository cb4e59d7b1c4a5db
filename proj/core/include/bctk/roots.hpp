#pragma once

#include <vector>

#include "bctk/bicomplex.hpp"

namespace bctk {

/// All nth roots of w. An invertible w has n^2 roots, a zero divisor has n,
/// and 0 has the single root 0. Enumeration is lexicographic in the
/// hyperbolic-integer index (h1, h2).
std::vector<Bicomplex> nth_roots(const Bicomplex& w, int n);

/// The group U_n of the n^2 bicomplex nth roots of unity,
/// e^{2 pi i h / n} for hyperbolic integers 0 <= h <= n-1, lexicographic.
std::vector<Bicomplex> roots_of_unity(int n);

/// True iff || |w|_j - 1 ||_R <= tol.
bool on_unit_dsphere(const Bicomplex& w, double tol);

struct TorusAngles {
    double theta1;  // in [0, 2*pi)
    double theta2;  // in [0, 2*pi)
};

/// Inverse of z -> e^{i(theta1 e1 + theta2 e2)} on the unit D-sphere.
/// Throws NotOnSphere if || |w|_j - 1 ||_R > tol.
TorusAngles torus_coordinates(const Bicomplex& w, double tol = 1e-9);

}  // namespace bctk
