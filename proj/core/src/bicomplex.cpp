#include "bctk/bicomplex.hpp"

#include <cmath>
#include <numbers>

#include "bctk/detail/format_util.hpp"
#include "json.hpp"

namespace bctk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(Complex v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError(std::string(what) + ": non-finite component");
    }
}

/// Principal argument in (-pi, pi]: the -pi branch edge maps to +pi.
double principal_arg(Complex z) {
    double a = std::arg(z);
    if (a == -kPi) a = kPi;
    return a;
}

}  // namespace

Bicomplex::Bicomplex(double real) : z1_(real), z2_(real) {
    require_finite(z1_, "Bicomplex");
}

Bicomplex::Bicomplex(const Hyperbolic& z) : z1_(z.p1()), z2_(z.p2()) {}

Bicomplex Bicomplex::idempotent(Complex z1, Complex z2) {
    require_finite(z1, "Bicomplex");
    require_finite(z2, "Bicomplex");
    return Bicomplex(z1, z2, 0);
}

Bicomplex Bicomplex::cartesian(double a, double b, double c, double d) {
    return idempotent({a + c, b - d}, {a - c, b + d});
}

std::array<double, 4> Bicomplex::parts() const noexcept {
    return {a(), b(), c(), d()};
}

Bicomplex Bicomplex::inverse() const {
    if (!is_unit()) {
        throw NotInvertible("bicomplex inverse: zero divisor or zero");
    }
    return Bicomplex(1.0 / z1_, 1.0 / z2_, 0);
}

Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return Bicomplex(a.z1_ + b.z1_, a.z2_ + b.z2_, 0);
}

Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return Bicomplex(a.z1_ - b.z1_, a.z2_ - b.z2_, 0);
}

Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return Bicomplex(a.z1_ * b.z1_, a.z2_ * b.z2_, 0);
}

Bicomplex operator-(const Bicomplex& a) { return Bicomplex(-a.z1_, -a.z2_, 0); }

Unit permuted(Unit u) {
    switch (u) {
        case Unit::i: return Unit::k;
        case Unit::j: return Unit::i;
        case Unit::k: return Unit::j;
    }
    throw DomainError("invalid Unit");
}

Bicomplex unit_value(Unit u) {
    switch (u) {
        case Unit::i: return Bicomplex::i();
        case Unit::j: return Bicomplex::j();
        case Unit::k: return Bicomplex::k();
    }
    throw DomainError("invalid Unit");
}

const char* to_string(Unit u) {
    switch (u) {
        case Unit::i: return "i";
        case Unit::j: return "j";
        case Unit::k: return "k";
    }
    return "?";
}

UParts decompose(const Bicomplex& w, Unit u) {
    const auto [a, b, c, d] = w.parts();
    switch (u) {
        case Unit::i:
            // w = (a + bi) + k (d + ci)
            return {Bicomplex::cartesian(a, b, 0, 0),
                    Bicomplex::cartesian(d, c, 0, 0)};
        case Unit::j:
            // w = (a + cj) + i (b - dj)
            return {Bicomplex::cartesian(a, 0, c, 0),
                    Bicomplex::cartesian(b, 0, -d, 0)};
        case Unit::k:
            // w = (a + dk) + j (c - bk)
            return {Bicomplex::cartesian(a, 0, 0, d),
                    Bicomplex::cartesian(c, 0, 0, -b)};
    }
    throw DomainError("invalid Unit");
}

Bicomplex conj(const Bicomplex& w, Unit u) {
    switch (u) {
        case Unit::i:  // swaps the idempotent components
            return Bicomplex::idempotent(w.z2(), w.z1());
        case Unit::j:  // conjugates them
            return Bicomplex::idempotent(std::conj(w.z1()), std::conj(w.z2()));
        case Unit::k:  // both
            return Bicomplex::idempotent(std::conj(w.z2()), std::conj(w.z1()));
    }
    throw DomainError("invalid Unit");
}

Hyperbolic re_j(const Bicomplex& w) {
    return Hyperbolic::idempotent(w.z1().real(), w.z2().real());
}

Hyperbolic im_j(const Bicomplex& w) {
    return Hyperbolic::idempotent(w.z1().imag(), w.z2().imag());
}

Hyperbolic j_modulus(const Bicomplex& w) {
    return Hyperbolic::idempotent(std::abs(w.z1()), std::abs(w.z2()));
}

double euclidean_norm(const Bicomplex& w) {
    return std::sqrt((std::norm(w.z1()) + std::norm(w.z2())) / 2.0);
}

double riesz_subnorm(const Bicomplex& w) {
    return std::max(std::abs(w.z1()), std::abs(w.z2()));
}

double s_real(const Bicomplex& w) {
    return std::max(w.z1().real(), w.z2().real());
}

double i_real(const Bicomplex& w) {
    return std::min(w.z1().real(), w.z2().real());
}

Bicomplex exp(const Bicomplex& w) {
    return Bicomplex::idempotent(std::exp(w.z1()), std::exp(w.z2()));
}

Hyperbolic arg_principal(const Bicomplex& w) {
    if (!w.is_unit()) {
        throw NotInvertible("arg_principal: not defined off the units");
    }
    return Hyperbolic::idempotent(principal_arg(w.z1()), principal_arg(w.z2()));
}

Bicomplex log(const Bicomplex& w) {
    const Hyperbolic arg = arg_principal(w);  // throws off the units
    const Hyperbolic mag = j_modulus(w);
    return Bicomplex::idempotent(
        {std::log(mag.p1()), arg.p1()},
        {std::log(mag.p2()), arg.p2()});
}

Bicomplex pow(const Bicomplex& w, const Bicomplex& alpha) {
    return exp(alpha * log(w));
}

Hyperbolic inner_product_j(const Bicomplex& a, const Bicomplex& b) {
    return Hyperbolic::idempotent((a.z1() * std::conj(b.z1())).real(),
                                  (a.z2() * std::conj(b.z2())).real());
}

Hyperbolic d_angle(const Bicomplex& a, const Bicomplex& b) {
    if (!a.is_unit() || !b.is_unit()) {
        throw NotInvertible("d_angle: arguments must be invertible");
    }
    const Hyperbolic ip = inner_product_j(a, b);
    const Hyperbolic denom = j_modulus(a) * j_modulus(b);
    // Cauchy-Schwarz puts the ratio in [-1,1]; clamp the rounding spill.
    const auto ratio = [&](double num, double den) {
        return std::clamp(num / den, -1.0, 1.0);
    };
    return Hyperbolic::idempotent(std::acos(ratio(ip.p1(), denom.p1())),
                                  std::acos(ratio(ip.p2(), denom.p2())));
}

std::optional<Sign> cone_classify(const Bicomplex& w, double tol) {
    const Hyperbolic arg = arg_principal(w);  // throws off the units
    for (Sign eps : {Sign::plus_one, Sign::minus_one, Sign::plus_j,
                     Sign::minus_j}) {
        const Hyperbolic target =
            (Hyperbolic(1.0) - to_hyperbolic(eps)) * Hyperbolic(kPi / 2.0);
        if (riesz_norm(arg - target) <= tol) return eps;
    }
    return std::nullopt;
}

Polar polar_decompose(const Bicomplex& w) {
    if (w.is_zero()) {
        throw ZeroInput("polar_decompose: zero input");
    }
    const auto phase = [](Complex z) -> Complex {
        if (z == 0.0) return 1.0;
        return z / std::abs(z);
    };
    return {Bicomplex::idempotent(phase(w.z1()), phase(w.z2())), j_modulus(w)};
}

namespace {

void append_term(std::string& out, double coeff, const char* unit) {
    if (coeff == 0.0) return;
    if (out.empty()) {
        out += detail::shortest(coeff);
    } else {
        out += std::signbit(coeff) ? "-" : "+";
        out += detail::shortest(std::fabs(coeff));
    }
    out += unit;
}

std::string complex_literal(Complex z) {
    std::string out = detail::shortest(z.real());
    out += std::signbit(z.imag()) ? "-" : "+";
    out += detail::shortest(std::fabs(z.imag()));
    out += "i";
    return out;
}

}  // namespace

std::string to_string_cartesian(const Bicomplex& w) {
    const auto [a, b, c, d] = w.parts();
    std::string out;
    append_term(out, a, "");
    append_term(out, b, "i");
    append_term(out, c, "j");
    append_term(out, d, "k");
    if (out.empty()) out = "0";
    return out;
}

std::string to_string_idempotent(const Bicomplex& w) {
    return "[" + complex_literal(w.z1()) + ", " + complex_literal(w.z2()) +
           "]e";
}

std::string to_json(const Bicomplex& w) {
    nlohmann::json j;
    j["z1"] = {w.z1().real(), w.z1().imag()};
    j["z2"] = {w.z2().real(), w.z2().imag()};
    return j.dump();
}

Bicomplex bicomplex_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const auto& z1 = j.at("z1");
    const auto& z2 = j.at("z2");
    return Bicomplex::idempotent(
        {z1.at(0).get<double>(), z1.at(1).get<double>()},
        {z2.at(0).get<double>(), z2.at(1).get<double>()});
}

}  // namespace bctk
