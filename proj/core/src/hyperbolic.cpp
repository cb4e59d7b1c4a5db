#include "bctk/hyperbolic.hpp"

#include <cmath>
#include <cstdio>

#include "bctk/detail/format_util.hpp"
#include "json.hpp"

namespace bctk {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + ": non-finite component");
    }
}

}  // namespace

Hyperbolic::Hyperbolic(double real) : p1_(real), p2_(real) {
    require_finite(real, "Hyperbolic");
}

Hyperbolic Hyperbolic::idempotent(double p1, double p2) {
    require_finite(p1, "Hyperbolic");
    require_finite(p2, "Hyperbolic");
    return Hyperbolic(p1, p2, 0);
}

Hyperbolic Hyperbolic::cartesian(double x, double y) {
    return idempotent(x + y, x - y);
}

Hyperbolic Hyperbolic::conj() const noexcept { return Hyperbolic(p2_, p1_, 0); }

Hyperbolic Hyperbolic::inverse() const {
    if (!is_unit()) {
        throw NotInvertible("hyperbolic inverse: zero divisor or zero");
    }
    return Hyperbolic(1.0 / p1_, 1.0 / p2_, 0);
}

Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b) {
    return Hyperbolic(a.p1_ + b.p1_, a.p2_ + b.p2_, 0);
}

Hyperbolic operator-(const Hyperbolic& a, const Hyperbolic& b) {
    return Hyperbolic(a.p1_ - b.p1_, a.p2_ - b.p2_, 0);
}

Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
    return Hyperbolic(a.p1_ * b.p1_, a.p2_ * b.p2_, 0);
}

Hyperbolic operator-(const Hyperbolic& a) {
    return Hyperbolic(-a.p1_, -a.p2_, 0);
}

double square_modulus(const Hyperbolic& z) { return z.p1() * z.p2(); }

Hyperbolic sup(const Hyperbolic& z, const Hyperbolic& w) {
    return Hyperbolic::idempotent(std::max(z.p1(), w.p1()),
                                  std::max(z.p2(), w.p2()));
}

Hyperbolic inf(const Hyperbolic& z, const Hyperbolic& w) {
    return Hyperbolic::idempotent(std::min(z.p1(), w.p1()),
                                  std::min(z.p2(), w.p2()));
}

Hyperbolic abs(const Hyperbolic& z) {
    return Hyperbolic::idempotent(std::fabs(z.p1()), std::fabs(z.p2()));
}

bool leq(const Hyperbolic& z, const Hyperbolic& w) {
    return z.p1() <= w.p1() && z.p2() <= w.p2();
}

bool lt(const Hyperbolic& z, const Hyperbolic& w) {
    return leq(z, w) && !(z == w);
}

bool strictly_less(const Hyperbolic& z, const Hyperbolic& w) {
    return z.p1() < w.p1() && z.p2() < w.p2();
}

bool is_positive(const Hyperbolic& z) { return z.p1() >= 0.0 && z.p2() >= 0.0; }

bool is_strictly_positive(const Hyperbolic& z) {
    return z.p1() > 0.0 && z.p2() > 0.0;
}

double riesz_norm(const Hyperbolic& z) {
    return std::max(std::fabs(z.p1()), std::fabs(z.p2()));
}

Hyperbolic sqrt_positive(const Hyperbolic& u) {
    if (!is_positive(u)) {
        throw NotPositive("sqrt_positive: input has a negative component");
    }
    return Hyperbolic::idempotent(std::sqrt(u.p1()), std::sqrt(u.p2()));
}

Hyperbolic exp(const Hyperbolic& z) {
    return Hyperbolic::idempotent(std::exp(z.p1()), std::exp(z.p2()));
}

Hyperbolic log(const Hyperbolic& u) {
    if (!is_strictly_positive(u)) {
        throw DomainError("hyperbolic log: input must be >> 0");
    }
    return Hyperbolic::idempotent(std::log(u.p1()), std::log(u.p2()));
}

Hyperbolic to_hyperbolic(Sign s) {
    switch (s) {
        case Sign::plus_one: return Hyperbolic(1.0);
        case Sign::minus_one: return Hyperbolic(-1.0);
        case Sign::plus_j: return Hyperbolic::j();
        case Sign::minus_j: return -Hyperbolic::j();
    }
    throw DomainError("invalid Sign");
}

namespace {

Sign sign_from_components(bool first_negative, bool second_negative) {
    if (!first_negative && !second_negative) return Sign::plus_one;
    if (first_negative && second_negative) return Sign::minus_one;
    if (!first_negative && second_negative) return Sign::plus_j;
    return Sign::minus_j;
}

}  // namespace

Sign operator*(Sign a, Sign b) {
    const Hyperbolic prod = to_hyperbolic(a) * to_hyperbolic(b);
    return sign_from_components(prod.p1() < 0.0, prod.p2() < 0.0);
}

const char* to_string(Sign s) {
    switch (s) {
        case Sign::plus_one: return "+1";
        case Sign::minus_one: return "-1";
        case Sign::plus_j: return "+j";
        case Sign::minus_j: return "-j";
    }
    return "?";
}

std::pair<Sign, Hyperbolic> sign_decompose(const Hyperbolic& z) {
    if (!z.is_unit()) {
        throw NotInvertible("sign_decompose: sign is not unique off the units");
    }
    return {sign_from_components(z.p1() < 0.0, z.p2() < 0.0), abs(z)};
}

bool in_cone(const Hyperbolic& z, Sign eps) {
    return abs(z) == to_hyperbolic(eps) * z;
}

bool is_hyperbolic_integer(const Hyperbolic& z) {
    return std::fabs(z.p1() - std::round(z.p1())) <= kIntegerTol &&
           std::fabs(z.p2() - std::round(z.p2())) <= kIntegerTol;
}

Interval::Interval(Hyperbolic lo, Hyperbolic hi, IntervalKind kind)
    : lo_(lo), hi_(hi), kind_(kind) {
    const bool has_open_side = kind != IntervalKind::closed;
    if (has_open_side ? !strictly_less(lo, hi) : !leq(lo, hi)) {
        throw BadParameters("Interval: bounds are not ordered for this kind");
    }
}

bool Interval::contains(const Hyperbolic& z) const {
    const bool left_open = kind_ == IntervalKind::open ||
                           kind_ == IntervalKind::half_open_left;
    const bool right_open = kind_ == IntervalKind::open ||
                            kind_ == IntervalKind::half_open_right;
    const bool left_ok = left_open ? strictly_less(lo_, z) : leq(lo_, z);
    const bool right_ok = right_open ? strictly_less(z, hi_) : leq(z, hi_);
    return left_ok && right_ok;
}

std::string to_string(const Hyperbolic& z) {
    std::string out = detail::shortest(z.x());
    const double y = z.y();
    out += (std::signbit(y) ? "-" : "+");
    out += detail::shortest(std::fabs(y));
    out += "j";
    return out;
}

std::string to_json(const Hyperbolic& z) {
    nlohmann::json j;
    j["p1"] = z.p1();
    j["p2"] = z.p2();
    return j.dump();
}

Hyperbolic hyperbolic_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return Hyperbolic::idempotent(j.at("p1").get<double>(),
                                  j.at("p2").get<double>());
}

}  // namespace bctk
