#include "ads3/psl2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ads3/errors.hpp"

namespace ads3 {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r -= period;
    return r;
}

}  // namespace

GroupElement GroupElement::from_entries(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw CorruptedElement("non-finite matrix entry");
    const double ad = a * d;
    const double bc = b * c;
    const double det = ad - bc;
    const double scale = std::abs(ad) + std::abs(bc);
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(std::abs(det - 1.0) <= 1e-6 + 4.0 * eps * scale))
        throw CorruptedElement("determinant " + std::to_string(det) + " is not 1");
    // Renormalize only where det carries information; for huge entries the
    // computed det is dominated by cancellation error.
    if (std::abs(det - 1.0) > 1e-13 && scale < 1e6) {
        const double s = 1.0 / std::sqrt(det);
        a *= s;
        b *= s;
        c *= s;
        d *= s;
    }
    double first = a != 0.0 ? a : (b != 0.0 ? b : (c != 0.0 ? c : d));
    if (first < 0.0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    // Avoid -0.0 so that equal elements compare and print identically.
    return GroupElement(Raw{}, a + 0.0, b + 0.0, c + 0.0, d + 0.0);
}

GroupElement GroupElement::rotation(double theta) {
    const double co = std::cos(theta), si = std::sin(theta);
    return from_entries(co, -si, si, co);
}

GroupElement GroupElement::boost(double t) {
    return from_entries(std::exp(t), 0.0, 0.0, std::exp(-t));
}

GroupElement GroupElement::inverse() const {
    return from_entries(m_[3], -m_[1], -m_[2], m_[0]);
}

bool GroupElement::is_identity(double tol) const {
    return approx_equal(*this, GroupElement(), tol);
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    const auto& x = g.entries();
    const auto& y = h.entries();
    return GroupElement::from_entries(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                      x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
}

double norm(const GroupElement& g) {
    // cosh‖g‖ - 1 = ((a-d)^2 + (b+c)^2)/2 when det = 1; this avoids the
    // cancellation of arccosh near the identity.
    const double p = g.a() - g.d();
    const double q = g.b() + g.c();
    return 2.0 * std::asinh(0.5 * std::hypot(p, q));
}

double distance_mod_sign(const GroupElement& g, const GroupElement& h) {
    double plus = 0.0, minus = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double u = g.entries()[i], v = h.entries()[i];
        plus += (u - v) * (u - v);
        minus += (u + v) * (u + v);
    }
    return std::sqrt(std::min(plus, minus));
}

bool approx_equal(const GroupElement& g, const GroupElement& h, double tol) {
    double scale = 1.0;
    for (int i = 0; i < 4; ++i)
        scale = std::max({scale, std::abs(g.entries()[i]), std::abs(h.entries()[i])});
    return distance_mod_sign(g, h) <= tol * scale;
}

CartanCoords cartan(const GroupElement& g, CartanConvention conv) {
    const AdS3Point x(g);
    const auto [z1, z2] = x.complex_pair();
    CartanCoords out;
    out.convention = conv;
    out.t = norm(g) / 2.0;
    const double alpha = std::arg(z1);
    if (std::abs(z2) == 0.0) {
        out.theta1 = wrap(alpha, kPi);
        out.theta2 = 0.0;
        return out;
    }
    const double beta = std::arg(z2);
    double th1 = 0.5 * (alpha + beta);
    double th2 = 0.5 * (alpha - beta);
    // (th1, th2) -> (th1 + pi, th2 - pi) and th2 -> th2 + 2 pi fix the SL(2,R) matrix.
    while (th1 < 0.0) {
        th1 += kPi;
        th2 -= kPi;
    }
    while (th1 >= kPi) {
        th1 -= kPi;
        th2 += kPi;
    }
    out.theta1 = th1;
    out.theta2 = wrap(th2, conv == CartanConvention::DoubleCover ? 2.0 * kPi : kPi);
    return out;
}

GroupElement from_cartan(double theta1, double t, double theta2) {
    return GroupElement::rotation(theta1) * GroupElement::boost(t) * GroupElement::rotation(theta2);
}

GroupElement from_cartan(const CartanCoords& c) { return from_cartan(c.theta1, c.t, c.theta2); }

AdS3Point AdS3Point::from_four_vector(const FourVector& x) {
    return AdS3Point(GroupElement::from_entries(x[0] + x[2], x[3] - x[1], x[1] + x[3], x[0] - x[2]));
}

AdS3Point AdS3Point::from_complex_pair(std::complex<double> z1, std::complex<double> z2) {
    return from_four_vector({z1.real(), z1.imag(), z2.real(), z2.imag()});
}

FourVector AdS3Point::four_vector() const {
    const auto& e = g_.entries();
    return {0.5 * (e[0] + e[3]), 0.5 * (e[2] - e[1]), 0.5 * (e[0] - e[3]), 0.5 * (e[1] + e[2])};
}

std::pair<std::complex<double>, std::complex<double>> AdS3Point::complex_pair() const {
    const FourVector x = four_vector();
    return {{x[0], x[1]}, {x[2], x[3]}};
}

double norm(const AdS3Point& x) { return norm(x.element()); }

AdS3Point IsometryPair::act(const AdS3Point& x) const {
    return AdS3Point(first * x.element() * second.inverse());
}

IsometryPair compose(const IsometryPair& g, const IsometryPair& h) {
    return {g.first * h.first, g.second * h.second};
}

bool approx_equal(const IsometryPair& g, const IsometryPair& h, double tol) {
    return approx_equal(g.first, h.first, tol) && approx_equal(g.second, h.second, tol);
}

double norm_lower_bound(const IsometryPair& g, const AdS3Point& x) {
    return std::abs(norm(g.first) - norm(g.second)) - norm(x);
}

}  // namespace ads3
