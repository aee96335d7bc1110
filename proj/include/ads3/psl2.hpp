#pragma once

#include <array>
#include <complex>
#include <utility>

namespace ads3 {

// Element of PSL(2,R) stored as a det-1 matrix [[a,b],[c,d]] whose first
// nonzero entry is nonnegative.
class GroupElement {
public:
    GroupElement() : m_{1.0, 0.0, 0.0, 1.0} {}

    // Throws CorruptedElement when |det - 1| > 1e-6.
    static GroupElement from_entries(double a, double b, double c, double d);
    static GroupElement from_entries(const std::array<double, 4>& e) {
        return from_entries(e[0], e[1], e[2], e[3]);
    }
    static GroupElement identity() { return GroupElement(); }
    static GroupElement rotation(double theta);  // k(theta)
    static GroupElement boost(double t);         // a(t) = diag(e^t, e^-t)

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    const std::array<double, 4>& entries() const { return m_; }

    double determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double trace() const { return m_[0] + m_[3]; }
    GroupElement inverse() const;
    bool is_identity(double tol = 1e-9) const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    struct Raw {};
    GroupElement(Raw, double a, double b, double c, double d) : m_{a, b, c, d} {}
    std::array<double, 4> m_;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return compose(g, h); }

// ||g|| = arccosh((a^2+b^2+c^2+d^2)/2).
double norm(const GroupElement& g);

// Frobenius distance between g and the nearer of +h, -h.
double distance_mod_sign(const GroupElement& g, const GroupElement& h);
bool approx_equal(const GroupElement& g, const GroupElement& h, double tol = 1e-9);

enum class CartanConvention { DoubleCover, Projective };

struct CartanCoords {
    double theta1 = 0.0;
    double t = 0.0;
    double theta2 = 0.0;
    CartanConvention convention = CartanConvention::DoubleCover;
};

// g = k(theta1) a(t) k(theta2) up to sign, theta1 in [0, pi).
CartanCoords cartan(const GroupElement& g, CartanConvention conv = CartanConvention::DoubleCover);
GroupElement from_cartan(const CartanCoords& c);
GroupElement from_cartan(double theta1, double t, double theta2);

using FourVector = std::array<double, 4>;

// Q(x) = x1^2 + x2^2 - x3^2 - x4^2.
inline double quadratic_form(const FourVector& x) {
    return x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
}

// A point of AdS^3 = PSL(2,R). Coordinates are
//   x1 = (a+d)/2, x2 = (c-b)/2, x3 = (a-d)/2, x4 = (b+c)/2,
//   z1 = x1 + i x2, z2 = x3 + i x4,
// so that k(t1) a(t) k(t2) has z1 = cosh t e^{i(t1+t2)}, z2 = sinh t e^{i(t1-t2)}.
class AdS3Point {
public:
    AdS3Point() = default;
    explicit AdS3Point(const GroupElement& g) : g_(g) {}

    static AdS3Point origin() { return AdS3Point(); }
    static AdS3Point from_four_vector(const FourVector& x);
    static AdS3Point from_complex_pair(std::complex<double> z1, std::complex<double> z2);

    const GroupElement& element() const { return g_; }
    FourVector four_vector() const;
    std::pair<std::complex<double>, std::complex<double>> complex_pair() const;

private:
    GroupElement g_;
};

double norm(const AdS3Point& x);

// (g1, g2) acting by x -> g1 x g2^{-1}.
struct IsometryPair {
    GroupElement first;
    GroupElement second;

    IsometryPair inverse() const { return {first.inverse(), second.inverse()}; }
    AdS3Point act(const AdS3Point& x) const;
    std::pair<double, double> mu() const { return {norm(first), norm(second)}; }
    bool is_identity(double tol = 1e-9) const { return first.is_identity(tol) && second.is_identity(tol); }

    friend bool operator==(const IsometryPair&, const IsometryPair&) = default;
};

IsometryPair compose(const IsometryPair& g, const IsometryPair& h);
inline IsometryPair operator*(const IsometryPair& g, const IsometryPair& h) { return compose(g, h); }
bool approx_equal(const IsometryPair& g, const IsometryPair& h, double tol = 1e-9);

// |‖g1‖ - ‖g2‖| - ‖x‖, a lower bound for ‖(g1,g2)x‖.
double norm_lower_bound(const IsometryPair& g, const AdS3Point& x);

}  // namespace ads3
