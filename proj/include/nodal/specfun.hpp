#pragma once

#include <vector>

#include "nodal/errors.hpp"

namespace nodal::specfun {

inline constexpr int kMaxDegree = 64;

/// Legendre polynomial P_n(x) by the Bonnet recurrence.
double legendre_eval(int n, double x);

/// k-th derivative of P_n at x. Throws DomainError for k > n.
double legendre_deriv(int n, int k, double x);

/// c_{n,k} = (d^k P_n / dx^k)(1) = (n+k)! / (2^k k! (n-k)!).
double legendre_deriv_at_one(int n, int k);

/// F_n^k(x) = (d^k P_n/dx^k)(x) / c_{n,k}; F_n^k(1) == 1 exactly.
double assoc_normalized(int n, int k, double x);

/// L_k(r) = F_n^k(sqrt(1 - r^2)), the radial factor of the hemisphere chart.
double radial_factor(int n, int k, double r);

/// Colatitudes theta in (0, pi/2) where F_n^m(cos theta) = 0, increasing.
std::vector<double> assoc_zeros(int n, int m);

/// Monomial coefficients of d^k P_n/dx^k (index i multiplies x^i).
/// Exact up to double rounding of the rational coefficients; practical for n <= 30.
struct LegendreDerivTable {
    int degree = 0;
    int order = 0;
    std::vector<double> coefficients;

    static LegendreDerivTable build(int n, int k);
    double operator()(double x) const;
};

enum class BesselOrder { J0 = 0, J1 = 1 };

inline constexpr double kBesselMaxArgument = 200.0;

/// J_0 or J_1 at x in [0, 200]; absolute error below 1e-10.
double bessel_j(BesselOrder order, double x);
double bessel_j(int order, double x);

struct BesselZeroTable {
    BesselOrder order = BesselOrder::J1;
    std::vector<double> zeros;

    std::size_t count() const { return zeros.size(); }
    double smallest_gap() const;
};

/// First `count` positive zeros of J_order, each bracketed to width <= 1e-10.
BesselZeroTable bessel_zeros(BesselOrder order, int count);
BesselZeroTable bessel_zeros(int order, int count);

/// Smallest positive zero of J_0.
double bessel_j0_first_zero();

}  // namespace nodal::specfun
