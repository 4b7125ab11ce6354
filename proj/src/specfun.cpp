#include "nodal/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nodal::specfun {

namespace {

void check_degree(int n) {
    if (n < 0 || n > kMaxDegree) {
        throw DomainError("Legendre degree out of range [0, 64]: " + std::to_string(n));
    }
}

void check_order(int n, int k) {
    check_degree(n);
    if (k < 0 || k > n) {
        throw DomainError("derivative order " + std::to_string(k) + " outside [0, " +
                          std::to_string(n) + "]");
    }
}

// Normalized Gegenbauer recurrence G_m(x) = C_m^{(k+1/2)}(x) / C_m^{(k+1/2)}(1):
//   (m + 2k) G_m = (2m + 2k - 1) x G_{m-1} - (m - 1) G_{m-2}.
// Every coefficient is a small integer, so G_m(1) == 1 in floating point.
double normalized_gegenbauer(int degree, int k, double x) {
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int m = 2; m <= degree; ++m) {
        const double next = ((2.0 * m + 2.0 * k - 1.0) * x * cur - (m - 1.0) * prev) /
                            (m + 2.0 * k);
        prev = cur;
        cur = next;
    }
    return cur;
}

double bisect(auto&& fn, double lo, double hi, double width) {
    double flo = fn(lo);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Ascending series, accurate to ~1e-13 absolute for x <= 12.
double bessel_series(int order, double x) {
    const double q = -0.25 * x * x;
    double term = order == 0 ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

// Miller backward recurrence normalized by J0 + 2 sum J_{2k} = 1.
double bessel_miller(int order, double x) {
    int start = static_cast<int>(x + 30.0 + 2.0 * std::sqrt(40.0 * x));
    start += start % 2;
    double jp1 = 0.0;
    double j = 1e-300;
    double norm = 0.0;
    double j0 = 0.0;
    double j1 = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm1 = 2.0 * k / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            j1 *= 1e-250;
        }
        const int idx = k - 1;
        if (idx % 2 == 0 && idx > 0) norm += 2.0 * j;
        if (idx == 1) j1 = j;
    }
    j0 = j;
    norm += j0;
    return (order == 0 ? j0 : j1) / norm;
}

}  // namespace

double legendre_eval(int n, double x) {
    check_degree(n);
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int m = 2; m <= n; ++m) {
        const double next = ((2.0 * m - 1.0) * x * cur - (m - 1.0) * prev) / m;
        prev = cur;
        cur = next;
    }
    return cur;
}

double legendre_deriv_at_one(int n, int k) {
    check_order(n, k);
    // (n+k)! / ((n-k)! 2^k k!) = prod_{i=1..k} (n-k+2i-1)(n-k+2i) / (2i)
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c *= static_cast<double>(n - k + 2 * i - 1) * (n - k + 2 * i) / (2.0 * i);
    }
    return c;
}

double assoc_normalized(int n, int k, double x) {
    check_order(n, k);
    return normalized_gegenbauer(n - k, k, x);
}

double legendre_deriv(int n, int k, double x) {
    check_order(n, k);
    if (k == 0) return legendre_eval(n, x);
    return legendre_deriv_at_one(n, k) * normalized_gegenbauer(n - k, k, x);
}

double radial_factor(int n, int k, double r) {
    const double s = std::max(0.0, 1.0 - r * r);
    return assoc_normalized(n, k, std::sqrt(s));
}

std::vector<double> assoc_zeros(int n, int m) {
    check_order(n, m);
    // F_n^m has n - m simple zeros in (-1, 1), symmetric about 0.
    const int expected = (n - m) / 2;
    std::vector<double> thetas;
    if (expected == 0) return thetas;
    auto fn = [&](double theta) { return assoc_normalized(n, m, std::cos(theta)); };
    const double upper = std::nextafter(M_PI / 2.0, 0.0);
    for (int samples = 512; samples <= (1 << 20); samples *= 4) {
        thetas.clear();
        const double step = M_PI / 2.0 / samples;
        double a = 0.0;
        double fa = fn(a);
        for (int i = 1; i <= samples; ++i) {
            const double b = std::min(i * step, upper);
            const double fb = fn(b);
            if ((fa < 0.0) != (fb < 0.0) && fb != 0.0 && b < upper) {
                thetas.push_back(bisect(fn, a, b, 1e-13));
            }
            a = b;
            fa = fb;
        }
        if (static_cast<int>(thetas.size()) == expected) break;
    }
    return thetas;
}

LegendreDerivTable LegendreDerivTable::build(int n, int k) {
    check_order(n, k);
    // P_n(x) = 2^-n sum_j (-1)^j C(n,j) C(2n-2j, n) x^{n-2j}
    std::vector<double> p(n + 1, 0.0);
    for (int j = 0; 2 * j <= n; ++j) {
        double c = std::pow(2.0, -n);
        double binom_nj = 1.0;
        for (int i = 1; i <= j; ++i) binom_nj = binom_nj * (n - j + i) / i;
        // (2n-2j choose n) = prod_{i=1..n} (n - 2j + i) / i
        double binom2 = 1.0;
        for (int i = 1; i <= n; ++i) binom2 = binom2 * (n - 2 * j + i) / i;
        c *= binom_nj * binom2;
        p[n - 2 * j] = (j % 2 == 0 ? c : -c);
    }
    for (int d = 0; d < k; ++d) {
        std::vector<double> dp(p.size() > 1 ? p.size() - 1 : 1, 0.0);
        for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<double>(i);
        p = std::move(dp);
    }
    return LegendreDerivTable{n, k, std::move(p)};
}

double LegendreDerivTable::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double bessel_j(BesselOrder order, double x) {
    if (!(x >= 0.0) || x > kBesselMaxArgument) {
        throw DomainError("Bessel argument outside [0, 200]: " + std::to_string(x));
    }
    const int nu = static_cast<int>(order);
    if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
    if (x <= 12.0) return bessel_series(nu, x);
    return bessel_miller(nu, x);
}

double bessel_j(int order, double x) {
    if (order != 0 && order != 1) throw DomainError("only J0 and J1 are supported");
    return bessel_j(static_cast<BesselOrder>(order), x);
}

double BesselZeroTable::smallest_gap() const {
    double gap = INFINITY;
    for (std::size_t i = 1; i < zeros.size(); ++i) gap = std::min(gap, zeros[i] - zeros[i - 1]);
    return gap;
}

BesselZeroTable bessel_zeros(BesselOrder order, int count) {
    if (count < 1 || count > 60) throw DomainError("zero count outside [1, 60]");
    BesselZeroTable table;
    table.order = order;
    auto fn = [order](double x) { return bessel_j(order, x); };
    const double step = 0.25;
    double a = 0.5;
    double fa = fn(a);
    while (static_cast<int>(table.zeros.size()) < count) {
        const double b = a + step;
        if (b > kBesselMaxArgument) throw DomainError("zero search left supported range");
        const double fb = fn(b);
        if ((fa < 0.0) != (fb < 0.0)) table.zeros.push_back(bisect(fn, a, b, 1e-13));
        a = b;
        fa = fb;
    }
    return table;
}

BesselZeroTable bessel_zeros(int order, int count) {
    if (order != 0 && order != 1) throw DomainError("only J0 and J1 are supported");
    return bessel_zeros(static_cast<BesselOrder>(order), count);
}

double bessel_j0_first_zero() {
    static const double j0 = bessel_zeros(BesselOrder::J0, 1).zeros.front();
    return j0;
}

}  // namespace nodal::specfun
