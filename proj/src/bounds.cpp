#include "nodal/bounds.hpp"

#include "nodal/specfun.hpp"

namespace nodal::bounds {

long courant_bound(int n) {
    if (n < 1) throw DomainError("Courant bound needs n >= 1");
    return static_cast<long>(n) * n;
}

long karpushkin_bound(int n) {
    if (n < 2) throw DomainError("Karpushkin bound needs n >= 2");
    const long m = n;
    return n % 2 == 0 ? m * m - 2 * m + 2 : (m - 1) * (m - 1) + 3;
}

double pleijel_estimate(int n) {
    if (n < 1) throw DomainError("Pleijel estimate needs n >= 1");
    const double j0 = specfun::bessel_j0_first_zero();
    return 4.0 * n * n / (j0 * j0);
}

int lewy_lower(int n) {
    if (n < 1) throw DomainError("Lewy lower bound needs n >= 1");
    return n % 2 == 0 ? 2 : 1;
}

OvalPrediction predicted_ovals(int n) {
    if (n < 3) throw DomainError("oval construction needs n >= 3");
    if (n % 4 == 3) {
        const long k = (n - 3) / 4;
        return {(k + 1) * (4 * k + 2) + 1, true};
    }
    if (n % 4 == 1) {
        const long k = (n - 1) / 4;
        return {4 * k * k + 1, false};
    }
    const long m = n / 2;
    return {m * (m + 1), true};
}

BoundReport make_report(int n, long components, long domains) {
    BoundReport r;
    r.degree = n;
    r.components = components;
    r.domains = domains;
    r.courant = courant_bound(n);
    r.karpushkin = n >= 2 ? karpushkin_bound(n) : 1;
    r.pleijel_estimate = pleijel_estimate(n);
    r.lewy_lower = lewy_lower(n);
    r.parity_ok = (components - n) % 2 == 0;
    r.courant_ok = domains <= r.courant;
    r.karpushkin_ok = components <= r.karpushkin;
    return r;
}

}  // namespace nodal::bounds
