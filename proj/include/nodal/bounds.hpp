#pragma once

#include "nodal/errors.hpp"

namespace nodal::bounds {

/// At most n^2 nodal domains.
long courant_bound(int n);

/// n^2 - 2n + 2 for even n, (n - 1)^2 + 3 for odd n. Throws DomainError for n < 2.
long karpushkin_bound(int n);

/// Asymptotic domain-count estimate 4 n^2 / j_0^2; reported only, never a gate.
double pleijel_estimate(int n);

/// Smallest component count reachable by the Lewy construction: 2 for even n, else 1.
int lewy_lower(int n);

struct OvalPrediction {
    long value = 0;
    bool exact = true;  // false: `value` is a lower bound

    bool admits(long observed) const { return exact ? observed == value : observed >= value; }
};

/// Oval count of the perturbation construction for degree n >= 3.
OvalPrediction predicted_ovals(int n);

struct BoundReport {
    int degree = 0;
    long components = 0;
    long domains = 0;
    long courant = 0;
    long karpushkin = 0;
    double pleijel_estimate = 0.0;
    int lewy_lower = 0;
    bool parity_ok = false;
    bool courant_ok = false;
    bool karpushkin_ok = false;

    bool all_ok() const { return parity_ok && courant_ok && karpushkin_ok; }
};

BoundReport make_report(int n, long components, long domains);

}  // namespace nodal::bounds
