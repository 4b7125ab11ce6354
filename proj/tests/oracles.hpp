#pragma once

// Independent reference implementations used only by the tests.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// 110 digits covers the cancellation of the series up to x ~ 200.
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<110>>;
using BigRational = boost::multiprecision::cpp_rational;

/// Power series of J_order in extended precision.
inline double bessel_series(int order, double x) {
    const Big half = Big(x) / 2;
    Big term = 1;
    for (int i = 1; i <= order; ++i) term *= half / i;
    Big sum = term;
    const Big q = half * half;
    for (int k = 1; k < 400; ++k) {
        term *= -q / (Big(k) * (k + order));
        sum += term;
        if (abs(term) < Big("1e-40") && k > x) break;
    }
    return static_cast<double>(sum);
}

/// Exact coefficients of d^k P_n/dx^k from the Rodrigues formula.
inline std::vector<BigRational> legendre_deriv_coeffs(int n, int k) {
    // (x^2 - 1)^n by binomial expansion.
    std::vector<BigRational> c(2 * n + 1, 0);
    boost::multiprecision::cpp_int binom = 1;
    for (int j = 0; j <= n; ++j) {
        c[2 * j] = BigRational(binom) * ((n - j) % 2 == 0 ? 1 : -1);
        binom = binom * (n - j) / (j + 1);
    }
    for (int d = 0; d < n + k; ++d) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = c[i + 1] * (i + 1);
        c.back() = 0;
    }
    boost::multiprecision::cpp_int scale = 1;
    for (int i = 1; i <= n; ++i) scale *= 2 * i;  // 2^n n!
    for (auto& v : c) v /= scale;
    return c;
}

inline double eval_rational_poly(const std::vector<BigRational>& c, double x) {
    Big acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * Big(x) + Big(c[i]);
    return static_cast<double>(acc);
}

/// All perfect matchings of 2n points filtered for crossings.
inline std::vector<std::vector<int>> noncrossing_matchings(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> match(2 * n, -1);
    std::function<void()> rec = [&]() {
        int first = -1;
        for (int i = 0; i < 2 * n; ++i) {
            if (match[i] == -1) {
                first = i;
                break;
            }
        }
        if (first == -1) {
            for (int a = 0; a < 2 * n; ++a) {
                for (int b = 0; b < 2 * n; ++b) {
                    const int c = match[a], d = match[b];
                    if (a < c && b < d && a < b && b < c && c < d) return;
                }
            }
            out.push_back(match);
            return;
        }
        for (int j = first + 1; j < 2 * n; ++j) {
            if (match[j] != -1) continue;
            match[first] = j;
            match[j] = first;
            rec();
            match[first] = match[j] = -1;
        }
    };
    rec();
    return out;
}

/// Closed curves of a diagram glued with its antipodal copy, as cycles of half-edges: chord
/// halves (copy, point) are joined inside each copy by the matching and across the boundary by
/// point i of the first copy <-> point (i + n) mod 2n of the second.
inline int glued_cycles(const std::vector<int>& match) {
    const int m = static_cast<int>(match.size());
    const int n = m / 2;
    std::vector<char> seen(2 * m, 0);
    int cycles = 0;
    for (int start = 0; start < 2 * m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        int h = start;
        while (!seen[h]) {
            seen[h] = 1;
            const int copy = h / m, p = h % m;
            const int inside = copy * m + match[p];  // across the chord
            seen[inside] = 1;
            const int q = match[p];
            h = copy == 0 ? m + (q + n) % m : (q + n) % m;  // across the boundary
        }
    }
    return cycles;
}

}  // namespace oracle
