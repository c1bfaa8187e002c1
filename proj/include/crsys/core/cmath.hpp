#pragma once

#include <complex>

namespace crsys::core {

/// Integer power by repeated squaring; ipow(0, 0) == 1.
inline std::complex<double> ipow(std::complex<double> base, int exponent) {
    if (exponent < 0) return 1.0 / ipow(base, -exponent);
    std::complex<double> result{1.0, 0.0};
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

inline double ipow(double base, int exponent) {
    if (exponent < 0) return 1.0 / ipow(base, -exponent);
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

}  // namespace crsys::core
