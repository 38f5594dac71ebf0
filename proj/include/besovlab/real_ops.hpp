#pragma once

#include <cmath>

#ifdef __SIZEOF_FLOAT128__
#include <quadmath.h>
#endif

namespace besovlab {

// Math shims so the norm engines and FFT run unchanged in double, extended
// and quad precision.
template <typename R>
struct RealOps {
    static R cos(R x) { return std::cos(x); }
    static R sin(R x) { return std::sin(x); }
    static R exp(R x) { return std::exp(x); }
    static R abs(R x) { return std::fabs(x); }
    static R sqrt(R x) { return std::sqrt(x); }
    static R pow(R x, R y) { return std::pow(x, y); }
    static constexpr R epsilon() { return static_cast<R>(2.220446049250313e-16); }
    static constexpr R pi() { return static_cast<R>(3.14159265358979323846264338327950288L); }
};

template <>
struct RealOps<long double> {
    static long double cos(long double x) { return cosl(x); }
    static long double sin(long double x) { return sinl(x); }
    static long double exp(long double x) { return expl(x); }
    static long double abs(long double x) { return fabsl(x); }
    static long double sqrt(long double x) { return sqrtl(x); }
    static long double pow(long double x, long double y) { return powl(x, y); }
    static constexpr long double epsilon() { return 1.0842021724855044e-19L; }
    static constexpr long double pi() { return 3.14159265358979323846264338327950288L; }
};

#ifdef __SIZEOF_FLOAT128__
using quad = __float128;

template <>
struct RealOps<quad> {
    static quad cos(quad x) { return cosq(x); }
    static quad sin(quad x) { return sinq(x); }
    static quad exp(quad x) { return expq(x); }
    static quad abs(quad x) { return fabsq(x); }
    static quad sqrt(quad x) { return sqrtq(x); }
    static quad pow(quad x, quad y) { return powq(x, y); }
    static constexpr quad epsilon() { return FLT128_EPSILON; }
    static quad pi() { return M_PIq; }
};
#endif

}  // namespace besovlab
