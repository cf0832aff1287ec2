// Shared constants for the exp/log/cos kernels. Both the scalar reference
// and the vector backends must consume exactly these tables in the same
// evaluation order; any change here changes all backends together.
//
// exp:  y = 2^k * p(r),  k = nearbyint(x*log2(e)),  r = x - k*ln2 (split),
//       p = Taylor to r^13 in Horner form with fma.
// log:  x = m*2^e, m in [1/sqrt2, sqrt2); log m via atanh series in
//       s = (m-1)/(m+1), even powers to s^15.
// cos2pi: t = u - nearbyint(u) in [-0.5, 0.5), Taylor in t^2 to t^26;
//       |error| < 3e-16 on the full reduced range.

#pragma once
#include <cstdint>

namespace kpzld::simd::detail {

inline constexpr double kExpClamp = 690.0;
inline constexpr double kLog2E = 1.44269504088896339e+00;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;

// 1/n! for n = 13 down to 2 (Horner from the top).
inline constexpr double kExpC[] = {
    1.60590438368216133e-10,  // 1/13!
    2.08767569878681002e-09,  // 1/12!
    2.50521083854417202e-08,  // 1/11!
    2.75573192239858883e-07,  // 1/10!
    2.75573192239858925e-06,  // 1/9!
    2.48015873015873016e-05,  // 1/8!
    1.98412698412698413e-04,  // 1/7!
    1.38888888888888894e-03,  // 1/6!
    8.33333333333333322e-03,  // 1/5!
    4.16666666666666644e-02,  // 1/4!
    1.66666666666666657e-01,  // 1/3!
    5.00000000000000000e-01,  // 1/2!
};

// atanh series: log(m) = 2s*(1 + c1 s^2 + c2 s^4 + ...), c_k = 1/(2k+1).
inline constexpr double kLogC[] = {
    1.0 / 15.0, 1.0 / 13.0, 1.0 / 11.0, 1.0 / 9.0,
    1.0 / 7.0,  1.0 / 5.0,  1.0 / 3.0,
};

// cos(2*pi*t) = sum_k kCosC[k] * t^(2k), coefficients (-1)^k (2pi)^(2k)/(2k)!
inline constexpr double kCosC[] = {
    1.00000000000000000e+00,
    -1.97392088021787160e+01,
    6.49393940226682815e+01,
    -8.54568172066937137e+01,
    6.02446413718766394e+01,
    -2.64262567833743880e+01,
    7.90353637131846476e+00,
    -1.71439071108867114e+00,
    2.82005968455791012e-01,
    -3.63828411425456411e-02,
    3.77983420068003654e-03,
    -3.22991067207097483e-04,
    2.30999569450704231e-05,
    -1.40299961064641046e-06,
};
inline constexpr int kCosDeg = 14;

inline constexpr double kTwoPi = 6.28318530717958623e+00;
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace kpzld::simd::detail
