// Scalar reference backend. The vector backends mirror these functions
// operation-for-operation (fma placement included), which is what makes the
// cross-backend equivalence tests exact rather than approximate.

#include <bit>
#include <cmath>
#include <cstdint>

#include "kpzld/simd.hpp"
#include "simd_kernels.inl"

namespace kpzld::simd {
namespace detail {

double exp1(double x) {
    if (x > kExpClamp) x = kExpClamp;
    if (x < -kExpClamp) x = -kExpClamp;
    const double fk = std::nearbyint(x * kLog2E);
    double r = std::fma(-fk, kLn2Hi, x);
    r = std::fma(-fk, kLn2Lo, r);
    double p = kExpC[0];
    for (int i = 1; i < 12; ++i) p = std::fma(p, r, kExpC[i]);
    const double t = r * r;
    double e = std::fma(p, t, r);
    e = e + 1.0;
    const auto k = static_cast<std::int64_t>(fk);
    const double scale =
        std::bit_cast<double>(static_cast<std::uint64_t>(k + 1023) << 52);
    return e * scale;
}

double log1(double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    int e = static_cast<int>((bits >> 52) & 0x7ff) - 1023;
    double m = std::bit_cast<double>((bits & 0x000fffffffffffffULL) |
                                     0x3ff0000000000000ULL);
    if (m > 1.4142135623730951) {
        m *= 0.5;
        e += 1;
    }
    const double s = (m - 1.0) / (m + 1.0);
    const double w = s * s;
    double p = kLogC[0];
    for (int i = 1; i < 7; ++i) p = std::fma(p, w, kLogC[i]);
    const double v = std::fma(w, p, 1.0);
    const double logm = (s + s) * v;
    const double ed = static_cast<double>(e);
    double y = std::fma(ed, kLn2Hi, logm);
    y = std::fma(ed, kLn2Lo, y);
    return y;
}

double cos2pi(double u) {
    const double t = u - std::nearbyint(u);
    const double w = t * t;
    double p = kCosC[kCosDeg - 1];
    for (int i = kCosDeg - 2; i >= 0; --i) p = std::fma(p, w, kCosC[i]);
    return p;
}

std::uint64_t sm64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash2(std::uint64_t key, std::uint64_t ctr) {
    return sm64(sm64(key ^ kGolden * ctr) ^ ctr);
}

double u01(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace detail

namespace scalar {

void vexp(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = detail::exp1(x[i]);
}

void mul_exp(double* z, const double* e, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] *= detail::exp1(e[i]);
}

void vlog(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = detail::log1(x[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0, 0, 0, 0};
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4)
        for (int j = 0; j < 4; ++j) acc[j] = std::fma(a[i + j], b[i + j], acc[j]);
    for (std::size_t i = n4; i < n; ++i) acc[i - n4] = std::fma(a[i], b[i], acc[i - n4]);
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    double acc[4] = {0, 0, 0, 0};
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4)
        for (int j = 0; j < 4; ++j)
            acc[j] = std::fma(a[i + j] * b[i + j], c[i + j], acc[j]);
    for (std::size_t i = n4; i < n; ++i)
        acc[i - n4] = std::fma(a[i] * b[i], c[i], acc[i - n4]);
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double sum(const double* a, std::size_t n) {
    double acc[4] = {0, 0, 0, 0};
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4)
        for (int j = 0; j < 4; ++j) acc[j] += a[i + j];
    for (std::size_t i = n4; i < n; ++i) acc[i - n4] += a[i];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

std::size_t noise_mult(double* z, const double* g, double a, std::size_t n) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::fma(a, g[i], 1.0);
        z[i] = z[i] * m;
        bad += (z[i] <= 0.0);
    }
    return bad;
}

void fill_normal(std::uint64_t key, std::uint64_t ctr0, double* dst,
                 std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t c = ctr0 + i;
        const double u1 = detail::u01(detail::hash2(key, 2 * c));
        const double u2 = detail::u01(detail::hash2(key, 2 * c + 1));
        const double r = std::sqrt(detail::log1(u1) * -2.0);
        dst[i] = r * detail::cos2pi(u2);
    }
}

}  // namespace scalar
}  // namespace kpzld::simd
