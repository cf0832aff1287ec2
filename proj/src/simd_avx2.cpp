// AVX2+FMA backend. Mirrors src/simd_scalar.cpp operation-for-operation;
// lane tails fall back to the scalar reference, which is the same algorithm,
// so outputs are bit-identical to the scalar backend.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstdint>

#include "kpzld/simd.hpp"
#include "simd_kernels.inl"

namespace kpzld::simd {

namespace detail {
double exp1(double x);
double log1(double x);
double cos2pi(double u);
std::uint64_t hash2(std::uint64_t key, std::uint64_t ctr);
}  // namespace detail

namespace {

using detail::kCosC;
using detail::kCosDeg;
using detail::kExpC;
using detail::kExpClamp;
using detail::kGolden;
using detail::kLn2Hi;
using detail::kLn2Lo;
using detail::kLog2E;
using detail::kLogC;

inline __m256d exp4(__m256d x) {
    x = _mm256_min_pd(x, _mm256_set1_pd(kExpClamp));
    x = _mm256_max_pd(x, _mm256_set1_pd(-kExpClamp));
    const __m256d fk = _mm256_round_pd(
        _mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(fk, _mm256_set1_pd(kLn2Hi), x);
    r = _mm256_fnmadd_pd(fk, _mm256_set1_pd(kLn2Lo), r);
    __m256d p = _mm256_set1_pd(kExpC[0]);
    for (int i = 1; i < 12; ++i)
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kExpC[i]));
    const __m256d t = _mm256_mul_pd(r, r);
    __m256d e = _mm256_fmadd_pd(p, t, r);
    e = _mm256_add_pd(e, _mm256_set1_pd(1.0));
    const __m128i k32 = _mm256_cvtpd_epi32(fk);
    __m256i k64 = _mm256_cvtepi32_epi64(k32);
    k64 = _mm256_add_epi64(k64, _mm256_set1_epi64x(1023));
    const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(k64, 52));
    return _mm256_mul_pd(e, scale);
}

inline __m256d int52_to_pd(__m256i v) {
    // v must be in [0, 2^52).
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic)),
                         _mm256_set1_pd(0x1.0p52));
}

inline __m256d log4(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    __m256i e64 = _mm256_sub_epi64(
        _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7ff)),
        _mm256_set1_epi64x(1023));
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
        _mm256_set1_epi64x(0x3ff0000000000000LL)));
    const __m256d big =
        _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e64 = _mm256_sub_epi64(e64, _mm256_castpd_si256(big));  // mask is -1
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d w = _mm256_mul_pd(s, s);
    __m256d p = _mm256_set1_pd(kLogC[0]);
    for (int i = 1; i < 7; ++i)
        p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kLogC[i]));
    const __m256d v = _mm256_fmadd_pd(w, p, one);
    const __m256d logm = _mm256_mul_pd(_mm256_add_pd(s, s), v);
    // Signed int64 -> double via the 2^52+2^51 magic constant (|e| << 2^51).
    const __m256i magic = _mm256_set1_epi64x(0x4338000000000000LL);
    const __m256d ed = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_add_epi64(e64, magic)),
        _mm256_set1_pd(6755399441055744.0));
    __m256d y = _mm256_fmadd_pd(ed, _mm256_set1_pd(kLn2Hi), logm);
    y = _mm256_fmadd_pd(ed, _mm256_set1_pd(kLn2Lo), y);
    return y;
}

inline __m256d cos2pi4(__m256d u) {
    const __m256d t = _mm256_sub_pd(
        u, _mm256_round_pd(u, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
    const __m256d w = _mm256_mul_pd(t, t);
    __m256d p = _mm256_set1_pd(kCosC[kCosDeg - 1]);
    for (int i = kCosDeg - 2; i >= 0; --i)
        p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kCosC[i]));
    return p;
}

inline __m256i mul64(__m256i a, __m256i b) {
    const __m256i alo_bhi = _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32));
    const __m256i ahi_blo = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
    const __m256i cross = _mm256_add_epi64(alo_bhi, ahi_blo);
    return _mm256_add_epi64(_mm256_mul_epu32(a, b),
                            _mm256_slli_epi64(cross, 32));
}

inline __m256i sm64v(__m256i x) {
    x = _mm256_add_epi64(x, _mm256_set1_epi64x(static_cast<long long>(kGolden)));
    x = mul64(_mm256_xor_si256(x, _mm256_srli_epi64(x, 30)),
              _mm256_set1_epi64x(static_cast<long long>(0xbf58476d1ce4e5b9ULL)));
    x = mul64(_mm256_xor_si256(x, _mm256_srli_epi64(x, 27)),
              _mm256_set1_epi64x(static_cast<long long>(0x94d049bb133111ebULL)));
    return _mm256_xor_si256(x, _mm256_srli_epi64(x, 31));
}

inline __m256i hash2v(__m256i key, __m256i ctr) {
    const __m256i gc =
        mul64(_mm256_set1_epi64x(static_cast<long long>(kGolden)), ctr);
    return sm64v(_mm256_xor_si256(sm64v(_mm256_xor_si256(key, gc)), ctr));
}

inline __m256d u01v(__m256i bits) {
    const __m256d v = int52_to_pd(_mm256_srli_epi64(bits, 12));
    return _mm256_mul_pd(_mm256_add_pd(v, _mm256_set1_pd(1.0)),
                         _mm256_set1_pd(0x1.0p-52));
}

}  // namespace

namespace avx2 {

void vexp(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] = detail::exp1(x[i]);
}

void mul_exp(double* z, const double* e, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d zi = _mm256_loadu_pd(z + i);
        _mm256_storeu_pd(z + i, _mm256_mul_pd(zi, exp4(_mm256_loadu_pd(e + i))));
    }
    for (; i < n; ++i) z[i] *= detail::exp1(e[i]);
}

void vlog(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, log4(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] = detail::log1(x[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (std::size_t i = n4; i < n; ++i)
        lanes[i - n4] = __builtin_fma(a[i], b[i], lanes[i - n4]);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d ab =
            _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (std::size_t i = n4; i < n; ++i)
        lanes[i - n4] = __builtin_fma(a[i] * b[i], c[i], lanes[i - n4]);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double sum(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (std::size_t i = n4; i < n; ++i) lanes[i - n4] += a[i];
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yi =
            _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, yi);
    }
    for (; i < n; ++i) y[i] = __builtin_fma(a, x[i], y[i]);
}

std::size_t noise_mult(double* z, const double* g, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t bad = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d m = _mm256_fmadd_pd(av, _mm256_loadu_pd(g + i), one);
        const __m256d zi = _mm256_mul_pd(_mm256_loadu_pd(z + i), m);
        _mm256_storeu_pd(z + i, zi);
        const __m256d le = _mm256_cmp_pd(zi, zero, _CMP_LE_OQ);
        bad += __builtin_popcount(_mm256_movemask_pd(le));
    }
    for (; i < n; ++i) {
        const double m = __builtin_fma(a, g[i], 1.0);
        z[i] = z[i] * m;
        bad += (z[i] <= 0.0);
    }
    return bad;
}

void fill_normal(std::uint64_t key, std::uint64_t ctr0, double* dst,
                 std::size_t n) {
    const __m256i keyv = _mm256_set1_epi64x(static_cast<long long>(key));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const std::uint64_t c = ctr0 + i;
        const __m256i c2 = _mm256_set_epi64x(
            static_cast<long long>(2 * (c + 3)), static_cast<long long>(2 * (c + 2)),
            static_cast<long long>(2 * (c + 1)), static_cast<long long>(2 * c));
        const __m256i c2p1 = _mm256_add_epi64(c2, _mm256_set1_epi64x(1));
        const __m256d u1 = u01v(hash2v(keyv, c2));
        const __m256d u2 = u01v(hash2v(keyv, c2p1));
        const __m256d r = _mm256_sqrt_pd(
            _mm256_mul_pd(log4(u1), _mm256_set1_pd(-2.0)));
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(r, cos2pi4(u2)));
    }
    if (i < n) scalar::fill_normal(key, ctr0 + i, dst + i, n - i);
}

}  // namespace avx2
}  // namespace kpzld::simd

#endif  // __AVX2__ && __FMA__
