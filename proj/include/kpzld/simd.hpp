#pragma once
// Runtime-dispatched kernels for the data-parallel inner loops (potential
// multiplies, quadrature reductions, counter-based Gaussian noise). The
// scalar path is the reference; vector paths implement the identical
// algorithm (same coefficients, same fma placement, same lane structure)
// so all backends produce bit-identical output. Selection happens once at
// startup from cpuid; tests can force a backend.

#include <cstddef>
#include <cstdint>

namespace kpzld::simd {

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name();
// Returns false if the requested backend is unavailable on this machine.
bool force_backend(Backend b);
bool backend_available(Backend b);

// y[i] = exp(x[i]); inputs are clamped to [-690, 690].
void vexp(const double* x, double* y, std::size_t n);

// z[i] *= exp(e[i])
void mul_exp(double* z, const double* e, std::size_t n);

// y[i] = log(x[i]); requires x[i] > 0 finite.
void vlog(const double* x, double* y, std::size_t n);

// sum_i a[i]*b[i] with a fixed 4-lane accumulation pattern.
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i]*b[i]*c[i]
double dot3(const double* a, const double* b, const double* c, std::size_t n);

double sum(const double* a, std::size_t n);

// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// z[i] *= (1 + a*g[i]); returns how many z[i] ended up <= 0.
std::size_t noise_mult(double* z, const double* g, double a, std::size_t n);

// dst[i] = standard normal derived from (key, ctr0+i) alone (Box-Muller on
// two splitmix64 hashes), independent of call slicing.
void fill_normal(std::uint64_t key, std::uint64_t ctr0, double* dst,
                 std::size_t n);

// Reference (always-scalar) entry points, used by the equivalence tests.
namespace scalar {
void vexp(const double* x, double* y, std::size_t n);
void mul_exp(double* z, const double* e, std::size_t n);
void vlog(const double* x, double* y, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* a, const double* b, const double* c, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
std::size_t noise_mult(double* z, const double* g, double a, std::size_t n);
void fill_normal(std::uint64_t key, std::uint64_t ctr0, double* dst,
                 std::size_t n);
}  // namespace scalar

}  // namespace kpzld::simd
