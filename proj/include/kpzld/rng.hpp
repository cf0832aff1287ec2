#pragma once
// Counter-based random numbers: every draw is a pure function of
// (key, counter), so parallel workers can generate disjoint streams
// without shared state and results do not depend on scheduling.

#include <cstdint>
#include <cmath>

namespace kpzld::rng {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline uint64_t splitmix64(uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stateless hash of (key, counter) -> 64 uniform bits.
inline uint64_t hash2(uint64_t key, uint64_t ctr) {
    return splitmix64(splitmix64(key ^ kGolden * ctr) ^ ctr);
}

// Uniform in (0,1]; never returns 0 so log() is safe.
inline double u01(uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// One standard normal from (key, counter) via Box-Muller.
inline double normal(uint64_t key, uint64_t ctr) {
    const double u1 = u01(hash2(key, 2 * ctr));
    const double u2 = u01(hash2(key, 2 * ctr + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

// Small sequential engine for places where a stream is more natural
// (e.g. descent restarts); still seeded deterministically.
class Stream {
public:
    explicit Stream(uint64_t key) : key_(key), ctr_(0) {}
    uint64_t bits() { return hash2(key_, ctr_++); }
    double uniform() { return u01(bits()); }
    double normal() {
        const double u1 = u01(bits());
        const double u2 = u01(bits());
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    uint64_t key_;
    uint64_t ctr_;
};

}  // namespace kpzld::rng
