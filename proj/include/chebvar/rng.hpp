#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace chebvar {

/// Seeded random source with fixed output streams. The distribution
/// transforms are written out by hand so that a given seed produces the
/// same sequence on every standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t raw() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    std::complex<double> complex_normal() {
        const double a = normal(), b = normal();
        return {a, b};
    }

    /// Unit-modulus complex number with uniform phase in (-max_phase, max_phase].
    std::complex<double> unit_phase(double max_phase = M_PI) {
        const double th = uniform(-max_phase, max_phase);
        return {std::cos(th), std::sin(th)};
    }

    /// Derives an independent stream for a sample index.
    Rng fork(std::uint64_t salt) const {
        std::uint64_t x = seed_ + 0x9e3779b97f4a7c15ull * (salt + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace chebvar
