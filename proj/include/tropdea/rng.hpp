#ifndef TROPDEA_RNG_HPP
#define TROPDEA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace tropdea {

/// Deterministic PRNG (splitmix64). The standard <random> distributions are
/// implementation-defined, so every draw used in reports goes through this
/// generator to keep outputs byte-identical across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent stream for work item `index`; safe to create in parallel.
    static Rng stream(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return Rng(mix.next());
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1); never returns 0 so logs are safe.
    double uniform() {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return next() % n; }

    double exponential() { return -std::log(uniform()); }

    /// Dirichlet(1,...,1): normalized iid exponentials.
    std::vector<double> dirichlet(size_t n) {
        std::vector<double> u(n);
        double s = 0.0;
        for (double& v : u) s += (v = exponential());
        for (double& v : u) v /= s;
        return u;
    }

private:
    uint64_t state_;
};

} // namespace tropdea

#endif
