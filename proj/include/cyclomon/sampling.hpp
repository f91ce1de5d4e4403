#pragma once

// Seeded sampling used by the scan/report operations. Doubles are derived
// from raw mt19937_64 words so identical seeds give identical streams on
// every platform.

#include <cstdint>
#include <random>

#include "cyclomon/core.hpp"

namespace cyclomon {

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {
        // 53 random bits -> [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Dirichlet(1,...,1): uniform over the unit simplex.
    Vector dirichlet(int k);

    Vector uniform_box(const Vector& lo, const Vector& hi);

private:
    std::mt19937_64 gen_;
};

/// Componentwise min/max of a point list, as a (lo, hi) box.
std::pair<Vector, Vector> bounding_box(const std::vector<Vector>& points);

}  // namespace cyclomon
