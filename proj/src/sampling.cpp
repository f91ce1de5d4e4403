#include "cyclomon/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace cyclomon {

Vector SampleRng::dirichlet(int k) {
    Vector lam(k);
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        double u = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        lam[i] = -std::log(u);
        total += lam[i];
    }
    for (int i = 0; i < k; ++i) lam[i] /= total;
    return lam;
}

Vector SampleRng::uniform_box(const Vector& lo, const Vector& hi) {
    Vector x(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) x[i] = uniform(lo[i], hi[i]);
    return x;
}

std::pair<Vector, Vector> bounding_box(const std::vector<Vector>& points) {
    Vector lo = points.front(), hi = points.front();
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    return {lo, hi};
}

}  // namespace cyclomon
