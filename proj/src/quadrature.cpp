#include "nbfi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace nbfi {

namespace {

// Newton iteration on the Legendre recurrence; nodes seeded with the usual
// Chebyshev-based estimate.
GlRule build_rule(int n) {
    GlRule rule;
    rule.x.resize(static_cast<size_t>(n));
    rule.w.resize(static_cast<size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.x[static_cast<size_t>(i)] = -x;
        rule.w[static_cast<size_t>(i)] = w;
        rule.x[static_cast<size_t>(n - 1 - i)] = x;
        rule.w[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace

const GlRule& gl_rule(int n) {
    static std::mutex mu;
    static std::map<int, GlRule> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

}  // namespace nbfi
