#pragma once

#include <vector>

namespace nbfi {

// Gauss-Legendre nodes/weights on [-1, 1].
struct GlRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Cached rule of order n (n >= 1). Thread-compatible: built once per n.
const GlRule& gl_rule(int n);

}  // namespace nbfi
