#include "nbfi/kernels.hpp"

namespace nbfi::kernels {

double piece_sum_scalar(const double* w, const double* x, const double* y, std::size_t n,
                        const Quad* a, const Quad* b) {
    double acc = 0.0;
    if (a && b) {
        for (std::size_t k = 0; k < n; ++k) {
            const double xv = x[k], yv = y[k];
            acc += w[k] * (a->c0 + xv * (a->c1 + xv * a->c2) + b->c0 + yv * (b->c1 + yv * b->c2));
        }
    } else if (a) {
        for (std::size_t k = 0; k < n; ++k) {
            const double xv = x[k];
            acc += w[k] * (a->c0 + xv * (a->c1 + xv * a->c2));
        }
    } else if (b) {
        for (std::size_t k = 0; k < n; ++k) {
            const double yv = y[k];
            acc += w[k] * (b->c0 + yv * (b->c1 + yv * b->c2));
        }
    }
    return acc;
}

}  // namespace nbfi::kernels
