#pragma once

#include <cstddef>

namespace nbfi::kernels {

// Quadratic c0 + c1 t + c2 t^2.
struct Quad {
    double c0 = 0, c1 = 0, c2 = 0;
};

// Inner quadrature kernel: sum over nodes of w[k] * (a(x[k]) + b(y[k])).
// Either polynomial may be null. This is the hot loop of the pairwise
// collision integrals; the piecewise-CDF machinery reduces every smooth piece
// to exactly this shape.
double piece_sum(const double* w, const double* x, const double* y, std::size_t n,
                 const Quad* a, const Quad* b);

double piece_sum_scalar(const double* w, const double* x, const double* y, std::size_t n,
                        const Quad* a, const Quad* b);
double piece_sum_avx2(const double* w, const double* x, const double* y, std::size_t n,
                      const Quad* a, const Quad* b);

enum class Isa { scalar, avx2 };

bool avx2_available();

// Selected implementation: AVX2 when the CPU supports it, unless overridden
// by force_isa() or the NBFI_KERNEL environment variable (scalar|avx2|auto).
Isa active_isa();
void force_isa(Isa isa);
void reset_isa();

}  // namespace nbfi::kernels
