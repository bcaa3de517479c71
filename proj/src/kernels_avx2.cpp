#include "nbfi/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace nbfi::kernels {

namespace {

inline __m256d quad_eval(__m256d t, const Quad& q) {
    const __m256d c0 = _mm256_set1_pd(q.c0);
    const __m256d c1 = _mm256_set1_pd(q.c1);
    const __m256d c2 = _mm256_set1_pd(q.c2);
    return _mm256_fmadd_pd(t, _mm256_fmadd_pd(t, c2, c1), c0);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double piece_sum_avx2(const double* w, const double* x, const double* y, std::size_t n,
                      const Quad* a, const Quad* b) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d wv = _mm256_loadu_pd(w + k);
        __m256d term = _mm256_setzero_pd();
        if (a) term = quad_eval(_mm256_loadu_pd(x + k), *a);
        if (b) term = _mm256_add_pd(term, quad_eval(_mm256_loadu_pd(y + k), *b));
        acc = _mm256_fmadd_pd(wv, term, acc);
    }
    double tail = 0.0;
    for (; k < n; ++k) {
        double term = 0.0;
        if (a) {
            const double xv = x[k];
            term += a->c0 + xv * (a->c1 + xv * a->c2);
        }
        if (b) {
            const double yv = y[k];
            term += b->c0 + yv * (b->c1 + yv * b->c2);
        }
        tail += w[k] * term;
    }
    return hsum(acc) + tail;
}

}  // namespace nbfi::kernels

#else

namespace nbfi::kernels {

double piece_sum_avx2(const double* w, const double* x, const double* y, std::size_t n,
                      const Quad* a, const Quad* b) {
    return piece_sum_scalar(w, x, y, n, a, b);
}

}  // namespace nbfi::kernels

#endif
