#include "agu/kernels.hpp"

#if defined(AGU_HAVE_AVX2_TU)

#include <immintrin.h>

#include <limits>

// AVX2 variants of the batch kernels. Operation order mirrors the scalar
// reference exactly (mul/add/sub, no FMA) so both backends round
// identically and the equivalence tests can compare bit for bit.

namespace agu::kernels::avx2 {

void min_dist2_point(const double* xs, const double* ys, std::size_t n,
                     double cx, double cy, double* best2) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d cur = _mm256_loadu_pd(best2 + i);
        _mm256_storeu_pd(best2 + i, _mm256_min_pd(cur, d2));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best2[i]) best2[i] = d2;
    }
}

void min_dist2_point_idx(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy, int center_index,
                         double* best2, int* owner) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m128i vidx = _mm_set1_epi32(center_index);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d cur = _mm256_loadu_pd(best2 + i);
        const __m256d lt = _mm256_cmp_pd(d2, cur, _CMP_LT_OQ);
        _mm256_storeu_pd(best2 + i, _mm256_blendv_pd(cur, d2, lt));
        // compress the 4 x 64-bit masks into a 4 x 32-bit mask for owners
        const __m128i ltlo = _mm256_castsi256_si128(_mm256_castpd_si256(lt));
        const __m128i lthi = _mm256_extracti128_si256(_mm256_castpd_si256(lt), 1);
        const __m128i mask32 = _mm_castps_si128(_mm_shuffle_ps(
            _mm_castsi128_ps(ltlo), _mm_castsi128_ps(lthi), _MM_SHUFFLE(3, 1, 3, 1)));
        const __m128i curown = _mm_loadu_si128(reinterpret_cast<const __m128i*>(owner + i));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(owner + i),
                         _mm_blendv_epi8(curown, vidx, mask32));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best2[i]) {
            best2[i] = d2;
            owner[i] = center_index;
        }
    }
}

void min_dist2_segment(const double* xs, const double* ys, std::size_t n,
                       const SegmentLite& seg, double* best2) {
    const __m256d vax = _mm256_set1_pd(seg.ax);
    const __m256d vay = _mm256_set1_pd(seg.ay);
    const __m256d vux = _mm256_set1_pd(seg.ux);
    const __m256d vuy = _mm256_set1_pd(seg.uy);
    const __m256d vinv = _mm256_set1_pd(seg.inv_len2);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dxa = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vax);
        const __m256d dya = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vay);
        __m256d t = _mm256_mul_pd(
            _mm256_add_pd(_mm256_mul_pd(dxa, vux), _mm256_mul_pd(dya, vuy)), vinv);
        t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
        const __m256d ex = _mm256_sub_pd(dxa, _mm256_mul_pd(t, vux));
        const __m256d ey = _mm256_sub_pd(dya, _mm256_mul_pd(t, vuy));
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
        const __m256d cur = _mm256_loadu_pd(best2 + i);
        _mm256_storeu_pd(best2 + i, _mm256_min_pd(cur, d2));
    }
    for (; i < n; ++i) {
        const double dxa = xs[i] - seg.ax;
        const double dya = ys[i] - seg.ay;
        double t = (dxa * seg.ux + dya * seg.uy) * seg.inv_len2;
        t = t < 0.0 ? 0.0 : t;
        t = t > 1.0 ? 1.0 : t;
        const double ex = dxa - t * seg.ux;
        const double ey = dya - t * seg.uy;
        const double d2 = ex * ex + ey * ey;
        if (d2 < best2[i]) best2[i] = d2;
    }
}

double max_value(const double* v, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    if (n >= 4) {
        __m256d acc = _mm256_loadu_pd(v);
        i = 4;
        for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(v + i));
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        for (double lane : lanes)
            if (lane > m) m = lane;
    }
    for (; i < n; ++i)
        if (v[i] > m) m = v[i];
    return m;
}

double min_value(const double* v, std::size_t n) {
    double m = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    if (n >= 4) {
        __m256d acc = _mm256_loadu_pd(v);
        i = 4;
        for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(v + i));
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        for (double lane : lanes)
            if (lane < m) m = lane;
    }
    for (; i < n; ++i)
        if (v[i] < m) m = v[i];
    return m;
}

std::size_t argmax(const double* v, std::size_t n) {
    if (n == 0) return 0;
    const double m = max_value(v, n);
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == m) return i;
    return 0;
}

}  // namespace agu::kernels::avx2

#endif  // AGU_HAVE_AVX2_TU
