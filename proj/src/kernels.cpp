#include "agu/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>

// Scalar reference kernels plus the runtime dispatch table. The AVX2
// variants (kernels_avx2.cpp) are built in a separate translation unit with
// -mavx2 and must produce bit-identical results; the equivalence tests
// enforce that, which is why neither side uses fused multiply-add.

namespace agu::kernels {

SegmentLite make_segment_lite(double ax, double ay, double bx, double by) {
    SegmentLite s;
    s.ax = ax;
    s.ay = ay;
    s.ux = bx - ax;
    s.uy = by - ay;
    const double len2 = s.ux * s.ux + s.uy * s.uy;
    if (len2 > 0.0) {
        s.inv_len2 = 1.0 / len2;
    } else {
        s.ux = s.uy = s.inv_len2 = 0.0;
    }
    return s;
}

namespace scalar {

void min_dist2_point(const double* xs, const double* ys, std::size_t n,
                     double cx, double cy, double* best2) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - cx;
        const double dy = ys[i] - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best2[i]) best2[i] = d2;
    }
}

void min_dist2_point_idx(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy, int center_index,
                         double* best2, int* owner) {
    for (std::size_t i = 0; i < n; ++i) {
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
    for (std::size_t i = 0; i < n; ++i) {
        const double dxa = xs[i] - seg.ax;
        const double dya = ys[i] - seg.ay;
        double t = (dxa * seg.ux + dya * seg.uy) * seg.inv_len2;
        t = std::min(std::max(t, 0.0), 1.0);
        const double ex = dxa - t * seg.ux;
        const double ey = dya - t * seg.uy;
        const double d2 = ex * ex + ey * ey;
        if (d2 < best2[i]) best2[i] = d2;
    }
}

double max_value(const double* v, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] > m) m = v[i];
    return m;
}

double min_value(const double* v, std::size_t n) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < m) m = v[i];
    return m;
}

std::size_t argmax(const double* v, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

}  // namespace scalar

#if defined(AGU_HAVE_AVX2_TU)
namespace avx2 {
void min_dist2_point(const double*, const double*, std::size_t, double, double, double*);
void min_dist2_point_idx(const double*, const double*, std::size_t, double, double, int,
                         double*, int*);
void min_dist2_segment(const double*, const double*, std::size_t, const SegmentLite&, double*);
double max_value(const double*, std::size_t);
double min_value(const double*, std::size_t);
std::size_t argmax(const double*, std::size_t);
}  // namespace avx2
#endif

namespace {

struct Vtable {
    void (*min_dist2_point)(const double*, const double*, std::size_t, double, double, double*);
    void (*min_dist2_point_idx)(const double*, const double*, std::size_t, double, double, int,
                                double*, int*);
    void (*min_dist2_segment)(const double*, const double*, std::size_t, const SegmentLite&,
                              double*);
    double (*max_value)(const double*, std::size_t);
    double (*min_value)(const double*, std::size_t);
    std::size_t (*argmax)(const double*, std::size_t);
};

constexpr Vtable kScalarTable{scalar::min_dist2_point, scalar::min_dist2_point_idx,
                              scalar::min_dist2_segment, scalar::max_value,
                              scalar::min_value, scalar::argmax};

#if defined(AGU_HAVE_AVX2_TU)
constexpr Vtable kAvx2Table{avx2::min_dist2_point, avx2::min_dist2_point_idx,
                            avx2::min_dist2_segment, avx2::max_value,
                            avx2::min_value, avx2::argmax};
#endif

bool cpu_has_avx2() {
#if defined(AGU_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("AGU_KERNEL_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_forced{-1};

Backend current_backend() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Backend>(forced);
    static const Backend detected = detect_backend();
    return detected;
}

const Vtable& table() {
#if defined(AGU_HAVE_AVX2_TU)
    if (current_backend() == Backend::avx2) return kAvx2Table;
#endif
    return kScalarTable;
}

}  // namespace

Backend active_backend() { return current_backend(); }

bool backend_supported(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
    if (!backend_supported(b))
        throw std::runtime_error("kernel backend not supported on this CPU");
    g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_forced.store(-1, std::memory_order_relaxed); }

void min_dist2_point(const double* xs, const double* ys, std::size_t n,
                     double cx, double cy, double* best2) {
    table().min_dist2_point(xs, ys, n, cx, cy, best2);
}

void min_dist2_point_idx(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy, int center_index,
                         double* best2, int* owner) {
    table().min_dist2_point_idx(xs, ys, n, cx, cy, center_index, best2, owner);
}

void min_dist2_segment(const double* xs, const double* ys, std::size_t n,
                       const SegmentLite& seg, double* best2) {
    table().min_dist2_segment(xs, ys, n, seg, best2);
}

double max_value(const double* v, std::size_t n) { return table().max_value(v, n); }
double min_value(const double* v, std::size_t n) { return table().min_value(v, n); }
std::size_t argmax(const double* v, std::size_t n) { return table().argmax(v, n); }

}  // namespace agu::kernels
