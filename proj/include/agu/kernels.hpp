#pragma once

#include <cstddef>

namespace agu::kernels {

/// Precomputed segment form used by the batched distance kernels.
/// For a degenerate segment (a == b) ux, uy and inv_len2 are all zero and
/// the distance degenerates to the point distance.
struct SegmentLite {
    double ax = 0.0, ay = 0.0;   // endpoint a
    double ux = 0.0, uy = 0.0;   // b - a
    double inv_len2 = 0.0;       // 1 / |b - a|^2, 0 when degenerate
};

SegmentLite make_segment_lite(double ax, double ay, double bx, double by);

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_supported(Backend b);
const char* backend_name(Backend b);

/// Pin the backend (tests use this to compare variants). Throws
/// std::runtime_error when the requested backend is not supported here.
void force_backend(Backend b);
/// Return to auto-detection (honours AGU_KERNEL_BACKEND=scalar|avx2).
void reset_backend();

// best2[i] = min(best2[i], |p_i - c|^2)
void min_dist2_point(const double* xs, const double* ys, std::size_t n,
                     double cx, double cy, double* best2);

// Same update, also recording which center won. Ties keep the existing
// owner, so feeding centers in index order yields lowest-index assignment.
void min_dist2_point_idx(const double* xs, const double* ys, std::size_t n,
                         double cx, double cy, int center_index,
                         double* best2, int* owner);

// best2[i] = min(best2[i], squared distance from p_i to the segment)
void min_dist2_segment(const double* xs, const double* ys, std::size_t n,
                       const SegmentLite& seg, double* best2);

double max_value(const double* v, std::size_t n);
double min_value(const double* v, std::size_t n);
std::size_t argmax(const double* v, std::size_t n);  // lowest index on ties

}  // namespace agu::kernels
