// AVX2+FMA variants of the dense kernels. This translation unit is compiled
// with -mavx2 -mfma; callers must check avx2_backend() != nullptr first.

#include "lcp/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace lcp::kernels {
namespace {

inline float hsum8(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    __m128 shuf = _mm_movehdup_ps(lo);
    __m128 sums = _mm_add_ps(lo, shuf);
    return _mm_cvtss_f32(_mm_add_ss(sums, _mm_movehl_ps(shuf, sums)));
}

// Sums of four 8-lane accumulators, packed as [s0 s1 s2 s3].
inline __m128 hsum4(__m256 v0, __m256 v1, __m256 v2, __m256 v3) {
    const __m256 t0 = _mm256_hadd_ps(v0, v1);
    const __m256 t1 = _mm256_hadd_ps(v2, v3);
    const __m256 t2 = _mm256_hadd_ps(t0, t1);
    return _mm_add_ps(_mm256_castps256_ps128(t2), _mm256_extractf128_ps(t2, 1));
}

void gemm_nt_avx2(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
    const int k16 = k & ~15;
    const int k8 = k & ~7;
    for (int i = 0; i < m; ++i) {
        const float* a = A + static_cast<size_t>(i) * k;
        float* c = C + static_cast<size_t>(i) * n;
        int j = 0;
        for (; j + 4 <= n; j += 4) {
            const float* b0 = B + static_cast<size_t>(j) * k;
            const float* b1 = b0 + k;
            const float* b2 = b1 + k;
            const float* b3 = b2 + k;
            __m256 s0 = _mm256_setzero_ps(), s1 = _mm256_setzero_ps();
            __m256 s2 = _mm256_setzero_ps(), s3 = _mm256_setzero_ps();
            __m256 r0 = _mm256_setzero_ps(), r1 = _mm256_setzero_ps();
            __m256 r2 = _mm256_setzero_ps(), r3 = _mm256_setzero_ps();
            int l = 0;
            for (; l < k16; l += 16) {
                const __m256 va = _mm256_loadu_ps(a + l);
                const __m256 vb = _mm256_loadu_ps(a + l + 8);
                s0 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b0 + l), s0);
                r0 = _mm256_fmadd_ps(vb, _mm256_loadu_ps(b0 + l + 8), r0);
                s1 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b1 + l), s1);
                r1 = _mm256_fmadd_ps(vb, _mm256_loadu_ps(b1 + l + 8), r1);
                s2 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b2 + l), s2);
                r2 = _mm256_fmadd_ps(vb, _mm256_loadu_ps(b2 + l + 8), r2);
                s3 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b3 + l), s3);
                r3 = _mm256_fmadd_ps(vb, _mm256_loadu_ps(b3 + l + 8), r3);
            }
            for (; l < k8; l += 8) {
                const __m256 va = _mm256_loadu_ps(a + l);
                s0 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b0 + l), s0);
                s1 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b1 + l), s1);
                s2 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b2 + l), s2);
                s3 = _mm256_fmadd_ps(va, _mm256_loadu_ps(b3 + l), s3);
            }
            __m128 dots = hsum4(_mm256_add_ps(s0, r0), _mm256_add_ps(s1, r1),
                                _mm256_add_ps(s2, r2), _mm256_add_ps(s3, r3));
            alignas(16) float d[4];
            _mm_store_ps(d, dots);
            for (; l < k; ++l) {
                d[0] += a[l] * b0[l];
                d[1] += a[l] * b1[l];
                d[2] += a[l] * b2[l];
                d[3] += a[l] * b3[l];
            }
            if (accumulate) {
                c[j] += d[0];
                c[j + 1] += d[1];
                c[j + 2] += d[2];
                c[j + 3] += d[3];
            } else {
                c[j] = d[0];
                c[j + 1] = d[1];
                c[j + 2] = d[2];
                c[j + 3] = d[3];
            }
        }
        for (; j < n; ++j) {
            const float* b = B + static_cast<size_t>(j) * k;
            __m256 s = _mm256_setzero_ps();
            int l = 0;
            for (; l < k8; l += 8) s = _mm256_fmadd_ps(_mm256_loadu_ps(a + l), _mm256_loadu_ps(b + l), s);
            float d = hsum8(s);
            for (; l < k; ++l) d += a[l] * b[l];
            c[j] = accumulate ? c[j] + d : d;
        }
    }
}

// Shared inner pattern for the broadcast-style GEMMs: C_row += a_scalar * B_row.
inline void row_fma(float* c, const float* b, float a, int n) {
    const __m256 va = _mm256_set1_ps(a);
    int j = 0;
    const int n64 = n & ~63;
    for (; j < n64; j += 64) {
        for (int u = 0; u < 64; u += 8) {
            const __m256 vc = _mm256_loadu_ps(c + j + u);
            _mm256_storeu_ps(c + j + u, _mm256_fmadd_ps(va, _mm256_loadu_ps(b + j + u), vc));
        }
    }
    const int n8 = n & ~7;
    for (; j < n8; j += 8) {
        const __m256 vc = _mm256_loadu_ps(c + j);
        _mm256_storeu_ps(c + j, _mm256_fmadd_ps(va, _mm256_loadu_ps(b + j), vc));
    }
    for (; j < n; ++j) c[j] += a * b[j];
}

void gemm_nn_avx2(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
    const int n8 = n & ~7;
    for (int i = 0; i < m; ++i) {
        float* c = C + static_cast<size_t>(i) * n;
        if (!accumulate) {
            const __m256 z = _mm256_setzero_ps();
            int j = 0;
            for (; j < n8; j += 8) _mm256_storeu_ps(c + j, z);
            for (; j < n; ++j) c[j] = 0.0f;
        }
        const float* a = A + static_cast<size_t>(i) * k;
        int l = 0;
        // Two reduction rows per pass halve the traffic on C.
        for (; l + 2 <= k; l += 2) {
            const __m256 a0 = _mm256_set1_ps(a[l]);
            const __m256 a1 = _mm256_set1_ps(a[l + 1]);
            const float* b0 = B + static_cast<size_t>(l) * n;
            const float* b1 = b0 + n;
            int j = 0;
            for (; j < n8; j += 8) {
                __m256 vc = _mm256_loadu_ps(c + j);
                vc = _mm256_fmadd_ps(a0, _mm256_loadu_ps(b0 + j), vc);
                vc = _mm256_fmadd_ps(a1, _mm256_loadu_ps(b1 + j), vc);
                _mm256_storeu_ps(c + j, vc);
            }
            for (; j < n; ++j) c[j] += a[l] * b0[j] + a[l + 1] * b1[j];
        }
        for (; l < k; ++l) row_fma(c, B + static_cast<size_t>(l) * n, a[l], n);
    }
}

void gemm_tn_acc_avx2(int m, int n, int k, const float* A, const float* B, float* C) {
    const int n8 = n & ~7;
    for (int i = 0; i < m; ++i) {
        const float* a = A + static_cast<size_t>(i) * k;
        const float* b = B + static_cast<size_t>(i) * n;
        for (int l = 0; l < k; ++l) {
            const float al = a[l];
            if (al == 0.0f) continue;
            float* c = C + static_cast<size_t>(l) * n;
            const __m256 va = _mm256_set1_ps(al);
            int j = 0;
            for (; j < n8; j += 8) {
                const __m256 vc = _mm256_loadu_ps(c + j);
                _mm256_storeu_ps(c + j, _mm256_fmadd_ps(va, _mm256_loadu_ps(b + j), vc));
            }
            for (; j < n; ++j) c[j] += al * b[j];
        }
    }
}

float dot_avx2(const float* a, const float* b, int n) {
    __m256 s0 = _mm256_setzero_ps();
    __m256 s1 = _mm256_setzero_ps();
    int i = 0;
    const int n16 = n & ~15;
    for (; i < n16; i += 16) {
        s0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), s0);
        s1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), s1);
    }
    const int n8 = n & ~7;
    for (; i < n8; i += 8) s0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), s0);
    float acc = hsum8(_mm256_add_ps(s0, s1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(int n, float alpha, const float* x, float* y) { row_fma(y, x, alpha, n); }

void scale_avx2(int n, float alpha, float* x) {
    const __m256 va = _mm256_set1_ps(alpha);
    int i = 0;
    const int n8 = n & ~7;
    for (; i < n8; i += 8) _mm256_storeu_ps(x + i, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void relu_avx2(int n, const float* x, float* y) {
    const __m256 z = _mm256_setzero_ps();
    int i = 0;
    const int n8 = n & ~7;
    for (; i < n8; i += 8) _mm256_storeu_ps(y + i, _mm256_max_ps(z, _mm256_loadu_ps(x + i)));
    for (; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward_avx2(int n, const float* activated, float* grad) {
    const __m256 z = _mm256_setzero_ps();
    int i = 0;
    const int n8 = n & ~7;
    for (; i < n8; i += 8) {
        const __m256 keep = _mm256_cmp_ps(_mm256_loadu_ps(activated + i), z, _CMP_GT_OQ);
        _mm256_storeu_ps(grad + i, _mm256_and_ps(keep, _mm256_loadu_ps(grad + i)));
    }
    for (; i < n; ++i) {
        if (activated[i] <= 0.0f) grad[i] = 0.0f;
    }
}

}  // namespace

const Backend* avx2_backend() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Backend backend{
        "avx2",    gemm_nt_avx2, gemm_nn_avx2, gemm_tn_acc_avx2,
        dot_avx2,  axpy_avx2,    scale_avx2,   relu_avx2,
        relu_backward_avx2,
    };
    return &backend;
}

}  // namespace lcp::kernels

#else

namespace lcp::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace lcp::kernels

#endif
