#include "lcp/kernels.hpp"

#include <algorithm>

namespace lcp::kernels {
namespace {

void gemm_nt_scalar(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
    for (int i = 0; i < m; ++i) {
        const float* a = A + static_cast<size_t>(i) * k;
        float* c = C + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const float* b = B + static_cast<size_t>(j) * k;
            float acc = 0.0f;
            for (int l = 0; l < k; ++l) acc += a[l] * b[l];
            c[j] = accumulate ? c[j] + acc : acc;
        }
    }
}

void gemm_nn_scalar(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate) {
    for (int i = 0; i < m; ++i) {
        float* c = C + static_cast<size_t>(i) * n;
        if (!accumulate) std::fill(c, c + n, 0.0f);
        const float* a = A + static_cast<size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const float al = a[l];
            const float* b = B + static_cast<size_t>(l) * n;
            for (int j = 0; j < n; ++j) c[j] += al * b[j];
        }
    }
}

void gemm_tn_acc_scalar(int m, int n, int k, const float* A, const float* B, float* C) {
    for (int i = 0; i < m; ++i) {
        const float* a = A + static_cast<size_t>(i) * k;
        const float* b = B + static_cast<size_t>(i) * n;
        for (int l = 0; l < k; ++l) {
            const float al = a[l];
            float* c = C + static_cast<size_t>(l) * n;
            for (int j = 0; j < n; ++j) c[j] += al * b[j];
        }
    }
}

float dot_scalar(const float* a, const float* b, int n) {
    float acc = 0.0f;
    for (int i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(int n, float alpha, const float* x, float* y) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(int n, float alpha, float* x) {
    for (int i = 0; i < n; ++i) x[i] *= alpha;
}

void relu_scalar(int n, const float* x, float* y) {
    for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward_scalar(int n, const float* activated, float* grad) {
    for (int i = 0; i < n; ++i) {
        if (activated[i] <= 0.0f) grad[i] = 0.0f;
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",        gemm_nt_scalar, gemm_nn_scalar, gemm_tn_acc_scalar,
        dot_scalar,      axpy_scalar,    scale_scalar,   relu_scalar,
        relu_backward_scalar,
    };
    return backend;
}

}  // namespace lcp::kernels
