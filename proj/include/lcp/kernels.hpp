#pragma once

#include <string_view>

namespace lcp::kernels {

/// Dense float32 primitives behind the policy network's hot loops.
/// All matrices are row-major and may alias nothing.
///
/// Two implementations exist: a scalar reference and an AVX2+FMA variant.
/// The active one is picked at runtime (see select_backend). The AVX2 lane is
/// equivalence-tested against the scalar lane; results may differ only by
/// floating-point reassociation.
struct Backend {
    const char* name;

    /// C (m x n) = A (m x k) * B^T, with B stored as n rows of length k.
    /// accumulate=true adds into C instead of overwriting.
    void (*gemm_nt)(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate);

    /// C (m x n) = A (m x k) * B, with B stored as k rows of length n.
    void (*gemm_nn)(int m, int n, int k, const float* A, const float* B, float* C, bool accumulate);

    /// C (k x n) += A^T * B, with A (m x k) and B (m x n). Always accumulates.
    void (*gemm_tn_acc)(int m, int n, int k, const float* A, const float* B, float* C);

    float (*dot)(const float* a, const float* b, int n);

    /// y += alpha * x
    void (*axpy)(int n, float alpha, const float* x, float* y);

    void (*scale)(int n, float alpha, float* x);

    void (*relu)(int n, const float* x, float* y);

    /// grad *= (activated > 0), where `activated` is the post-ReLU buffer.
    void (*relu_backward)(int n, const float* activated, float* grad);
};

const Backend& scalar_backend();

/// AVX2+FMA backend, or nullptr when the CPU lacks support.
const Backend* avx2_backend();

/// Selects the active backend: "auto" (best available), "scalar", or "avx2".
/// Throws ValidationError for unknown names or unsupported hardware.
void select_backend(std::string_view name);

/// Active backend. First call resolves LCP_KERNELS (scalar|avx2), defaulting
/// to the best supported lane.
const Backend& active();

}  // namespace lcp::kernels
