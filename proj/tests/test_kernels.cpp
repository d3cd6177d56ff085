#include <doctest.h>

#include <cmath>
#include <vector>

#include "lcp/common.hpp"
#include "lcp/kernels.hpp"
#include "lcp/rng.hpp"

using namespace lcp;
namespace k = lcp::kernels;

namespace {

std::vector<float> random_vec(Rng& rng, int n, float span = 1.0f) {
    std::vector<float> v(static_cast<size_t>(n));
    for (auto& x : v) x = static_cast<float>(rng.uniform(-span, span));
    return v;
}

void check_close(const std::vector<float>& a, const std::vector<float>& b, float tol) {
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const float scale = std::max({1.0f, std::fabs(a[i]), std::fabs(b[i])});
        CHECK(std::fabs(a[i] - b[i]) <= tol * scale);
    }
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar gemm_nt matches a hand-computed product") {
    // A = [[1,2],[3,4]], B rows = [[5,6],[7,8]]  =>  C = A * B^T
    const std::vector<float> A{1, 2, 3, 4};
    const std::vector<float> B{5, 6, 7, 8};
    std::vector<float> C(4, -1.0f);
    k::scalar_backend().gemm_nt(2, 2, 2, A.data(), B.data(), C.data(), false);
    CHECK(C[0] == doctest::Approx(17));
    CHECK(C[1] == doctest::Approx(23));
    CHECK(C[2] == doctest::Approx(39));
    CHECK(C[3] == doctest::Approx(53));

    k::scalar_backend().gemm_nt(2, 2, 2, A.data(), B.data(), C.data(), true);
    CHECK(C[3] == doctest::Approx(106));
}

TEST_CASE("scalar gemm_nn matches gemm_nt with transposed weights") {
    Rng rng(7);
    const int m = 5, n = 9, kk = 13;
    const auto A = random_vec(rng, m * kk);
    const auto B = random_vec(rng, kk * n);  // (k x n)
    std::vector<float> Bt(static_cast<size_t>(n) * kk);
    for (int i = 0; i < kk; ++i)
        for (int j = 0; j < n; ++j) Bt[static_cast<size_t>(j) * kk + i] = B[static_cast<size_t>(i) * n + j];
    std::vector<float> C1(static_cast<size_t>(m) * n), C2(static_cast<size_t>(m) * n);
    k::scalar_backend().gemm_nn(m, n, kk, A.data(), B.data(), C1.data(), false);
    k::scalar_backend().gemm_nt(m, n, kk, A.data(), Bt.data(), C2.data(), false);
    check_close(C1, C2, 1e-6f);
}

TEST_CASE("avx2 lane agrees with the scalar reference") {
    const k::Backend* avx2 = k::avx2_backend();
    if (!avx2) return;  // nothing to compare on non-AVX2 hosts
    Rng rng(42);
    // Deliberately odd shapes to hit every tail path.
    const int shapes[][3] = {{1, 1, 1},   {2, 4, 8},    {3, 5, 7},    {20, 128, 128},
                             {17, 384, 128}, {20, 512, 128}, {1, 129, 130}, {9, 31, 33}};
    for (const auto& s : shapes) {
        const int m = s[0], n = s[1], kk = s[2];
        const auto A = random_vec(rng, m * kk);
        const auto B = random_vec(rng, n * kk);
        const auto Bnn = random_vec(rng, kk * n);
        std::vector<float> C0(static_cast<size_t>(m) * n, 0.5f), C1 = C0;

        k::scalar_backend().gemm_nt(m, n, kk, A.data(), B.data(), C0.data(), true);
        avx2->gemm_nt(m, n, kk, A.data(), B.data(), C1.data(), true);
        check_close(C0, C1, 2e-5f);

        k::scalar_backend().gemm_nn(m, n, kk, A.data(), Bnn.data(), C0.data(), false);
        avx2->gemm_nn(m, n, kk, A.data(), Bnn.data(), C1.data(), false);
        check_close(C0, C1, 2e-5f);

        std::vector<float> G0(static_cast<size_t>(kk) * n, 0.25f), G1 = G0;
        const auto Bt = random_vec(rng, m * n);
        k::scalar_backend().gemm_tn_acc(m, n, kk, A.data(), Bt.data(), G0.data());
        avx2->gemm_tn_acc(m, n, kk, A.data(), Bt.data(), G1.data());
        check_close(G0, G1, 2e-5f);
    }
}

TEST_CASE("vector ops agree across lanes") {
    const k::Backend* avx2 = k::avx2_backend();
    if (!avx2) return;
    Rng rng(3);
    for (int n : {1, 7, 8, 9, 64, 100, 257}) {
        auto x = random_vec(rng, n), y = random_vec(rng, n);
        auto y2 = y;
        k::scalar_backend().axpy(n, 0.37f, x.data(), y.data());
        avx2->axpy(n, 0.37f, x.data(), y2.data());
        check_close(y, y2, 1e-6f);

        const float d0 = k::scalar_backend().dot(x.data(), y.data(), n);
        const float d1 = avx2->dot(x.data(), y2.data(), n);
        CHECK(std::fabs(d0 - d1) <= 1e-4f * std::max(1.0f, std::fabs(d0)));

        std::vector<float> r0(static_cast<size_t>(n)), r1(static_cast<size_t>(n));
        k::scalar_backend().relu(n, x.data(), r0.data());
        avx2->relu(n, x.data(), r1.data());
        check_close(r0, r1, 0.0f);

        auto g0 = random_vec(rng, n);
        auto g1 = g0;
        k::scalar_backend().relu_backward(n, r0.data(), g0.data());
        avx2->relu_backward(n, r1.data(), g1.data());
        check_close(g0, g1, 0.0f);

        auto s0 = x;
        auto s1 = x;
        k::scalar_backend().scale(n, -1.5f, s0.data());
        avx2->scale(n, -1.5f, s1.data());
        check_close(s0, s1, 0.0f);
    }
}

TEST_CASE("backend selection") {
    k::select_backend("scalar");
    CHECK(std::string(k::active().name) == "scalar");
    CHECK_THROWS_AS(k::select_backend("neon"), ValidationError);
    k::select_backend("auto");
    if (k::avx2_backend()) CHECK(std::string(k::active().name) == "avx2");
}

}  // TEST_SUITE
