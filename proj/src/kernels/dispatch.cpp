#include "lcp/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "lcp/common.hpp"

namespace lcp::kernels {
namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* resolve(std::string_view name) {
    if (name == "scalar") return &scalar_backend();
    if (name == "avx2") {
        const Backend* b = avx2_backend();
        if (!b) throw ValidationError("kernel backend 'avx2' not supported on this CPU");
        return b;
    }
    if (name == "auto" || name.empty()) {
        if (const Backend* b = avx2_backend()) return b;
        return &scalar_backend();
    }
    throw ValidationError("unknown kernel backend: " + std::string(name));
}

}  // namespace

void select_backend(std::string_view name) { g_active.store(resolve(name), std::memory_order_release); }

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        const char* env = std::getenv("LCP_KERNELS");
        b = resolve(env ? std::string_view(env) : std::string_view("auto"));
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

}  // namespace lcp::kernels
