#include "qjudge/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace qjudge::kernels {
namespace {

const KernelTable* table_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &scalar_table();
        case Backend::avx2:
            return detail::avx2_table();
        case Backend::neon:
            return detail::neon_table();
    }
    return nullptr;
}

bool runtime_ok(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return detail::avx2_table() != nullptr && detail::avx2_runtime_ok();
        case Backend::neon:
            return detail::neon_table() != nullptr && detail::neon_runtime_ok();
    }
    return false;
}

Backend detect_best() {
    if (runtime_ok(Backend::avx2)) return Backend::avx2;
    if (runtime_ok(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

Backend resolve_env() {
    const char* env = std::getenv("QJUDGE_KERNELS");
    if (env == nullptr || *env == '\0') return detect_best();
    const std::string want(env);
    if (want == "auto") return detect_best();
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (want == backend_name(b)) {
            if (!runtime_ok(b)) {
                throw std::invalid_argument("QJUDGE_KERNELS=" + want +
                                            " is not available on this machine");
            }
            return b;
        }
    }
    throw std::invalid_argument("QJUDGE_KERNELS=" + want +
                                " is not recognised (scalar|avx2|neon|auto)");
}

struct Active {
    Backend backend;
    const KernelTable* table;
};

Active& state() {
    static Active a = [] {
        const Backend b = resolve_env();
        return Active{b, table_for(b)};
    }();
    return a;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "?";
}

bool backend_available(Backend b) { return runtime_ok(b); }

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (runtime_ok(b)) out.push_back(b);
    }
    return out;
}

const KernelTable& active() { return *state().table; }

Backend active_backend() { return state().backend; }

void select_backend(Backend b) {
    if (!runtime_ok(b)) {
        throw std::invalid_argument(std::string("kernel backend ") + backend_name(b) +
                                    " is not available on this machine");
    }
    state() = Active{b, table_for(b)};
}

void select_best_backend() {
    const Backend b = resolve_env();
    state() = Active{b, table_for(b)};
}

}  // namespace qjudge::kernels
