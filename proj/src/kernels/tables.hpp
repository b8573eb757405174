#pragma once

#include "qjudge/kernels.hpp"

namespace qjudge::kernels::detail {

// Per-backend hooks for the dispatcher. A backend that was not compiled in
// (wrong architecture) returns nullptr from its table accessor; runtime_ok
// additionally checks CPU features on the running machine.

const KernelTable* avx2_table();
bool avx2_runtime_ok();

const KernelTable* neon_table();
bool neon_runtime_ok();

}  // namespace qjudge::kernels::detail
