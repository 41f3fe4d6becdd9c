#pragma once

namespace phylocons {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results.
enum class Execution { kSerial, kParallel };

}  // namespace phylocons
