#pragma once

namespace mi {

/// Selects between the OpenMP kernel and its serial reference. Both
/// produce identical results; the serial path is kept for testing and
/// benchmarking.
enum class Execution { serial, parallel };

/// Worker threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace mi
