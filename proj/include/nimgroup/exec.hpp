#pragma once

namespace nimgroup {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Exec { Serial, Parallel };

}  // namespace nimgroup
