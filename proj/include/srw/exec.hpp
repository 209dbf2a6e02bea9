#pragma once

namespace srw {

// Execution policy for the data-parallel kernels (supersingular scan,
// lambda-tuple search, per-element group checks).  The serial path is the
// reference implementation; results are identical by construction and the
// test suite compares them.
enum class Exec { serial, parallel };

}  // namespace srw
