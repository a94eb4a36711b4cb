#pragma once

#include "bcipher/prng.hpp"

namespace bcipher {

/// Arbitrary-precision evaluation of the map, written directly from the
/// arithmetic definition (no shifts or masks). Only used to cross-check step().
Word32 step_reference(Word32 x, Mu8 mu);

} // namespace bcipher
