#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bcipher {

/// Moduli |X_j| of the first `count` DFT coefficients of a real signal,
/// X_j = sum_k x_k exp(-2 pi i j k / n). Any n is supported.
/// `count` must not exceed n / 2 + 1.
std::vector<double> dft_moduli(std::span<const double> signal, std::size_t count);

} // namespace bcipher
