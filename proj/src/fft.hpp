#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lacunary::detail {

// In-place radix-2 transform computing a_j <- sum_i a_i exp(sign 2 pi i ij/N),
// unnormalized. N must be a power of two.
void fft_in_place(std::vector<std::complex<double>>& a, int sign);

// exp(2 pi i t / n) for 0 <= t < n, evaluated from the reduced angle so the
// error does not grow with t.
std::complex<double> root_of_unity(std::size_t t, std::size_t n);

}  // namespace lacunary::detail
