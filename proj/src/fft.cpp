#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace lacunary::detail {

std::complex<double> root_of_unity(std::size_t t, std::size_t n) {
  t %= n;
  // Reduce to the first octant so sin/cos arguments stay small.
  const std::size_t eighth = n / 8;
  if (n % 8 != 0 || eighth == 0) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
  }
  const std::size_t quarter = 2 * eighth;
  const std::size_t q = t / quarter;
  const std::size_t r = t % quarter;
  double c, s;
  if (r <= eighth) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(r) /
                     static_cast<double>(n);
    c = std::cos(a);
    s = std::sin(a);
  } else {
    const double a = 2.0 * std::numbers::pi *
                     static_cast<double>(quarter - r) / static_cast<double>(n);
    c = std::sin(a);
    s = std::cos(a);
  }
  switch (q) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

void fft_in_place(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1U;
    for (; j & bit; bit >>= 1U) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles for the largest stage; smaller stages stride through them.
  std::vector<std::complex<double>> tw(n / 2);
  for (std::size_t t = 0; t < n / 2; ++t) {
    tw[t] = root_of_unity(t, n);
    if (sign < 0) tw[t] = std::conj(tw[t]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1U) {
    const std::size_t half = len >> 1U;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t t = 0; t < half; ++t) {
        const std::complex<double> u = a[i + t];
        const std::complex<double> v = a[i + t + half] * tw[t * stride];
        a[i + t] = u + v;
        a[i + t + half] = u - v;
      }
    }
  }
}

}  // namespace lacunary::detail
