#pragma once

#include <complex>

namespace nctorus::detail {

// Unnormalized 1-D DFT of length n, out-of-place. sign = -1 forward, +1 backward.
void dft(int n, int sign, const std::complex<double>* in, std::complex<double>* out);

}  // namespace nctorus::detail
