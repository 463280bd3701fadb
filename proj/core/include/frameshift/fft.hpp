#pragma once

#include <complex>
#include <cstddef>

namespace frameshift::fft {

// Unnormalized DFT (sign -1 forward, +1 inverse), in-place capable.
// Backed by a process-wide plan cache; safe to call concurrently.
void forward(std::complex<double>* data, int n, int dim);
void inverse(std::complex<double>* data, int n, int dim);

}  // namespace frameshift::fft
