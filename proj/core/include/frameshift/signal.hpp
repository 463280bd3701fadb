#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "frameshift/grid.hpp"

namespace frameshift {

using cplx = std::complex<double>;

enum class Domain : std::uint8_t { Space = 0, Frequency = 1 };

/// Complex-valued function sampled on a periodic uniform grid.
///
/// Space-domain samples are values f(k*spacing). Frequency-domain samples
/// use the continuous-transform normalization: samples[k] approximates
/// fhat(freq(k)) = spacing^dim * sum_m f[m] e^{-2pi i freq(k) x_m}, so that
/// analytically defined filters evaluated on the frequency grid multiply
/// directly against to_frequency() output.
struct SampledSignal {
    Grid grid;
    Domain domain = Domain::Space;
    std::vector<cplx> samples;

    SampledSignal() = default;
    SampledSignal(Grid g, Domain d)
        : grid(g), domain(d), samples(g.total(), cplx{0.0, 0.0}) {
        grid.validate();
    }

    std::size_t size() const { return samples.size(); }
    cplx& at(std::size_t i) { return samples[i]; }
    const cplx& at(std::size_t i) const { return samples[i]; }

    /// Row-major index for d=2.
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * grid.n + j; }
};

// Domain transforms (unitary round trip in-model).
SampledSignal to_frequency(const SampledSignal& f);
SampledSignal to_space(const SampledSignal& f);

// Linear operations.
SampledSignal circular_convolve(const SampledSignal& f, const SampledSignal& g);
SampledSignal translate(const SampledSignal& f, const std::vector<double>& t);
SampledSignal modulate(const SampledSignal& f, const SampledSignal& phase);
SampledSignal dilate_downsample(const SampledSignal& f, int S);

struct BandlimitSpec {
    double radius = 0.0;  // cycles per unit length, must be < nyquist
    std::uint64_t seed = 0;
};

/// Random signal with fhat supported strictly inside |omega| < radius,
/// unit L2 norm, deterministic in the seed.
SampledSignal random_bandlimited(const BandlimitSpec& spec, const Grid& grid);

/// Unconstrained complex Gaussian noise signal (test plumbing).
SampledSignal random_noise(const Grid& grid, std::uint64_t seed);

double norm_l2(const SampledSignal& f);
cplx inner(const SampledSignal& f, const SampledSignal& g);

/// Discrete delta at index 0 with value 1/spacing^dim (convolution identity).
SampledSignal impulse(const Grid& grid);

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator-(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator*(double c, const SampledSignal& f);

}  // namespace frameshift
