#pragma once

#include <optional>
#include <string>

#include "frameshift/signal.hpp"

namespace frameshift {

enum class PoolKind { Subsample, Average };

/// Pooling through dilation: optional averaging convolution followed by the
/// unitary-in-the-limit dilation/downsampling f -> S^{d/2} f(S.).
struct PoolingSpec {
    PoolKind kind = PoolKind::Subsample;
    int factor = 1;
    std::optional<SampledSignal> avg_kernel;  // required iff kind == Average

    /// Lipschitz constant of the pre-dilation operator: 1 for subsampling,
    /// ||phi||_1 for averaging (Young's inequality).
    double lipschitz() const;

    std::string token() const { return token_; }
    /// Tokens: "subsample:S" | "average:box:S" | "average:gauss:S".
    static PoolingSpec parse(const std::string& token, const Grid& grid);

    std::string token_;
};

SampledSignal apply_pooling(const PoolingSpec& spec, const SampledSignal& f);

double pooling_lipschitz(const PoolingSpec& spec);

/// Periodized unit-mass box of length S*spacing per axis.
SampledSignal box_kernel(const Grid& grid, int S);
/// Periodized unit-mass Gaussian, sigma = S*spacing/2 per axis.
SampledSignal gauss_kernel(const Grid& grid, int S);

}  // namespace frameshift
