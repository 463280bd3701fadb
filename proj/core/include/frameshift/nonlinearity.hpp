#pragma once

#include <cstdint>
#include <string>

#include "frameshift/signal.hpp"

namespace frameshift {

enum class NonlinKind { Modulus, Relu, Tanh, Sigmoid };

/// Pointwise non-linearity with its proven Lipschitz constant. Complex inputs
/// are handled by applying the real map to real and imaginary parts
/// separately (modulus excepted). All kinds map 0 to 0.
struct Nonlinearity {
    NonlinKind kind = NonlinKind::Modulus;

    double lipschitz() const {
        switch (kind) {
            case NonlinKind::Modulus: return 1.0;
            case NonlinKind::Relu: return 2.0;
            case NonlinKind::Tanh: return 2.0;
            case NonlinKind::Sigmoid: return 0.5;
        }
        return 1.0;
    }

    std::string token() const;
    static Nonlinearity parse(const std::string& token);
};

SampledSignal apply(const Nonlinearity& m, const SampledSignal& f);

/// Max over random pairs of the ratio ||Mf - Mh|| / ||f - h||. real_only
/// restricts the draws to real-valued signals (alternating generic and
/// non-negative draws so sign-sensitive maps are probed in their tight regime).
double empirical_lipschitz(const Nonlinearity& m, int trials, std::uint64_t seed,
                           bool real_only = false);

}  // namespace frameshift
