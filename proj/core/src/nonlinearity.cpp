#include "frameshift/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

#include "frameshift/errors.hpp"

namespace frameshift {

namespace {

double sig(double x) { return 1.0 / (1.0 + std::exp(-x)) - 0.5; }

cplx point(NonlinKind k, cplx z) {
    switch (k) {
        case NonlinKind::Modulus:
            return cplx{std::abs(z), 0.0};
        case NonlinKind::Relu:
            return cplx{std::max(0.0, z.real()), std::max(0.0, z.imag())};
        case NonlinKind::Tanh:
            return cplx{std::tanh(z.real()), std::tanh(z.imag())};
        case NonlinKind::Sigmoid:
            return cplx{sig(z.real()), sig(z.imag())};
    }
    return z;
}

}  // namespace

std::string Nonlinearity::token() const {
    switch (kind) {
        case NonlinKind::Modulus: return "modulus";
        case NonlinKind::Relu: return "relu";
        case NonlinKind::Tanh: return "tanh";
        case NonlinKind::Sigmoid: return "sigmoid";
    }
    return "modulus";
}

Nonlinearity Nonlinearity::parse(const std::string& token) {
    if (token == "modulus") return {NonlinKind::Modulus};
    if (token == "relu") return {NonlinKind::Relu};
    if (token == "tanh") return {NonlinKind::Tanh};
    if (token == "sigmoid") return {NonlinKind::Sigmoid};
    throw PreconditionError("unknown non-linearity token: " + token);
}

SampledSignal apply(const Nonlinearity& m, const SampledSignal& f) {
    SampledSignal out = to_space(f);
    for (auto& v : out.samples) v = point(m.kind, v);
    return out;
}

double empirical_lipschitz(const Nonlinearity& m, int trials, std::uint64_t seed,
                           bool real_only) {
    if (trials < 1) throw PreconditionError("trials must be >= 1");
    Grid g{1, 64, 1.0};
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        SampledSignal f = random_noise(g, seed + 2 * static_cast<std::uint64_t>(t));
        SampledSignal h = random_noise(g, seed + 2 * static_cast<std::uint64_t>(t) + 1);
        if (real_only) {
            // alternate generic real draws with non-negative ones; the latter
            // sit in the regime where the real restriction is tight
            const bool fold = (t % 2) == 1;
            for (auto& v : f.samples) v = cplx{fold ? std::abs(v.real()) : v.real(), 0.0};
            for (auto& v : h.samples) v = cplx{fold ? std::abs(v.real()) : v.real(), 0.0};
        }
        const double den = norm_l2(f - h);
        if (den == 0.0) continue;
        worst = std::max(worst, norm_l2(apply(m, f) - apply(m, h)) / den);
    }
    return worst;
}

}  // namespace frameshift
