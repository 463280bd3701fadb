#include "frameshift/pooling.hpp"

#include <cmath>
#include <sstream>

#include "frameshift/errors.hpp"

namespace frameshift {

namespace {

// Per-axis sample profile, periodized over the grid.
SampledSignal separable_kernel(const Grid& grid, const std::vector<double>& axis) {
    SampledSignal k(grid, Domain::Space);
    if (grid.dim == 1) {
        for (int i = 0; i < grid.n; ++i) k.samples[i] = axis[i];
    } else {
        for (int i = 0; i < grid.n; ++i)
            for (int j = 0; j < grid.n; ++j)
                k.samples[k.idx(i, j)] = axis[i] * axis[j];
    }
    // normalize to unit integral (mass 1)
    cplx s{0.0, 0.0};
    for (const auto& v : k.samples) s += v;
    const double mass = s.real() * grid.cell();
    for (auto& v : k.samples) v /= mass;
    return k;
}

}  // namespace

SampledSignal box_kernel(const Grid& grid, int S) {
    std::vector<double> axis(grid.n, 0.0);
    for (int i = 0; i < S && i < grid.n; ++i) axis[i] = 1.0;
    return separable_kernel(grid, axis);
}

SampledSignal gauss_kernel(const Grid& grid, int S) {
    std::vector<double> axis(grid.n, 0.0);
    const double sigma = S * grid.spacing / 2.0;
    for (int i = 0; i < grid.n; ++i) {
        // accumulate periodic images
        double v = 0.0;
        for (int p = -2; p <= 2; ++p) {
            const double x = (i + p * grid.n) * grid.spacing;
            v += std::exp(-x * x / (2.0 * sigma * sigma));
        }
        axis[i] = v;
    }
    return separable_kernel(grid, axis);
}

double PoolingSpec::lipschitz() const {
    if (kind == PoolKind::Subsample) return 1.0;
    if (!avg_kernel) throw PreconditionError("average pooling requires a kernel");
    double s = 0.0;
    for (const auto& v : avg_kernel->samples) s += std::abs(v);
    return s * avg_kernel->grid.cell();
}

double pooling_lipschitz(const PoolingSpec& spec) { return spec.lipschitz(); }

PoolingSpec PoolingSpec::parse(const std::string& token, const Grid& grid) {
    PoolingSpec spec;
    spec.token_ = token;
    std::istringstream ss(token);
    std::string head;
    std::getline(ss, head, ':');
    if (head == "subsample") {
        std::string s;
        std::getline(ss, s);
        spec.kind = PoolKind::Subsample;
        spec.factor = std::stoi(s);
    } else if (head == "average") {
        std::string shape, s;
        std::getline(ss, shape, ':');
        std::getline(ss, s);
        spec.kind = PoolKind::Average;
        spec.factor = std::stoi(s);
        if (shape == "box") spec.avg_kernel = box_kernel(grid, spec.factor);
        else if (shape == "gauss") spec.avg_kernel = gauss_kernel(grid, spec.factor);
        else throw PreconditionError("unknown average kernel shape: " + shape);
    } else {
        throw PreconditionError("unknown pooling token: " + token);
    }
    if (spec.factor < 1) throw DivisibilityError("pooling factor must be >= 1");
    return spec;
}

SampledSignal apply_pooling(const PoolingSpec& spec, const SampledSignal& f) {
    if (f.grid.n % spec.factor != 0)
        throw DivisibilityError("pooling factor does not divide grid size");
    if (spec.kind == PoolKind::Subsample)
        return dilate_downsample(f, spec.factor);
    if (!spec.avg_kernel) throw PreconditionError("average pooling requires a kernel");
    return dilate_downsample(circular_convolve(f, *spec.avg_kernel), spec.factor);
}

}  // namespace frameshift
