#include "frameshift/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "frameshift/fft.hpp"

namespace frameshift {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

SampledSignal to_frequency(const SampledSignal& f) {
    if (f.domain == Domain::Frequency) return f;
    SampledSignal out = f;
    fft::forward(out.samples.data(), out.grid.n, out.grid.dim);
    const double scale = out.grid.cell();
    for (auto& v : out.samples) v *= scale;
    out.domain = Domain::Frequency;
    return out;
}

SampledSignal to_space(const SampledSignal& f) {
    if (f.domain == Domain::Space) return f;
    SampledSignal out = f;
    fft::inverse(out.samples.data(), out.grid.n, out.grid.dim);
    // inverse raw sum carries a factor n^dim; together with the forward
    // cell() factor this realizes the (1/(n*spacing))^dim quadrature weight.
    const double scale = 1.0 / (out.grid.cell() * static_cast<double>(out.grid.total()));
    for (auto& v : out.samples) v *= scale;
    out.domain = Domain::Space;
    return out;
}

SampledSignal circular_convolve(const SampledSignal& f, const SampledSignal& g) {
    require_same_grid(f.grid, g.grid);
    SampledSignal fh = to_frequency(f);
    const SampledSignal gh = to_frequency(g);
    for (std::size_t i = 0; i < fh.size(); ++i) fh.samples[i] *= gh.samples[i];
    return (f.domain == Domain::Frequency && g.domain == Domain::Frequency) ? fh : to_space(fh);
}

SampledSignal translate(const SampledSignal& f, const std::vector<double>& t) {
    if (static_cast<int>(t.size()) != f.grid.dim)
        throw DimensionError("translation vector dimension mismatch");
    SampledSignal fh = to_frequency(f);
    const int n = fh.grid.n;
    if (fh.grid.dim == 1) {
        for (int k = 0; k < n; ++k) {
            const double ph = -two_pi * fh.grid.freq(k) * t[0];
            fh.samples[k] *= cplx{std::cos(ph), std::sin(ph)};
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double w1 = fh.grid.freq(i);
            for (int j = 0; j < n; ++j) {
                const double ph = -two_pi * (w1 * t[0] + fh.grid.freq(j) * t[1]);
                fh.samples[fh.idx(i, j)] *= cplx{std::cos(ph), std::sin(ph)};
            }
        }
    }
    return (f.domain == Domain::Frequency) ? fh : to_space(fh);
}

SampledSignal modulate(const SampledSignal& f, const SampledSignal& phase) {
    require_same_grid(f.grid, phase.grid);
    SampledSignal out = to_space(f);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double ph = two_pi * phase.samples[i].real();
        out.samples[i] *= cplx{std::cos(ph), std::sin(ph)};
    }
    return out;
}

SampledSignal dilate_downsample(const SampledSignal& f, int S) {
    if (S < 1) throw DivisibilityError("pooling factor must be >= 1");
    if (f.grid.n % S != 0) throw DivisibilityError("pooling factor does not divide grid size");
    const SampledSignal fs = to_space(f);
    if (S == 1) return fs;
    Grid g{fs.grid.dim, fs.grid.n / S, fs.grid.spacing};
    SampledSignal out(g, Domain::Space);
    const double amp = std::pow(static_cast<double>(S), fs.grid.dim / 2.0);
    if (g.dim == 1) {
        for (int k = 0; k < g.n; ++k) out.samples[k] = amp * fs.samples[static_cast<std::size_t>(k) * S];
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                out.samples[out.idx(i, j)] = amp * fs.samples[fs.idx(i * S, j * S)];
    }
    return out;
}

SampledSignal random_bandlimited(const BandlimitSpec& spec, const Grid& grid) {
    grid.validate();
    if (!(spec.radius > 0.0) || spec.radius >= grid.nyquist())
        throw PreconditionError("bandlimit radius must lie in (0, nyquist)");
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SampledSignal fh(grid, Domain::Frequency);
    const int n = grid.n;
    const double r2 = spec.radius * spec.radius;
    if (grid.dim == 1) {
        for (int k = 0; k < n; ++k) {
            const double w = grid.freq(k);
            if (w * w < r2) fh.samples[k] = cplx{gauss(rng), gauss(rng)};
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double w1 = grid.freq(i);
            for (int j = 0; j < n; ++j) {
                const double w2 = grid.freq(j);
                if (w1 * w1 + w2 * w2 < r2) fh.samples[fh.idx(i, j)] = cplx{gauss(rng), gauss(rng)};
            }
        }
    }
    SampledSignal f = to_space(fh);
    const double nrm = norm_l2(f);
    if (nrm == 0.0) throw PreconditionError("bandlimit radius excludes every grid frequency");
    for (auto& v : f.samples) v /= nrm;
    return f;
}

SampledSignal random_noise(const Grid& grid, std::uint64_t seed) {
    grid.validate();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SampledSignal f(grid, Domain::Space);
    for (auto& v : f.samples) v = cplx{gauss(rng), gauss(rng)};
    return f;
}

double norm_l2(const SampledSignal& f) {
    double s = 0.0;
    for (const auto& v : f.samples) s += std::norm(v);
    const double w = (f.domain == Domain::Space) ? f.grid.cell() : f.grid.freq_cell();
    return std::sqrt(w * s);
}

cplx inner(const SampledSignal& f, const SampledSignal& g) {
    require_same_grid(f.grid, g.grid);
    if (f.domain != g.domain) throw DimensionError("inner product operands in different domains");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) s += f.samples[i] * std::conj(g.samples[i]);
    const double w = (f.domain == Domain::Space) ? f.grid.cell() : f.grid.freq_cell();
    return w * s;
}

SampledSignal impulse(const Grid& grid) {
    grid.validate();
    SampledSignal f(grid, Domain::Space);
    f.samples[0] = cplx{1.0 / grid.cell(), 0.0};
    return f;
}

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
    require_same_grid(a.grid, b.grid);
    if (a.domain != b.domain) throw DimensionError("mixed-domain addition");
    SampledSignal out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += b.samples[i];
    return out;
}

SampledSignal operator-(const SampledSignal& a, const SampledSignal& b) {
    require_same_grid(a.grid, b.grid);
    if (a.domain != b.domain) throw DimensionError("mixed-domain subtraction");
    SampledSignal out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] -= b.samples[i];
    return out;
}

SampledSignal operator*(double c, const SampledSignal& f) {
    SampledSignal out = f;
    for (auto& v : out.samples) v *= c;
    return out;
}

}  // namespace frameshift
