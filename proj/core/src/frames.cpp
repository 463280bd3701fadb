#include "frameshift/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace frameshift {

namespace {
constexpr double pi = std::numbers::pi;

double gauss_profile(double u) { return std::exp(-pi * u * u); }
// Symmetric Morlet-style band profile peaking at |u| = 1.
double band_profile(double u) {
    const double r = std::abs(u) - 1.0;
    return std::exp(-pi * r * r);
}
}  // namespace

int FilterBank::atom_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw LabelError("unknown atom label: " + label);
}

const SampledSignal& FilterBank::atom(const std::string& label) const {
    return atoms_freq[static_cast<std::size_t>(atom_index(label))];
}

std::vector<std::string> FilterBank::propagation_set() const {
    std::vector<std::string> out;
    for (const auto& l : labels)
        if (l != output_atom) out.push_back(l);
    return out;
}

void FilterBank::validate() const {
    grid.validate();
    if (labels.empty()) throw LabelError("filter bank has no atoms");
    if (labels.size() != atoms_freq.size()) throw LabelError("labels/atoms size mismatch");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw LabelError("duplicate atom labels");
    if (!seen.count(output_atom)) throw LabelError("output atom not in label set");
    for (const auto& a : atoms_freq) {
        require_same_grid(a.grid, grid);
        if (a.domain != Domain::Frequency) throw DimensionError("atom not in frequency domain");
    }
}

LittlewoodPaley littlewood_paley(const FilterBank& bank) {
    bank.validate();
    LittlewoodPaley out;
    out.lp = SampledSignal(bank.grid, Domain::Frequency);
    for (const auto& a : bank.atoms_freq)
        for (std::size_t i = 0; i < out.lp.size(); ++i)
            out.lp.samples[i] += std::norm(a.samples[i]);
    double mn = out.lp.samples[0].real(), mx = mn;
    std::size_t imn = 0, imx = 0;
    for (std::size_t i = 1; i < out.lp.size(); ++i) {
        const double v = out.lp.samples[i].real();
        if (v < mn) { mn = v; imn = i; }
        if (v > mx) { mx = v; imx = i; }
    }
    out.bounds = FrameBounds{mn, mx, imn, imx};
    return out;
}

FilterBank normalize_scale(const FilterBank& bank, double C) {
    if (!(C > 0.0)) throw PreconditionError("scale constant must be positive");
    FilterBank out = bank;
    const double s = 1.0 / std::sqrt(C);
    for (auto& a : out.atoms_freq)
        for (auto& v : a.samples) v *= s;
    return out;
}

FilterBank normalize_parseval(const FilterBank& bank) {
    const LittlewoodPaley lp = littlewood_paley(bank);
    if (!(lp.bounds.A > 0.0)) {
        std::ostringstream msg;
        msg << "Littlewood-Paley sum vanishes at frequency bin " << lp.bounds.argmin
            << " (value " << lp.bounds.A << ")";
        throw DegenerateFrameError(msg.str());
    }
    FilterBank out = bank;
    std::vector<double> inv(lp.lp.size());
    for (std::size_t i = 0; i < inv.size(); ++i)
        inv[i] = 1.0 / std::sqrt(lp.lp.samples[i].real());
    for (auto& a : out.atoms_freq)
        for (std::size_t i = 0; i < a.size(); ++i) a.samples[i] *= inv[i];
    return out;
}

FilterBank build_weyl_heisenberg_1d(const Grid& grid, int k_max) {
    grid.validate();
    if (grid.dim != 1) throw DimensionError("Weyl-Heisenberg bank is 1-D");
    if (k_max < 1 || std::exp(-2.0 * pi * k_max * k_max) >= 1e-14)
        throw PreconditionError("k_max too small: neglected modulation tails exceed 1e-14");
    FilterBank bank;
    bank.grid = grid;
    std::ostringstream meta;
    meta << "wh1d(k_max=" << k_max << ")";
    bank.construction = meta.str();
    for (int k = -k_max; k <= k_max; ++k) {
        SampledSignal a(grid, Domain::Frequency);
        for (int i = 0; i < grid.n; ++i)
            a.samples[i] = gauss_profile(grid.freq(i) - k);
        std::ostringstream lab;
        lab << "k=" << k;
        bank.labels.push_back(lab.str());
        bank.atoms_freq.push_back(std::move(a));
    }
    bank.output_atom = "k=0";
    bank.validate();
    return bank;
}

FilterBank build_wavelet_1d(const Grid& grid, int j_min, int j_max) {
    grid.validate();
    if (grid.dim != 1) throw DimensionError("wavelet bank is 1-D");
    if (j_min > j_max) throw PreconditionError("empty scale range");
    FilterBank bank;
    bank.grid = grid;
    std::ostringstream meta;
    meta << "wav1d(j=" << j_min << ".." << j_max << ")";
    bank.construction = meta.str();
    // Low-pass output atom fills the Littlewood-Paley gap around DC left by
    // the band atoms; its cutoff tracks the coarsest scale.
    {
        SampledSignal a(grid, Domain::Frequency);
        const double s = std::pow(2.0, -j_min);
        for (int i = 0; i < grid.n; ++i)
            a.samples[i] = gauss_profile(s * grid.freq(i));
        bank.labels.push_back("lowpass");
        bank.atoms_freq.push_back(std::move(a));
    }
    for (int j = j_min; j <= j_max; ++j) {
        SampledSignal a(grid, Domain::Frequency);
        const double s = std::pow(2.0, -j);
        for (int i = 0; i < grid.n; ++i)
            a.samples[i] = band_profile(s * grid.freq(i));
        std::ostringstream lab;
        lab << "j=" << j;
        bank.labels.push_back(lab.str());
        bank.atoms_freq.push_back(std::move(a));
    }
    bank.output_atom = "lowpass";
    bank.validate();
    const LittlewoodPaley lp = littlewood_paley(bank);
    if (lp.bounds.A < 1e-6) {
        std::ostringstream msg;
        msg << "scale range j=" << j_min << ".." << j_max
            << " leaves grid frequencies uncovered (LP min " << lp.bounds.A << ")";
        throw CoverageError(msg.str());
    }
    return bank;
}

FilterBank build_tensor_wavelet_2d(const Grid& grid, int J) {
    grid.validate();
    if (grid.dim != 2) throw DimensionError("tensor wavelet bank is 2-D");
    if (J < 0) throw PreconditionError("J must be >= 0");
    FilterBank bank;
    bank.grid = grid;
    std::ostringstream meta;
    meta << "tensor2d(J=" << J << ")";
    bank.construction = meta.str();
    // Grid-adapted mother: finest band atoms (j = J) peak at 3/4 nyquist.
    const double w_fine = 0.75 * grid.nyquist();
    auto scale = [&](int j) { return std::pow(2.0, J - j) / w_fine; };
    auto axis = [&](int e, double u) { return e ? band_profile(u) : gauss_profile(u); };
    {
        SampledSignal a(grid, Domain::Frequency);
        const double s = scale(0);
        for (int i = 0; i < grid.n; ++i)
            for (int k = 0; k < grid.n; ++k)
                a.samples[a.idx(i, k)] =
                    gauss_profile(s * grid.freq(i)) * gauss_profile(s * grid.freq(k));
        bank.labels.push_back("e=(0,0)");
        bank.atoms_freq.push_back(std::move(a));
    }
    for (int j = 0; j <= J; ++j) {
        for (int e1 = 0; e1 <= 1; ++e1) {
            for (int e2 = 0; e2 <= 1; ++e2) {
                if (e1 == 0 && e2 == 0) continue;
                SampledSignal a(grid, Domain::Frequency);
                const double s = scale(j);
                for (int i = 0; i < grid.n; ++i)
                    for (int k = 0; k < grid.n; ++k)
                        a.samples[a.idx(i, k)] =
                            axis(e1, s * grid.freq(i)) * axis(e2, s * grid.freq(k));
                std::ostringstream lab;
                lab << "e=(" << e1 << "," << e2 << "),j=" << j;
                bank.labels.push_back(lab.str());
                bank.atoms_freq.push_back(std::move(a));
            }
        }
    }
    bank.output_atom = "e=(0,0)";
    bank.validate();
    return bank;
}

FilterBank build_directional_wavelet_2d(const Grid& grid, int J, int K) {
    grid.validate();
    if (grid.dim != 2) throw DimensionError("directional wavelet bank is 2-D");
    if (J < 1 || K < 1) throw PreconditionError("need J >= 1 scales and K >= 1 directions");
    FilterBank bank;
    bank.grid = grid;
    std::ostringstream meta;
    meta << "dir2d(J=" << J << ",K=" << K << ")";
    bank.construction = meta.str();
    // Dyadic rings of isotropic Gaussian bumps; ring j sits at radius
    // 3/4 nyquist * 2^{1-j}, bump width half the radius.
    const double base = 0.75 * grid.nyquist();
    for (int j = 1; j <= J; ++j) {
        const double xi = base * std::pow(2.0, 1 - j);
        const double sig = 0.5 * xi;
        for (int k = 0; k < K; ++k) {
            const double th = 2.0 * pi * k / K;
            const double c1 = xi * std::cos(th);
            const double c2 = xi * std::sin(th);
            SampledSignal a(grid, Domain::Frequency);
            for (int i = 0; i < grid.n; ++i) {
                const double w1 = grid.freq(i);
                for (int m = 0; m < grid.n; ++m) {
                    const double w2 = grid.freq(m);
                    const double d2 = (w1 - c1) * (w1 - c1) + (w2 - c2) * (w2 - c2);
                    a.samples[a.idx(i, m)] = std::exp(-d2 / (2.0 * sig * sig));
                }
            }
            std::ostringstream lab;
            lab << "j=" << j << ",k=" << (k < 10 ? "0" : "") << k;
            bank.labels.push_back(lab.str());
            bank.atoms_freq.push_back(std::move(a));
        }
    }
    {
        const double sig = 0.5 * base * std::pow(2.0, 1 - J);
        SampledSignal a(grid, Domain::Frequency);
        for (int i = 0; i < grid.n; ++i) {
            const double w1 = grid.freq(i);
            for (int m = 0; m < grid.n; ++m) {
                const double w2 = grid.freq(m);
                a.samples[a.idx(i, m)] = std::exp(-(w1 * w1 + w2 * w2) / (2.0 * sig * sig));
            }
        }
        bank.labels.push_back("lowpass");
        bank.atoms_freq.push_back(std::move(a));
    }
    bank.output_atom = "lowpass";
    bank.validate();
    return bank;
}

}  // namespace frameshift
