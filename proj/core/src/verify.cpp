#include "frameshift/verify.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace frameshift {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double euclid(const std::vector<double>& t) {
    double s = 0.0;
    for (double v : t) s += v * v;
    return std::sqrt(s);
}

double grid_freq_radius(const Grid& g, std::size_t flat) {
    if (g.dim == 1) return std::abs(g.freq(static_cast<int>(flat)));
    const int i = static_cast<int>(flat) / g.n;
    const int j = static_cast<int>(flat) % g.n;
    const double w1 = g.freq(i);
    const double w2 = g.freq(j);
    return std::sqrt(w1 * w1 + w2 * w2);
}

double layer_distance(const FeatureVector& a, const FeatureVector& b, int n) {
    const auto& la = a.layers[static_cast<std::size_t>(n)];
    const auto& lb = b.layers[static_cast<std::size_t>(n)];
    double s = 0.0;
    for (std::size_t i = 0; i < la.size(); ++i) {
        const double d = norm_l2(la[i].signal - lb[i].signal);
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

double decay_constant(const ModuleSequence& seq) {
    seq.validate();
    double K = 0.0;
    for (int n = 0; n <= seq.depth(); ++n) {
        const SampledSignal& chi = seq.chi(n);
        for (std::size_t i = 0; i < chi.size(); ++i)
            K = std::max(K, std::abs(chi.samples[i]) * grid_freq_radius(chi.grid, i));
    }
    return K;
}

std::vector<BoundReport> verify_invariance_all(const ModuleSequence& seq,
                                               const SampledSignal& f,
                                               const std::vector<double>& t) {
    const double K = decay_constant(seq);
    const double nf = norm_l2(f);
    const FeatureVector phi = extract(seq, f);
    const FeatureVector phi_t = extract(seq, translate(f, t));
    std::vector<BoundReport> out;
    for (int n = 1; n <= seq.depth(); ++n) {
        BoundReport r;
        std::ostringstream name;
        name << "invariance(n=" << n << ")";
        r.name = name.str();
        r.measured = layer_distance(phi_t, phi, n);
        r.bound = two_pi * euclid(t) * K * nf / seq.pool_product(n);
        r.pass = within_bound(r.measured, r.bound);
        std::ostringstream notes;
        notes << "K=" << K << " |t|=" << euclid(t) << " poolprod=" << seq.pool_product(n);
        r.notes = notes.str();
        out.push_back(r);
    }
    return out;
}

BoundReport verify_invariance(const ModuleSequence& seq, const SampledSignal& f,
                              const std::vector<double>& t, int n) {
    return verify_invariance_all(seq, f, t).at(static_cast<std::size_t>(n - 1));
}

BoundReport verify_covariance(const ModuleSequence& seq, const SampledSignal& f,
                              const std::vector<double>& t, int n) {
    const double K = decay_constant(seq);
    const double nf = norm_l2(f);
    const FeatureVector phi = extract(seq, f);
    const FeatureVector phi_t = extract(seq, translate(f, t));
    const auto& la = phi_t.layers[static_cast<std::size_t>(n)];
    const auto& lb = phi.layers[static_cast<std::size_t>(n)];
    double s = 0.0;
    for (std::size_t i = 0; i < la.size(); ++i) {
        const double d = norm_l2(la[i].signal - translate(lb[i].signal, t));
        s += d * d;
    }
    BoundReport r;
    std::ostringstream name;
    name << "covariance(n=" << n << ")";
    r.name = name.str();
    r.measured = std::sqrt(s);
    r.bound = two_pi * euclid(t) * K * std::abs(1.0 / seq.pool_product(n) - 1.0) * nf;
    r.pass = within_bound(r.measured, r.bound);
    return r;
}

BoundReport verify_lipschitz(const ModuleSequence& seq, const SampledSignal& f,
                             const SampledSignal& h) {
    BoundReport r;
    r.name = "lipschitz";
    r.measured = feature_distance(extract(seq, f), extract(seq, h));
    r.bound = norm_l2(f - h);
    r.pass = within_bound(r.measured, r.bound);
    return r;
}

BoundReport verify_energy(const ModuleSequence& seq, const SampledSignal& f) {
    BoundReport r;
    r.name = "energy";
    r.measured = feature_norm(extract(seq, f));
    r.bound = norm_l2(f);
    r.pass = within_bound(r.measured, r.bound);
    return r;
}

namespace {

// Smooth bridge: 1 at r <= 1, 0 at r >= 2, C-infinity in between.
double bump_bridge(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    auto moll = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
    return moll(2.0 - r) / (moll(2.0 - r) + moll(r - 1.0));
}

DeformationConstant compute_deformation_constant(int dim, int refine) {
    Grid g;
    g.dim = dim;
    if (dim == 1) {
        g.n = 8192 << refine;
        g.spacing = (128.0 * (1 << refine)) / g.n;  // extent doubles with refine
    } else {
        g.n = 512 << refine;
        g.spacing = (32.0 * (1 << refine)) / g.n;
    }
    SampledSignal etah(g, Domain::Frequency);
    for (std::size_t i = 0; i < etah.size(); ++i)
        etah.samples[i] = bump_bridge(grid_freq_radius(g, i));
    // profile sanity: exactly 1 on the unit ball of grid frequencies
    for (std::size_t i = 0; i < etah.size(); ++i)
        if (grid_freq_radius(g, i) <= 1.0 && std::abs(etah.samples[i] - 1.0) > 1e-10)
            throw PreconditionError("eta profile is not 1 on the unit frequency ball");

    const SampledSignal eta = to_space(etah);
    DeformationConstant dc;
    double l1 = 0.0;
    for (const auto& v : eta.samples) l1 += std::abs(v);
    dc.l1_eta = l1 * g.cell();

    double l1g = 0.0;
    if (dim == 1) {
        SampledSignal dh = etah;
        for (int k = 0; k < g.n; ++k) dh.samples[k] *= cplx{0.0, two_pi * g.freq(k)};
        const SampledSignal d = to_space(dh);
        for (const auto& v : d.samples) l1g += std::abs(v);
        l1g *= g.cell();
    } else {
        SampledSignal d1h = etah, d2h = etah;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                d1h.samples[d1h.idx(i, j)] *= cplx{0.0, two_pi * g.freq(i)};
                d2h.samples[d2h.idx(i, j)] *= cplx{0.0, two_pi * g.freq(j)};
            }
        const SampledSignal d1 = to_space(d1h);
        const SampledSignal d2 = to_space(d2h);
        for (std::size_t i = 0; i < d1.size(); ++i)
            l1g += std::hypot(std::abs(d1.samples[i]), std::abs(d2.samples[i]));
        l1g *= g.cell();
    }
    dc.l1_grad_eta = l1g;
    dc.C = std::max(2.0 * dc.l1_grad_eta, 4.0 * std::numbers::pi * dc.l1_eta);
    return dc;
}

}  // namespace

DeformationConstant deformation_constant(int dim, int refine) {
    if (dim != 1 && dim != 2) throw PreconditionError("dim must be 1 or 2");
    static std::mutex mu;
    static std::map<std::pair<int, int>, DeformationConstant> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dim, refine);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_deformation_constant(dim, refine)).first;
    return it->second;
}

BoundReport verify_deformation(const ModuleSequence& seq, const BandlimitSpec& spec,
                               const DeformationField& field) {
    if (!field.theorem_valid()) {
        std::ostringstream msg;
        msg << "deformation field violates ||D tau||_inf <= 1/(2d): " << field.sup_Dtau()
            << " > " << 1.0 / (2.0 * field.dim);
        throw PreconditionError(msg.str());
    }
    const SampledSignal f = random_bandlimited(spec, seq.input_grid());
    const SampledSignal ff = apply_deformation(field, f);
    const DeformationConstant dc = deformation_constant(field.dim);
    BoundReport r;
    r.name = "deformation";
    r.measured = feature_distance(extract(seq, ff), extract(seq, f));
    r.bound = dc.C * (spec.radius * field.sup_tau() + field.sup_omega()) * norm_l2(f);
    r.pass = within_bound(r.measured, r.bound);
    std::ostringstream notes;
    notes << "C=" << dc.C << " R=" << spec.radius << " sup_tau=" << field.sup_tau()
          << " sup_omega=" << field.sup_omega();
    r.notes = notes.str();
    return r;
}

BoundReport verify_bandlimited_error(const BandlimitSpec& spec, const Grid& grid,
                                     const DeformationField& field) {
    if (!field.theorem_valid()) {
        std::ostringstream msg;
        msg << "deformation field violates ||D tau||_inf <= 1/(2d): " << field.sup_Dtau()
            << " > " << 1.0 / (2.0 * field.dim);
        throw PreconditionError(msg.str());
    }
    const SampledSignal f = random_bandlimited(spec, grid);
    const SampledSignal ff = apply_deformation(field, f);
    const DeformationConstant dc = deformation_constant(field.dim);
    BoundReport r;
    r.name = "bandlimit-error";
    r.measured = norm_l2(f - ff);
    r.bound = dc.C * (spec.radius * field.sup_tau() + field.sup_omega()) * norm_l2(f);
    r.pass = within_bound(r.measured, r.bound);
    return r;
}

}  // namespace frameshift
