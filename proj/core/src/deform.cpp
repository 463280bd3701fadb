#include "frameshift/deform.hpp"

#include <cmath>
#include <random>
#include <numbers>

#include <json.hpp>

#include "frameshift/errors.hpp"

namespace frameshift {

using nlohmann::json;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double ParametricScalar::eval(const std::vector<double>& x) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::Constant:
            return value;
        case Kind::Gaussian: {
            double e = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double u = (x[i] - center[i]) / width;
                e += u * u;
            }
            return amplitude * std::exp(-e);
        }
        case Kind::Sinusoid: {
            double arg = phase;
            for (std::size_t i = 0; i < x.size(); ++i) arg += two_pi * freq[i] * x[i];
            return amplitude * std::sin(arg);
        }
        case Kind::Sampled: {
            const Grid& g = samples.grid;
            long i0 = std::lround(x[0] / g.spacing) % g.n;
            if (i0 < 0) i0 += g.n;
            if (g.dim == 1) return samples.samples[static_cast<std::size_t>(i0)].real();
            long i1 = std::lround(x[1] / g.spacing) % g.n;
            if (i1 < 0) i1 += g.n;
            return samples.samples[samples.idx(static_cast<int>(i0), static_cast<int>(i1))].real();
        }
    }
    return 0.0;
}

double ParametricScalar::sup() const {
    switch (kind) {
        case Kind::Zero: return 0.0;
        case Kind::Constant: return std::abs(value);
        case Kind::Gaussian: return std::abs(amplitude);
        case Kind::Sinusoid: return std::abs(amplitude);
        case Kind::Sampled: {
            double m = 0.0;
            for (const auto& v : samples.samples) m = std::max(m, std::abs(v.real()));
            return m;
        }
    }
    return 0.0;
}

double ParametricScalar::sup_partial(int j, int dim) const {
    (void)dim;
    switch (kind) {
        case Kind::Zero:
        case Kind::Constant:
            return 0.0;
        case Kind::Gaussian:
            // max over x of |2 a u/w e^{-u^2}| with u = (x_j - c_j)/w,
            // attained at u = 1/sqrt(2): sqrt(2) |a| e^{-1/2} / w.
            return std::sqrt(2.0) * std::abs(amplitude) * std::exp(-0.5) / width;
        case Kind::Sinusoid:
            return two_pi * std::abs(amplitude) * std::abs(freq[static_cast<std::size_t>(j)]);
        case Kind::Sampled: {
            // grid maximum of the spectral partial derivative; a lower bound
            // on the true sup
            SampledSignal dh = to_frequency(samples);
            const Grid& g = dh.grid;
            if (g.dim == 1) {
                for (int k = 0; k < g.n; ++k)
                    dh.samples[k] *= cplx{0.0, two_pi * g.freq(k)};
            } else {
                for (int i = 0; i < g.n; ++i)
                    for (int k = 0; k < g.n; ++k) {
                        const double w = (j == 0) ? g.freq(i) : g.freq(k);
                        dh.samples[dh.idx(i, k)] *= cplx{0.0, two_pi * w};
                    }
            }
            const SampledSignal d = to_space(dh);
            double m = 0.0;
            for (const auto& v : d.samples) m = std::max(m, std::abs(v.real()));
            return m;
        }
    }
    return 0.0;
}

ParametricScalar ParametricScalar::zero() { return {}; }

ParametricScalar ParametricScalar::constant(double c) {
    ParametricScalar p;
    p.kind = Kind::Constant;
    p.value = c;
    return p;
}

ParametricScalar ParametricScalar::gaussian(double a, std::vector<double> c, double w) {
    if (!(w > 0.0)) throw PreconditionError("gaussian width must be positive");
    ParametricScalar p;
    p.kind = Kind::Gaussian;
    p.amplitude = a;
    p.center = std::move(c);
    p.width = w;
    return p;
}

ParametricScalar ParametricScalar::sinusoid(double a, std::vector<double> nu, double ph) {
    ParametricScalar p;
    p.kind = Kind::Sinusoid;
    p.amplitude = a;
    p.freq = std::move(nu);
    p.phase = ph;
    return p;
}

ParametricScalar ParametricScalar::from_samples(SampledSignal real_values) {
    ParametricScalar p;
    p.kind = Kind::Sampled;
    p.samples = to_space(real_values);
    return p;
}

double DeformationField::sup_tau() const {
    // exact when a single component is non-trivial; an upper bound otherwise
    double s = 0.0;
    for (const auto& c : tau) s += c.sup() * c.sup();
    return std::sqrt(s);
}

double DeformationField::sup_Dtau() const {
    double m = 0.0;
    for (const auto& c : tau)
        for (int j = 0; j < dim; ++j) m = std::max(m, c.sup_partial(j, dim));
    return m;
}

double DeformationField::sup_omega() const { return omega.sup(); }

DeformationField DeformationField::identity(int d) {
    DeformationField f;
    f.dim = d;
    f.tau.assign(static_cast<std::size_t>(d), ParametricScalar::zero());
    f.omega = ParametricScalar::zero();
    return f;
}

namespace {

ParametricScalar scalar_from_json(const json& j) {
    const std::string kind = j.value("kind", "zero");
    if (kind == "zero") return ParametricScalar::zero();
    if (kind == "constant") return ParametricScalar::constant(j.at("value").get<double>());
    if (kind == "gaussian")
        return ParametricScalar::gaussian(j.at("amplitude").get<double>(),
                                          j.at("center").get<std::vector<double>>(),
                                          j.at("width").get<double>());
    if (kind == "sinusoid")
        return ParametricScalar::sinusoid(j.at("amplitude").get<double>(),
                                          j.at("freq").get<std::vector<double>>(),
                                          j.value("phase", 0.0));
    throw PreconditionError("unknown parametric field kind: " + kind);
}

json scalar_to_json(const ParametricScalar& p) {
    switch (p.kind) {
        case ParametricScalar::Kind::Zero: return json{{"kind", "zero"}};
        case ParametricScalar::Kind::Constant: return json{{"kind", "constant"}, {"value", p.value}};
        case ParametricScalar::Kind::Gaussian:
            return json{{"kind", "gaussian"}, {"amplitude", p.amplitude}, {"center", p.center}, {"width", p.width}};
        case ParametricScalar::Kind::Sinusoid:
            return json{{"kind", "sinusoid"}, {"amplitude", p.amplitude}, {"freq", p.freq}, {"phase", p.phase}};
        case ParametricScalar::Kind::Sampled:
            throw PreconditionError("sampled fields have no JSON form");
    }
    return json{{"kind", "zero"}};
}

}  // namespace

DeformationField DeformationField::parse(const std::string& json_text) {
    const json j = json::parse(json_text);
    DeformationField f;
    f.dim = j.at("dim").get<int>();
    if (f.dim != 1 && f.dim != 2) throw PreconditionError("deformation field dim must be 1 or 2");
    const auto& jt = j.at("tau");
    if (static_cast<int>(jt.size()) != f.dim)
        throw PreconditionError("tau must have one component per dimension");
    for (const auto& c : jt) f.tau.push_back(scalar_from_json(c));
    f.omega = j.contains("omega") ? scalar_from_json(j.at("omega")) : ParametricScalar::zero();
    return f;
}

std::string DeformationField::to_json() const {
    json jt = json::array();
    for (const auto& c : tau) jt.push_back(scalar_to_json(c));
    return json{{"dim", dim}, {"tau", jt}, {"omega", scalar_to_json(omega)}}.dump();
}

SampledSignal apply_deformation(const DeformationField& field, const SampledSignal& f,
                                bool allow_full_band) {
    if (field.dim != f.grid.dim) throw DimensionError("field/signal dimension mismatch");
    const SampledSignal fh = to_frequency(f);
    const Grid& g = f.grid;
    const int n = g.n;

    // Gather significant frequency components.
    double peak = 0.0;
    for (const auto& v : fh.samples) peak = std::max(peak, std::abs(v));
    const double thresh = peak * 1e-14;
    struct Comp {
        double w1, w2;
        cplx c;
    };
    std::vector<Comp> comps;
    bool nyquist_energy = false;
    const double nyq = g.nyquist();
    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) {
            if (std::abs(fh.samples[k]) <= thresh) continue;
            const double w = g.freq(k);
            if (std::abs(w) >= nyq - 1e-15) nyquist_energy = true;
            comps.push_back({w, 0.0, fh.samples[k]});
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const cplx v = fh.samples[fh.idx(i, j)];
                if (std::abs(v) <= thresh) continue;
                const double w1 = g.freq(i);
                const double w2 = g.freq(j);
                if (std::abs(w1) >= nyq - 1e-15 || std::abs(w2) >= nyq - 1e-15)
                    nyquist_energy = true;
                comps.push_back({w1, w2, v});
            }
    }
    if (nyquist_energy && !allow_full_band)
        throw PreconditionError(
            "signal carries Nyquist-bin energy; trigonometric interpolation is not "
            "faithful (pass the full-band override to proceed)");

    SampledSignal out(g, Domain::Space);
    const double weight = g.freq_cell();
    std::vector<double> x(static_cast<std::size_t>(g.dim), 0.0);
    auto eval_at = [&](const std::vector<double>& pos) {
        std::vector<double> y(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i)
            y[i] = pos[i] - field.tau_at(static_cast<int>(i), pos);
        cplx acc{0.0, 0.0};
        for (const auto& c : comps) {
            const double ph = two_pi * (c.w1 * y[0] + (g.dim == 2 ? c.w2 * y[1] : 0.0));
            acc += c.c * cplx{std::cos(ph), std::sin(ph)};
        }
        const double mod = two_pi * field.omega_at(pos);
        return weight * acc * cplx{std::cos(mod), std::sin(mod)};
    };

    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) {
            x[0] = k * g.spacing;
            out.samples[k] = eval_at(x);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            x[0] = i * g.spacing;
            for (int j = 0; j < n; ++j) {
                x[1] = j * g.spacing;
                out.samples[out.idx(i, j)] = eval_at(x);
            }
        }
    }
    return out;
}

DeformationField random_parametric_field(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double extent = grid.extent();
    DeformationField f;
    f.dim = grid.dim;
    const double limit = 1.0 / (2.0 * grid.dim);
    for (int i = 0; i < grid.dim; ++i) {
        const double w = extent * (0.05 + 0.10 * uni(rng));
        // amplitude capped so the closed-form derivative bound stays under
        // 90% of the Jacobian limit (and the warp well inside the domain)
        const double a_max = std::min(0.9 * limit * w / (std::sqrt(2.0) * std::exp(-0.5)),
                                      0.02 * extent);
        const double a = (2.0 * uni(rng) - 1.0) * a_max;
        std::vector<double> c;
        for (int j = 0; j < grid.dim; ++j) c.push_back(extent * (0.3 + 0.4 * uni(rng)));
        f.tau.push_back(ParametricScalar::gaussian(a, std::move(c), w));
    }
    if (uni(rng) < 0.5) {
        f.omega = ParametricScalar::constant(0.2 * (2.0 * uni(rng) - 1.0));
    } else {
        std::vector<double> c;
        for (int j = 0; j < grid.dim; ++j) c.push_back(extent * (0.3 + 0.4 * uni(rng)));
        f.omega = ParametricScalar::gaussian(0.2 * (2.0 * uni(rng) - 1.0), std::move(c),
                                             extent * (0.05 + 0.10 * uni(rng)));
    }
    return f;
}

JacobianCondition jacobian_condition(const DeformationField& field) {
    JacobianCondition jc;
    jc.sup_Dtau = field.sup_Dtau();
    jc.limit = 1.0 / (2.0 * field.dim);
    jc.valid = jc.sup_Dtau <= jc.limit + 1e-12;
    return jc;
}

}  // namespace frameshift
