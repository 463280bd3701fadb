#include "frameshift/network.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "frameshift/io.hpp"
#include "frameshift/threading.hpp"

namespace frameshift {

using nlohmann::json;

Grid ModuleSequence::grid_at(int n) const {
    Grid g = layers.front().bank.grid;
    for (int i = 0; i < n; ++i) g.n /= layers[static_cast<std::size_t>(i)].pool.factor;
    return g;
}

double ModuleSequence::pool_product(int n) const {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= layers[static_cast<std::size_t>(i)].pool.factor;
    return p;
}

const SampledSignal& ModuleSequence::chi(int n) const {
    if (n == depth()) return final_chi;
    const auto& bank = layers[static_cast<std::size_t>(n)].bank;
    return bank.atom(bank.output_atom);
}

void ModuleSequence::validate() const {
    if (layers.empty()) throw PreconditionError("module-sequence must have depth >= 1");
    for (int n = 0; n < depth(); ++n) {
        const auto& m = layers[static_cast<std::size_t>(n)];
        m.bank.validate();
        if (!(m.bank.grid == grid_at(n)))
            throw DimensionError("layer bank grid does not match the pooled input grid");
        if (grid_at(n).n % m.pool.factor != 0)
            throw DivisibilityError("pooling factor does not divide the layer grid");
    }
    require_same_grid(final_chi.grid, grid_at(depth()));
    if (final_chi.domain != Domain::Frequency)
        throw DimensionError("final output atom must be in the frequency domain");
}

AdmissibilityReport check_admissibility(const ModuleSequence& seq) {
    seq.validate();
    AdmissibilityReport rep;
    rep.admissible = true;
    for (const auto& m : seq.layers) {
        LayerScore s;
        s.B = littlewood_paley(m.bank).bounds.B;
        s.L = m.nonlin.lipschitz();
        s.R = m.pool.lipschitz();
        s.score = std::max(s.B, s.B * s.L * s.L * s.R * s.R);
        s.suggested_C = s.B * std::max(1.0, s.L * s.L * s.R * s.R);
        if (s.score > 1.0 + 1e-9) rep.admissible = false;
        rep.layers.push_back(s);
    }
    return rep;
}

SampledSignal layer_apply(const NetModule& module, const std::string& label,
                          const SampledSignal& f) {
    if (label == module.bank.output_atom)
        throw LabelError("cannot propagate through the output atom: " + label);
    return apply_pooling(module.pool,
                         apply(module.nonlin, circular_convolve(f, module.bank.atom(label))));
}

SampledSignal layer_output(const ModuleSequence& seq, int n, const SampledSignal& propagated) {
    return circular_convolve(propagated, seq.chi(n));
}

FeatureVector extract(const ModuleSequence& seq, const SampledSignal& f, bool force) {
    seq.validate();
    require_same_grid(f.grid, seq.input_grid());
    if (!force) {
        const auto rep = check_admissibility(seq);
        if (!rep.admissible)
            throw AdmissibilityError("module-sequence is not admissible (use the override to force)");
    }
    const int N = seq.depth();
    FeatureVector phi;
    phi.layers.resize(static_cast<std::size_t>(N) + 1);

    std::vector<FeatureEntry> current;
    current.push_back({Path{}, to_space(f)});

    for (int n = 0; n <= N; ++n) {
        auto& out = phi.layers[static_cast<std::size_t>(n)];
        out.resize(current.size());
        threading::parallel_for(current.size(), [&](std::size_t i) {
            out[i] = {current[i].path, layer_output(seq, n, current[i].signal)};
        });
        if (n == N) {
            double tail = 0.0;
            for (const auto& e : current) {
                const double nn = norm_l2(e.signal);
                tail += nn * nn;
            }
            phi.tail_energy = tail;
            break;
        }
        const auto& module = seq.layers[static_cast<std::size_t>(n)];
        const auto prop = module.bank.propagation_set();
        std::vector<FeatureEntry> next(current.size() * prop.size());
        threading::parallel_for(next.size(), [&](std::size_t i) {
            const std::size_t qi = i / prop.size();
            const std::size_t li = i % prop.size();
            Path p = current[qi].path;
            p.push_back(prop[li]);
            next[i] = {std::move(p), layer_apply(module, prop[li], current[qi].signal)};
        });
        current = std::move(next);
    }
    return phi;
}

double feature_norm(const FeatureVector& phi) {
    double s = 0.0;
    for (const auto& layer : phi.layers)
        for (const auto& e : layer) {
            const double n = norm_l2(e.signal);
            s += n * n;
        }
    return std::sqrt(s);
}

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.layers.size() != b.layers.size())
        throw DimensionError("feature vectors have different depths");
    double s = 0.0;
    for (std::size_t n = 0; n < a.layers.size(); ++n) {
        const auto& la = a.layers[n];
        const auto& lb = b.layers[n];
        if (la.size() != lb.size()) throw DimensionError("feature vectors have different path sets");
        for (std::size_t i = 0; i < la.size(); ++i) {
            if (la[i].path != lb[i].path)
                throw DimensionError("feature vectors have different path sets");
            const double d = norm_l2(la[i].signal - lb[i].signal);
            s += d * d;
        }
    }
    return std::sqrt(s);
}

ModuleSequence preset_scattering(const Grid& grid, int J, int K, int depth) {
    if (grid.dim != 2) throw DimensionError("scattering preset is 2-D");
    ModuleSequence seq;
    const FilterBank bank = normalize_parseval(build_directional_wavelet_2d(grid, J, K));
    for (int n = 0; n < depth; ++n) {
        NetModule m;
        m.bank = bank;
        m.nonlin = Nonlinearity{NonlinKind::Modulus};
        m.pool = PoolingSpec::parse("subsample:1", grid);
        seq.layers.push_back(m);
    }
    seq.final_chi = bank.atom(bank.output_atom);
    seq.validate();
    return seq;
}

namespace {

FilterBank build_layer_bank(const json& spec, const Grid& grid) {
    FilterBank bank;
    if (spec.contains("path")) {
        bank = read_bank(spec.at("path").get<std::string>());
        if (!(bank.grid == grid))
            throw DimensionError("bank file grid does not match the layer grid");
    } else {
        const std::string kind = spec.at("kind").get<std::string>();
        if (kind == "wh1d") {
            bank = build_weyl_heisenberg_1d(grid, spec.value("k_max", 3));
        } else if (kind == "wav1d") {
            bank = build_wavelet_1d(grid, spec.at("j_min").get<int>(), spec.at("j_max").get<int>());
        } else if (kind == "tensor2d") {
            bank = build_tensor_wavelet_2d(grid, spec.at("J").get<int>());
        } else if (kind == "dir2d") {
            bank = build_directional_wavelet_2d(grid, spec.at("J").get<int>(),
                                                spec.at("K").get<int>());
        } else {
            throw PreconditionError("unknown frame kind: " + kind);
        }
    }
    const std::string norm = spec.value("normalize", "parseval");
    if (norm == "parseval") bank = normalize_parseval(bank);
    else if (norm != "none") throw PreconditionError("unknown normalize mode: " + norm);
    if (spec.contains("scale")) bank = normalize_scale(bank, spec.at("scale").get<double>());
    return bank;
}

json parse_config(const std::string& text) {
    json cfg = json::parse(text);
    if (!cfg.contains("grid") || !cfg.contains("layers"))
        throw PreconditionError("net config needs \"grid\" and \"layers\"");
    return cfg;
}

Grid grid_from_config(const json& cfg) {
    const auto& g = cfg.at("grid");
    Grid grid{g.value("dim", 2), g.at("n").get<int>(), g.value("spacing", 1.0)};
    grid.validate();
    return grid;
}

}  // namespace

Grid grid_from_json(const std::string& json_text) {
    return grid_from_config(parse_config(json_text));
}

bool config_allows_inadmissible(const std::string& json_text) {
    return parse_config(json_text).value("allow_inadmissible", false);
}

ModuleSequence build_sequence_from_json(const std::string& json_text) {
    const json cfg = parse_config(json_text);
    Grid grid = grid_from_config(cfg);
    const auto& layer_specs = cfg.at("layers");
    int depth = cfg.value("depth", static_cast<int>(layer_specs.size()));
    if (depth < 1) throw PreconditionError("depth must be >= 1");
    if (layer_specs.size() != 1 && static_cast<int>(layer_specs.size()) != depth)
        throw PreconditionError("layer list must have one entry or exactly depth entries");

    ModuleSequence seq;
    Grid g = grid;
    json last_frame_spec;
    for (int n = 0; n < depth; ++n) {
        const json& spec = layer_specs.size() == 1 ? layer_specs.at(0)
                                                   : layer_specs.at(static_cast<std::size_t>(n));
        NetModule m;
        m.bank = build_layer_bank(spec.at("frame"), g);
        m.nonlin = Nonlinearity::parse(spec.value("nonlinearity", "modulus"));
        m.pool = PoolingSpec::parse(spec.value("pooling", "subsample:1"), g);
        if (g.n % m.pool.factor != 0)
            throw DivisibilityError("pooling factor does not divide the layer grid");
        g.n /= m.pool.factor;
        last_frame_spec = spec.at("frame");
        seq.layers.push_back(std::move(m));
    }
    // Output-generating atom for the deepest layer: same construction as the
    // last layer's frame, rebuilt on the final grid.
    const FilterBank final_bank = build_layer_bank(last_frame_spec, g);
    seq.final_chi = final_bank.atom(final_bank.output_atom);
    seq.validate();
    return seq;
}

}  // namespace frameshift
