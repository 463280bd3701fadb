#pragma once

#include <string>
#include <vector>

#include "frameshift/frames.hpp"
#include "frameshift/nonlinearity.hpp"
#include "frameshift/pooling.hpp"

namespace frameshift {

/// One layer: frame, non-linearity, pooling. The bank's output atom is the
/// previous layer's output-generating atom chi_{n-1}.
struct NetModule {
    FilterBank bank;
    Nonlinearity nonlin;
    PoolingSpec pool;
};

/// Truncated module-sequence. layers[n] is module n+1; final_chi is the
/// output-generating atom for the deepest feature layer, living on the grid
/// reached after all poolings.
struct ModuleSequence {
    std::vector<NetModule> layers;
    SampledSignal final_chi;

    int depth() const { return static_cast<int>(layers.size()); }
    const Grid& input_grid() const { return layers.front().bank.grid; }
    /// Grid of signals entering layer n (0-based); n == depth() gives the
    /// final output grid.
    Grid grid_at(int n) const;
    /// Product of pooling factors S_1 ... S_n.
    double pool_product(int n) const;
    /// Output-generating atom chi_n for feature layer n (0..depth()).
    const SampledSignal& chi(int n) const;

    void validate() const;
};

struct LayerScore {
    double B = 0.0;        // frame upper bound (LP grid max)
    double L = 0.0;        // non-linearity Lipschitz constant
    double R = 0.0;        // pooling Lipschitz constant
    double score = 0.0;    // max{B, B L^2 R^2}
    double suggested_C = 0.0;  // normalize_scale constant restoring admissibility
};

struct AdmissibilityReport {
    std::vector<LayerScore> layers;
    bool admissible = false;
};

/// Per-layer admissibility scores with 1e-9 absolute slack on the verdict.
AdmissibilityReport check_admissibility(const ModuleSequence& seq);

using Path = std::vector<std::string>;

struct FeatureEntry {
    Path path;
    SampledSignal signal;
};

/// Feature layers 0..depth; entries within a layer are ordered by path
/// (bank label order per position), independent of worker count.
struct FeatureVector {
    std::vector<std::vector<FeatureEntry>> layers;
    /// Propagated (not yet extracted) energy at the deepest layer; truncation
    /// diagnostic for the infinite-depth sum.
    double tail_energy = 0.0;
};

/// Single-branch layer operator: pool(nonlin(f * g_lambda)). Throws
/// LabelError when lambda is the output atom.
SampledSignal layer_apply(const NetModule& module, const std::string& label,
                          const SampledSignal& f);

SampledSignal layer_output(const ModuleSequence& seq, int n, const SampledSignal& propagated);

FeatureVector extract(const ModuleSequence& seq, const SampledSignal& f,
                      bool force = false);

double feature_norm(const FeatureVector& phi);
double feature_distance(const FeatureVector& a, const FeatureVector& b);

/// Scattering-network preset: directional wavelet frame (Parseval), modulus,
/// no pooling (S = 1) in every layer.
ModuleSequence preset_scattering(const Grid& grid, int J, int K, int depth);

/// Build a module-sequence from a JSON config document (see README for the
/// schema). The grid is taken from the config's "grid" object.
ModuleSequence build_sequence_from_json(const std::string& json_text);

/// Grid declared by a JSON config document.
Grid grid_from_json(const std::string& json_text);

/// Admissibility override flag declared by the config ("allow_inadmissible").
bool config_allows_inadmissible(const std::string& json_text);

}  // namespace frameshift
