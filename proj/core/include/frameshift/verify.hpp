#pragma once

#include <string>
#include <vector>

#include "frameshift/deform.hpp"
#include "frameshift/network.hpp"

namespace frameshift {

struct BoundReport {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string notes;

    double slack() const { return bound - measured; }
};

/// Pass tolerance shared by all bound checks: relative 1e-6 plus 1e-9
/// absolute, absorbing quadrature and grid-extremum float error.
inline bool within_bound(double measured, double bound) {
    return measured <= bound * (1.0 + 1e-6) + 1e-9;
}

/// K = max over feature layers and grid frequencies of |chihat(w)| |w|.
double decay_constant(const ModuleSequence& seq);

/// Layer-n feature distance between the extractors of T_t f and f, against
/// 2 pi |t| K ||f|| / (S_1...S_n).
BoundReport verify_invariance(const ModuleSequence& seq, const SampledSignal& f,
                              const std::vector<double>& t, int n);
std::vector<BoundReport> verify_invariance_all(const ModuleSequence& seq,
                                               const SampledSignal& f,
                                               const std::vector<double>& t);

/// Layer-n distance between features-of-shifted and shifted-features,
/// against 2 pi |t| K |1/(S_1...S_n) - 1| ||f||.
BoundReport verify_covariance(const ModuleSequence& seq, const SampledSignal& f,
                              const std::vector<double>& t, int n);

/// Feature distance against input distance (non-expansiveness, L = 1).
BoundReport verify_lipschitz(const ModuleSequence& seq, const SampledSignal& f,
                             const SampledSignal& h);

/// Feature norm against input norm (energy bound).
BoundReport verify_energy(const ModuleSequence& seq, const SampledSignal& f);

struct DeformationConstant {
    double C = 0.0;
    double l1_eta = 0.0;       // ||eta||_1
    double l1_grad_eta = 0.0;  // ||grad eta||_1
};

/// Theorem constant C = max{2 ||grad eta||_1, 4 pi ||eta||_1} for the fixed
/// mollified-bump eta (etahat = 1 on B_1, supported in B_2). Quadrature on a
/// fine grid; refine doubles the resolution for convergence checks.
DeformationConstant deformation_constant(int dim, int refine = 0);

/// Full-extractor deformation sensitivity for a band-limited input drawn
/// from spec, against C (R ||tau||_inf + ||omega||_inf) ||f||.
BoundReport verify_deformation(const ModuleSequence& seq, const BandlimitSpec& spec,
                               const DeformationField& field);

/// Signal-level deformation error ||f - F f|| against the same bound
/// (network-free decoupled check).
BoundReport verify_bandlimited_error(const BandlimitSpec& spec, const Grid& grid,
                                     const DeformationField& field);

}  // namespace frameshift
