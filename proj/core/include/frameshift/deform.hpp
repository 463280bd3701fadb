#pragma once

#include <string>
#include <vector>

#include "frameshift/signal.hpp"

namespace frameshift {

/// Closed-form scalar field on R^d with certified sup norms for itself and
/// its partial derivatives.
struct ParametricScalar {
    enum class Kind { Zero, Constant, Gaussian, Sinusoid, Sampled } kind = Kind::Zero;
    // constant: value
    // gaussian: amplitude * exp(-sum_i ((x_i - center_i)/width)^2)
    // sinusoid: amplitude * sin(2 pi dot(freq, x) + phase)
    // sampled: real grid values; sup norms are grid maxima (lower bounds)
    double value = 0.0;
    double amplitude = 0.0;
    std::vector<double> center;
    double width = 1.0;
    std::vector<double> freq;
    double phase = 0.0;
    SampledSignal samples;

    double eval(const std::vector<double>& x) const;
    double sup() const;
    /// sup_x |d/dx_j| (closed form).
    double sup_partial(int j, int dim) const;

    static ParametricScalar zero();
    static ParametricScalar constant(double c);
    static ParametricScalar gaussian(double a, std::vector<double> c, double w);
    static ParametricScalar sinusoid(double a, std::vector<double> nu, double ph);
    static ParametricScalar from_samples(SampledSignal real_values);
};

/// Displacement/phase field (tau, omega) with certified sup norms. Parametric
/// fields carry exact closed-form norms; sampled fields report grid maxima
/// flagged as lower bounds.
struct DeformationField {
    int dim = 1;
    std::vector<ParametricScalar> tau;  // dim components
    ParametricScalar omega;
    bool sampled = false;  // true when norms are grid maxima (lower bounds)

    double sup_tau() const;   // ||tau||_inf (Euclidean norm of components)
    double sup_Dtau() const;  // sup of max absolute Jacobian entry
    double sup_omega() const;

    /// Theorem precondition ||D tau||_inf <= 1/(2d).
    bool theorem_valid() const { return sup_Dtau() <= 1.0 / (2.0 * dim) + 1e-12; }

    double tau_at(int j, const std::vector<double>& x) const { return tau[static_cast<std::size_t>(j)].eval(x); }
    double omega_at(const std::vector<double>& x) const { return omega.eval(x); }

    static DeformationField identity(int dim);
    static DeformationField parse(const std::string& json_text);
    std::string to_json() const;
};

/// Warp-and-modulate: (F f)(x) = e^{2 pi i omega(x)} f(x - tau(x)), with f
/// evaluated off-grid by trigonometric interpolation. Requires f free of
/// Nyquist-bin energy unless allow_full_band is set.
SampledSignal apply_deformation(const DeformationField& field, const SampledSignal& f,
                                bool allow_full_band = false);

struct JacobianCondition {
    double sup_Dtau = 0.0;
    double limit = 0.0;  // 1/(2d)
    bool valid = false;
};

JacobianCondition jacobian_condition(const DeformationField& field);

/// Random parametric field (Gaussian warp bump, constant or Gaussian phase)
/// guaranteed to satisfy the Jacobian precondition, deterministic in seed.
DeformationField random_parametric_field(const Grid& grid, std::uint64_t seed);

}  // namespace frameshift
