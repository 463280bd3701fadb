#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frameshift/deform.hpp"
#include "frameshift/errors.hpp"

namespace fs = frameshift;

namespace {

double max_abs_diff(const fs::SampledSignal& a, const fs::SampledSignal& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

// Dense grid search for sup |d/dx a e^{-((x-c)/w)^2}|, an oracle for the
// closed-form bound.
double gaussian_slope_oracle(double a, double c, double w) {
    double m = 0.0;
    for (int i = -400000; i <= 400000; ++i) {
        const double x = c + i * 1e-5 * w;
        const double u = (x - c) / w;
        m = std::max(m, std::abs(-2.0 * a * u / w * std::exp(-u * u)));
    }
    return m;
}

}  // namespace

TEST_CASE("parametric scalars: values and certified sups") {
    auto z = fs::ParametricScalar::zero();
    CHECK(z.eval({1.0}) == 0.0);
    CHECK(z.sup() == 0.0);
    CHECK(z.sup_partial(0, 1) == 0.0);

    auto c = fs::ParametricScalar::constant(-2.5);
    CHECK(c.eval({3.0}) == -2.5);
    CHECK(c.sup() == 2.5);
    CHECK(c.sup_partial(0, 1) == 0.0);

    auto gauss = fs::ParametricScalar::gaussian(0.5, {0.0}, 1.0);
    CHECK(gauss.eval({0.0}) == doctest::Approx(0.5));
    CHECK(gauss.eval({1.0}) == doctest::Approx(0.5 * std::exp(-1.0)));
    CHECK(gauss.sup() == 0.5);

    auto sin = fs::ParametricScalar::sinusoid(0.3, {2.0}, 0.0);
    CHECK(sin.sup() == 0.3);
    CHECK(sin.sup_partial(0, 1) == doctest::Approx(2.0 * std::numbers::pi * 0.3 * 2.0));
    CHECK(sin.eval({0.125}) == doctest::Approx(0.3 * std::sin(std::numbers::pi / 2.0)));
}

TEST_CASE("half-strength Gaussian warp: derivative bound vs grid-search oracle") {
    // tau(x) = 0.5 e^{-x^2}: sup |tau'| = (1/sqrt(2)) e^{-1/2}, under the
    // d = 1 limit of 1/2
    auto tau = fs::ParametricScalar::gaussian(0.5, {0.0}, 1.0);
    const double closed = tau.sup_partial(0, 1);
    CHECK(closed == doctest::Approx(std::exp(-0.5) / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(closed == doctest::Approx(0.42888).epsilon(1e-4));
    CHECK(closed == doctest::Approx(gaussian_slope_oracle(0.5, 0.0, 1.0)).epsilon(1e-8));

    fs::DeformationField f = fs::DeformationField::identity(1);
    f.tau[0] = tau;
    CHECK(f.theorem_valid());
    const auto jc = fs::jacobian_condition(f);
    CHECK(jc.limit == 0.5);
    CHECK(jc.valid);
}

TEST_CASE("linear warp violates the Jacobian condition") {
    // tau(x) = a sin(2 pi nu x) with 2 pi a nu > 1/2
    fs::DeformationField f = fs::DeformationField::identity(1);
    f.tau[0] = fs::ParametricScalar::sinusoid(1.0, {0.5}, 0.0);
    CHECK(!f.theorem_valid());
    CHECK(fs::jacobian_condition(f).sup_Dtau == doctest::Approx(std::numbers::pi));
}

TEST_CASE("identity field leaves band-limited signals unchanged") {
    for (int dim : {1, 2}) {
        fs::Grid g{dim, 32, 0.5};
        const auto f = fs::random_bandlimited({g.nyquist() / 4.0, 11}, g);
        const auto d = fs::apply_deformation(fs::DeformationField::identity(dim), f);
        CHECK(max_abs_diff(d, f) < 1e-10);
    }
}

TEST_CASE("constant tau reduces to a rigid shift") {
    fs::Grid g{1, 64, 0.25};
    const auto f = fs::random_bandlimited({g.nyquist() / 3.0, 12}, g);
    fs::DeformationField fld = fs::DeformationField::identity(1);
    fld.tau[0] = fs::ParametricScalar::constant(0.8);
    const auto d = fs::apply_deformation(fld, f);
    CHECK(max_abs_diff(d, fs::translate(f, {0.8})) < 1e-10);
}

TEST_CASE("constant omega is a pure modulation") {
    fs::Grid g{1, 64, 0.25};
    const auto f = fs::random_bandlimited({g.nyquist() / 3.0, 13}, g);
    fs::DeformationField fld = fs::DeformationField::identity(1);
    fld.omega = fs::ParametricScalar::constant(0.3);
    const auto d = fs::apply_deformation(fld, f);
    const fs::cplx rot{std::cos(2.0 * std::numbers::pi * 0.3), std::sin(2.0 * std::numbers::pi * 0.3)};
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        m = std::max(m, std::abs(d.samples[i] - rot * f.samples[i]));
    CHECK(m < 1e-10);
    // modulation preserves the norm
    CHECK(fs::norm_l2(d) == doctest::Approx(fs::norm_l2(f)).epsilon(1e-10));
}

TEST_CASE("Nyquist-bin energy is rejected without the override") {
    fs::Grid g{1, 16, 1.0};
    fs::SampledSignal fh(g, fs::Domain::Frequency);
    fh.samples[g.n / 2] = 1.0;  // the -nyquist bin
    const auto f = fs::to_space(fh);
    CHECK_THROWS_AS(fs::apply_deformation(fs::DeformationField::identity(1), f),
                    fs::PreconditionError);
    CHECK_NOTHROW(fs::apply_deformation(fs::DeformationField::identity(1), f, true));
}

TEST_CASE("field JSON round trip") {
    fs::DeformationField f = fs::DeformationField::identity(2);
    f.tau[0] = fs::ParametricScalar::gaussian(0.1, {3.0, 4.0}, 2.0);
    f.tau[1] = fs::ParametricScalar::sinusoid(0.05, {0.1, 0.2}, 0.7);
    f.omega = fs::ParametricScalar::constant(0.2);
    const auto rt = fs::DeformationField::parse(f.to_json());
    CHECK(rt.dim == 2);
    CHECK(rt.sup_tau() == doctest::Approx(f.sup_tau()));
    CHECK(rt.sup_Dtau() == doctest::Approx(f.sup_Dtau()));
    CHECK(rt.sup_omega() == doctest::Approx(f.sup_omega()));
    CHECK(rt.tau_at(0, {3.0, 4.0}) == doctest::Approx(0.1));

    CHECK_THROWS_AS(fs::DeformationField::parse("{\"dim\": 3, \"tau\": []}"), fs::PreconditionError);
}

TEST_CASE("sampled fields report grid maxima as norms") {
    fs::Grid g{1, 64, 0.5};
    fs::SampledSignal v(g, fs::Domain::Space);
    for (int k = 0; k < g.n; ++k)
        v.samples[k] = 0.2 * std::sin(2.0 * std::numbers::pi * k / g.n);
    auto p = fs::ParametricScalar::from_samples(v);
    CHECK(p.sup() == doctest::Approx(0.2).epsilon(1e-6));
    // spectral derivative of 0.2 sin(2 pi x / extent): max slope 0.4 pi / extent
    CHECK(p.sup_partial(0, 1) ==
          doctest::Approx(0.2 * 2.0 * std::numbers::pi / g.extent()).epsilon(1e-6));
    fs::DeformationField f = fs::DeformationField::identity(1);
    f.tau[0] = p;
    CHECK_THROWS_AS(f.to_json(), fs::PreconditionError);
}

TEST_CASE("random parametric fields always satisfy the theorem precondition") {
    for (int dim : {1, 2}) {
        fs::Grid g{dim, 64, 0.25};
        for (std::uint64_t s = 0; s < 25; ++s) {
            const auto f = fs::random_parametric_field(g, s);
            CHECK(f.dim == dim);
            CHECK(f.theorem_valid());
            CHECK(f.sup_Dtau() <= 0.9 / (2.0 * dim) + 1e-12);
        }
        // deterministic in the seed
        const auto a = fs::random_parametric_field(g, 7);
        const auto b = fs::random_parametric_field(g, 7);
        CHECK(a.sup_tau() == b.sup_tau());
        CHECK(a.sup_omega() == b.sup_omega());
    }
}

TEST_CASE("deformation warps are visible but norm-bounded") {
    fs::Grid g{1, 256, 1.0 / 16.0};
    const auto f = fs::random_bandlimited({4.0, 15}, g);
    const auto fld = fs::random_parametric_field(g, 15);
    const auto d = fs::apply_deformation(fld, f);
    const double err = fs::norm_l2(d - f);
    CHECK(err > 0.0);
    CHECK(err < 2.0 * fs::norm_l2(f) + 1e-9);  // triangle bound sanity
}
