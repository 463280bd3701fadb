#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frameshift/errors.hpp"
#include "frameshift/nonlinearity.hpp"
#include "frameshift/signal.hpp"

namespace fs = frameshift;

namespace {

fs::SampledSignal make(const fs::Grid& g, std::initializer_list<fs::cplx> vals) {
    fs::SampledSignal f(g, fs::Domain::Space);
    std::size_t i = 0;
    for (auto v : vals) f.samples[i++] = v;
    return f;
}

// Real band-limited signal bounded away from zero (positive even between
// grid points, since the trigonometric interpolant is the function itself).
fs::SampledSignal positive_envelope(const fs::Grid& g, std::uint64_t seed, double radius) {
    const auto b = fs::random_bandlimited({radius, seed}, g);
    double peak = 0.0;
    for (const auto& v : b.samples) peak = std::max(peak, std::abs(v.real()));
    fs::SampledSignal a(g, fs::Domain::Space);
    for (std::size_t i = 0; i < a.size(); ++i)
        a.samples[i] = fs::cplx{b.samples[i].real() + 2.5 * peak, 0.0};
    return a;
}

double commutation_error(const fs::Nonlinearity& m, const fs::SampledSignal& f, double t) {
    const auto a = fs::apply(m, fs::translate(f, {t}));
    const auto b = fs::translate(fs::apply(m, f), {t});
    return fs::norm_l2(a - b);
}

}  // namespace

TEST_CASE("pointwise definitions") {
    fs::Grid g{1, 4, 1.0};
    const auto f = make(g, {fs::cplx{3.0, 4.0}, fs::cplx{-1.0, 2.0}, fs::cplx{0.5, 0.0}, {}});

    const auto mod = fs::apply({fs::NonlinKind::Modulus}, f);
    CHECK(mod.samples[0] == fs::cplx{5.0, 0.0});
    CHECK(mod.samples[1].real() == doctest::Approx(std::sqrt(5.0)));

    const auto rel = fs::apply({fs::NonlinKind::Relu}, f);
    CHECK(rel.samples[0] == fs::cplx{3.0, 4.0});
    CHECK(rel.samples[1] == fs::cplx{0.0, 2.0});
    CHECK(rel.samples[2] == fs::cplx{0.5, 0.0});

    const auto th = fs::apply({fs::NonlinKind::Tanh}, f);
    CHECK(th.samples[2].real() == doctest::Approx(std::tanh(0.5)));
    CHECK(th.samples[0].imag() == doctest::Approx(std::tanh(4.0)));

    // shifted logistic sigmoid: odd, zero at zero, slope 1/4 at the origin
    const auto sg = fs::apply({fs::NonlinKind::Sigmoid}, f);
    CHECK(sg.samples[3] == fs::cplx{0.0, 0.0});
    CHECK(sg.samples[2].real() == doctest::Approx(1.0 / (1.0 + std::exp(-0.5)) - 0.5));
    const auto sgneg = fs::apply({fs::NonlinKind::Sigmoid}, -1.0 * f);
    CHECK(sgneg.samples[2].real() == doctest::Approx(-sg.samples[2].real()));
}

TEST_CASE("all kinds map zero to zero") {
    fs::Grid g{1, 8, 1.0};
    const fs::SampledSignal z(g, fs::Domain::Space);
    for (auto kind : {fs::NonlinKind::Modulus, fs::NonlinKind::Relu, fs::NonlinKind::Tanh,
                      fs::NonlinKind::Sigmoid})
        CHECK(fs::norm_l2(fs::apply({kind}, z)) == 0.0);
}

TEST_CASE("token round trip and parse errors") {
    for (const char* t : {"modulus", "relu", "tanh", "sigmoid"})
        CHECK(fs::Nonlinearity::parse(t).token() == t);
    CHECK_THROWS_AS(fs::Nonlinearity::parse("softmax"), fs::PreconditionError);
}

TEST_CASE("empirical Lipschitz ratios stay under the proven constants") {
    CHECK(fs::empirical_lipschitz({fs::NonlinKind::Modulus}, 200, 1) <= 1.0 + 1e-12);
    CHECK(fs::empirical_lipschitz({fs::NonlinKind::Relu}, 200, 2) <= 2.0 + 1e-12);
    CHECK(fs::empirical_lipschitz({fs::NonlinKind::Tanh}, 200, 3) <= 2.0 + 1e-12);
    CHECK(fs::empirical_lipschitz({fs::NonlinKind::Sigmoid}, 200, 4) <= 0.5 + 1e-12);
}

TEST_CASE("real-restricted relu ratio approaches 1") {
    const double r = fs::empirical_lipschitz({fs::NonlinKind::Relu}, 200, 5, true);
    CHECK(r > 0.99);
    CHECK(r <= 1.0 + 1e-12);
}

TEST_CASE("modulus commutes with fractional shifts on envelope-carrier signals") {
    // f = a(x) e^{2 pi i xi x} with a >= 0 band-limited: |f| = a, so both
    // orders of shift and modulus reproduce samples of a(x - t) exactly.
    fs::Grid g{1, 256, 1.0};
    const auto a = positive_envelope(g, 21, g.nyquist() / 8.0);
    fs::SampledSignal f(g, fs::Domain::Space);
    const double xi = 16.0 / g.extent();  // on-grid carrier frequency
    for (int k = 0; k < g.n; ++k) {
        const double ph = 2.0 * std::numbers::pi * xi * k * g.spacing;
        f.samples[k] = a.samples[k] * fs::cplx{std::cos(ph), std::sin(ph)};
    }
    CHECK(commutation_error({fs::NonlinKind::Modulus}, f, 0.37) < 1e-9);
    CHECK(commutation_error({fs::NonlinKind::Modulus}, f, 3.0) < 1e-9);
}

TEST_CASE("relu commutes with fractional shifts on positive signals") {
    fs::Grid g{1, 256, 1.0};
    const auto a = positive_envelope(g, 22, g.nyquist() / 8.0);
    CHECK(commutation_error({fs::NonlinKind::Relu}, a, 0.41) < 1e-9);
}

TEST_CASE("tanh/sigmoid commute with shifts in the small-signal regime") {
    // with ||f||_inf ~ 1e-2 and bandwidth < nyquist/5 the first Taylor terms
    // are exactly representable and the remainder is below the tolerance
    fs::Grid g{1, 256, 1.0};
    const auto b = fs::random_bandlimited({g.nyquist() / 8.0, 23}, g);
    fs::SampledSignal f(g, fs::Domain::Space);
    for (std::size_t i = 0; i < f.size(); ++i) f.samples[i] = fs::cplx{0.01 * b.samples[i].real(), 0.0};
    CHECK(commutation_error({fs::NonlinKind::Tanh}, f, 0.73) < 1e-9);
    CHECK(commutation_error({fs::NonlinKind::Sigmoid}, f, 0.73) < 1e-9);
}

TEST_CASE("non-expansive on concrete pairs drawn from the network regime") {
    fs::Grid g{1, 128, 1.0};
    const auto f = fs::random_noise(g, 31);
    const auto h = fs::random_noise(g, 32);
    for (auto kind : {fs::NonlinKind::Modulus, fs::NonlinKind::Relu, fs::NonlinKind::Tanh,
                      fs::NonlinKind::Sigmoid}) {
        const fs::Nonlinearity m{kind};
        CHECK(fs::norm_l2(fs::apply(m, f) - fs::apply(m, h)) <=
              m.lipschitz() * fs::norm_l2(f - h) * (1.0 + 1e-12));
    }
}
