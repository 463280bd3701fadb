#include <doctest.h>

#include <cmath>

#include "frameshift/errors.hpp"
#include "frameshift/pooling.hpp"

namespace fs = frameshift;

TEST_CASE("kernels have unit mass") {
    for (int dim : {1, 2}) {
        fs::Grid g{dim, 32, 0.5};
        for (const auto& k : {fs::box_kernel(g, 4), fs::gauss_kernel(g, 4)}) {
            fs::cplx s{0.0, 0.0};
            for (const auto& v : k.samples) s += v;
            CHECK((s * g.cell()).real() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("token parsing round trip") {
    fs::Grid g{1, 32, 1.0};
    auto sub = fs::PoolingSpec::parse("subsample:2", g);
    CHECK(sub.kind == fs::PoolKind::Subsample);
    CHECK(sub.factor == 2);
    CHECK(sub.token() == "subsample:2");

    auto avg = fs::PoolingSpec::parse("average:box:4", g);
    CHECK(avg.kind == fs::PoolKind::Average);
    CHECK(avg.factor == 4);
    CHECK(avg.avg_kernel.has_value());

    CHECK_NOTHROW(fs::PoolingSpec::parse("average:gauss:2", g));
    CHECK_THROWS_AS(fs::PoolingSpec::parse("maxpool:2", g), fs::PreconditionError);
    CHECK_THROWS_AS(fs::PoolingSpec::parse("average:cone:2", g), fs::PreconditionError);
}

TEST_CASE("Lipschitz constants: 1 for subsampling, ||phi||_1 for averaging") {
    fs::Grid g{1, 64, 0.5};
    CHECK(fs::PoolingSpec::parse("subsample:4", g).lipschitz() == 1.0);
    // positive unit-mass kernels have L1 norm exactly 1
    CHECK(fs::PoolingSpec::parse("average:box:4", g).lipschitz() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fs::PoolingSpec::parse("average:gauss:4", g).lipschitz() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("subsample pooling equals dilation") {
    fs::Grid g{2, 16, 1.0};
    const auto f = fs::random_noise(g, 3);
    const auto p = fs::apply_pooling(fs::PoolingSpec::parse("subsample:2", g), f);
    const auto d = fs::dilate_downsample(f, 2);
    CHECK(p.grid.n == 8);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p.samples[i] - d.samples[i]) == 0.0);
}

TEST_CASE("average pooling smooths before dilation") {
    fs::Grid g{1, 64, 1.0};
    const auto f = fs::random_noise(g, 4);
    const auto spec = fs::PoolingSpec::parse("average:box:4", g);
    const auto p = fs::apply_pooling(spec, f);
    const auto oracle = fs::dilate_downsample(fs::circular_convolve(f, *spec.avg_kernel), 4);
    CHECK(p.grid.n == 16);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p.samples[i] - oracle.samples[i]) < 1e-12);
}

TEST_CASE("averaging a constant is the identity on values") {
    fs::Grid g{1, 32, 0.5};
    fs::SampledSignal c(g, fs::Domain::Space);
    for (auto& v : c.samples) v = 3.0;
    const auto p = fs::apply_pooling(fs::PoolingSpec::parse("average:gauss:2", g), c);
    // averaged constant stays 3, dilation scales values by S^{1/2}
    for (const auto& v : p.samples) CHECK(v.real() == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("pooling norm contraction on band-limited inputs") {
    // ||pool(f)|| <= R ||f|| holds sample-exactly once f and |f|^2 fit under
    // the coarse nyquist; this is the operative regime of the energy bound.
    fs::Grid g{1, 256, 1.0};
    const auto f = fs::random_bandlimited({g.nyquist() / 8.0, 5}, g);
    for (const char* tok : {"subsample:2", "average:box:2", "average:gauss:2"}) {
        const auto spec = fs::PoolingSpec::parse(tok, g);
        CHECK(fs::norm_l2(fs::apply_pooling(spec, f)) <= spec.lipschitz() * fs::norm_l2(f) * (1.0 + 1e-9));
    }
}

TEST_CASE("factor must divide the grid") {
    fs::Grid g{1, 32, 1.0};
    CHECK_THROWS_AS(fs::apply_pooling(fs::PoolingSpec::parse("subsample:3", g), fs::random_noise(g, 1)),
                    fs::DivisibilityError);
}
