#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frameshift/errors.hpp"
#include "frameshift/frames.hpp"

namespace fs = frameshift;

namespace {
constexpr double pi = std::numbers::pi;

// Independent Littlewood-Paley oracle for the Weyl-Heisenberg bank:
// direct summation of e^{-2 pi (w - k)^2} over the modulation range.
double wh_lp(double w, int k_max) {
    double s = 0.0;
    for (int k = -k_max; k <= k_max; ++k) s += std::exp(-2.0 * pi * (w - k) * (w - k));
    return s;
}
}  // namespace

TEST_CASE("Weyl-Heisenberg bounds match the summation oracle") {
    // nyquist 1 keeps the whole frequency range inside the k = -3..3 coverage
    fs::Grid g{1, 256, 0.5};
    const fs::FilterBank bank = fs::build_weyl_heisenberg_1d(g, 3);
    CHECK(bank.labels.size() == 7);
    CHECK(bank.output_atom == "k=0");
    const auto lp = fs::littlewood_paley(bank);
    double A = wh_lp(g.freq(0), 3), B = A;
    for (int i = 1; i < g.n; ++i) {
        const double v = wh_lp(g.freq(i), 3);
        A = std::min(A, v);
        B = std::max(B, v);
    }
    CHECK(lp.bounds.A == doctest::Approx(A).epsilon(1e-12));
    CHECK(lp.bounds.B == doctest::Approx(B).epsilon(1e-12));
    // closed-form extrema: max at integer frequencies, min at half-integers
    CHECK(lp.bounds.B == doctest::Approx(1.0 + 2.0 * std::exp(-2.0 * pi)).epsilon(1e-6));
    CHECK(lp.bounds.A == doctest::Approx(2.0 * std::exp(-pi / 2.0)).epsilon(1e-4));
    // the argmax frequency is an integer, the argmin a half-integer
    const double wmax = g.freq(static_cast<int>(lp.bounds.argmax));
    const double wmin = g.freq(static_cast<int>(lp.bounds.argmin));
    CHECK(std::abs(wmax - std::round(wmax)) < 1e-12);
    CHECK(std::abs(std::abs(wmin - std::floor(wmin)) - 0.5) < 1e-12);
}

TEST_CASE("Weyl-Heisenberg rejects truncation ranges with visible tails") {
    fs::Grid g{1, 64, 0.5};
    CHECK_THROWS_AS(fs::build_weyl_heisenberg_1d(g, 1), fs::PreconditionError);
    CHECK_NOTHROW(fs::build_weyl_heisenberg_1d(g, 3));
}

TEST_CASE("Parseval normalization flattens the LP sum and is idempotent") {
    fs::Grid g{1, 256, 0.5};
    const fs::FilterBank bank = fs::normalize_parseval(fs::build_weyl_heisenberg_1d(g, 3));
    const auto lp = fs::littlewood_paley(bank);
    CHECK(lp.bounds.A == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp.bounds.B == doctest::Approx(1.0).epsilon(1e-12));
    const fs::FilterBank again = fs::normalize_parseval(bank);
    for (std::size_t a = 0; a < bank.atoms_freq.size(); ++a)
        for (std::size_t i = 0; i < bank.atoms_freq[a].size(); ++i)
            CHECK(std::abs(again.atoms_freq[a].samples[i] - bank.atoms_freq[a].samples[i]) < 1e-12);
}

TEST_CASE("scale normalization divides the bounds by C") {
    fs::Grid g{1, 128, 0.5};
    const fs::FilterBank bank = fs::build_weyl_heisenberg_1d(g, 3);
    const auto before = fs::littlewood_paley(bank).bounds;
    const auto after = fs::littlewood_paley(fs::normalize_scale(bank, 4.0)).bounds;
    CHECK(after.A == doctest::Approx(before.A / 4.0).epsilon(1e-12));
    CHECK(after.B == doctest::Approx(before.B / 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(fs::normalize_scale(bank, 0.0), fs::PreconditionError);
}

TEST_CASE("Parseval frame satisfies the energy identity") {
    // sum_lambda ||f * g_lambda||^2 = ||f||^2 when the LP sum is 1
    fs::Grid g{1, 256, 0.5};
    const fs::FilterBank bank = fs::normalize_parseval(fs::build_weyl_heisenberg_1d(g, 3));
    const auto f = fs::random_bandlimited({0.5, 5}, g);
    double s = 0.0;
    for (const auto& label : bank.labels) {
        const double n = fs::norm_l2(fs::circular_convolve(f, bank.atom(label)));
        s += n * n;
    }
    CHECK(std::sqrt(s) == doctest::Approx(fs::norm_l2(f)).epsilon(1e-8));
}

TEST_CASE("general frame inequality from grid LP bounds") {
    fs::Grid g{1, 128, 0.5};
    const fs::FilterBank bank = fs::build_weyl_heisenberg_1d(g, 3);
    const auto b = fs::littlewood_paley(bank).bounds;
    const auto f = fs::random_noise(g, 8);
    double s = 0.0;
    for (const auto& label : bank.labels) {
        const double n = fs::norm_l2(fs::circular_convolve(f, bank.atom(label)));
        s += n * n;
    }
    const double e = fs::norm_l2(f) * fs::norm_l2(f);
    CHECK(s >= b.A * e * (1.0 - 1e-9));
    CHECK(s <= b.B * e * (1.0 + 1e-9));
}

TEST_CASE("1-D wavelet bank: labels, coverage, dimension checks") {
    fs::Grid g{1, 1024, 1.0 / 64.0};
    const fs::FilterBank bank = fs::build_wavelet_1d(g, 0, 5);
    CHECK(bank.labels.size() == 7);
    CHECK(bank.output_atom == "lowpass");
    CHECK(bank.labels[1] == "j=0");
    CHECK(bank.labels[6] == "j=5");
    CHECK(fs::littlewood_paley(bank).bounds.A > 1e-6);
    // far too few scales for this nyquist: grid left uncovered
    CHECK_THROWS_AS(fs::build_wavelet_1d(g, 0, 1), fs::CoverageError);
    fs::Grid g2{2, 32, 1.0};
    CHECK_THROWS_AS(fs::build_wavelet_1d(g2, 0, 3), fs::DimensionError);
}

TEST_CASE("tensor wavelet bank: atom count and label scheme") {
    fs::Grid g{2, 64, 1.0};
    const int J = 2;
    const fs::FilterBank bank = fs::build_tensor_wavelet_2d(g, J);
    CHECK(static_cast<int>(bank.labels.size()) == 3 * (J + 1) + 1);
    CHECK(bank.output_atom == "e=(0,0)");
    CHECK_NOTHROW(bank.atom("e=(1,1),j=0"));
    CHECK_NOTHROW(bank.atom("e=(0,1),j=2"));
    CHECK_THROWS_AS(bank.atom("e=(0,0),j=1"), fs::LabelError);
    CHECK(fs::littlewood_paley(bank).bounds.A > 0.0);
}

TEST_CASE("directional wavelet bank: atom count, labels, propagation set") {
    fs::Grid g{2, 64, 1.0};
    const fs::FilterBank bank = fs::build_directional_wavelet_2d(g, 3, 12);
    CHECK(static_cast<int>(bank.labels.size()) == 3 * 12 + 1);
    CHECK(bank.output_atom == "lowpass");
    CHECK(bank.labels[0] == "j=1,k=00");
    CHECK_NOTHROW(bank.atom("j=2,k=11"));
    CHECK(bank.propagation_set().size() == bank.labels.size() - 1);
    for (const auto& l : bank.propagation_set()) CHECK(l != "lowpass");
}

TEST_CASE("directional bank Parseval-normalizes to flat LP on the grid") {
    fs::Grid g{2, 64, 1.0};
    const auto bank = fs::normalize_parseval(fs::build_directional_wavelet_2d(g, 3, 8));
    const auto b = fs::littlewood_paley(bank).bounds;
    CHECK(b.A == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b.B == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bank validation catches structural defects") {
    fs::Grid g{1, 64, 0.5};
    fs::FilterBank bank = fs::build_weyl_heisenberg_1d(g, 3);
    fs::FilterBank broken = bank;
    broken.output_atom = "k=99";
    CHECK_THROWS_AS(broken.validate(), fs::LabelError);
    broken = bank;
    broken.labels[0] = broken.labels[1];
    CHECK_THROWS_AS(broken.validate(), fs::LabelError);
    broken = bank;
    broken.atoms_freq.pop_back();
    CHECK_THROWS_AS(broken.validate(), fs::LabelError);
}
