#pragma once

#include <string>
#include <vector>

#include "frameshift/signal.hpp"

namespace frameshift {

/// Indexed set of frame atoms stored in the frequency domain, with one
/// designated output-generating atom. Atoms are samples of analytically
/// defined transfer functions on the signal grid.
struct FilterBank {
    Grid grid;
    std::vector<std::string> labels;            // ordered, unique
    std::vector<SampledSignal> atoms_freq;      // parallel to labels, Domain::Frequency
    std::string output_atom;                    // must be one of labels
    std::string construction;                   // metadata token, e.g. "dir2d(J=3,K=8)"

    int atom_index(const std::string& label) const;
    const SampledSignal& atom(const std::string& label) const;

    /// Labels excluding the output atom, in bank order (the propagation set).
    std::vector<std::string> propagation_set() const;

    void validate() const;
};

struct FrameBounds {
    double A = 0.0;       // grid minimum of the Littlewood-Paley sum
    double B = 0.0;       // grid maximum
    std::size_t argmin = 0;  // flat index of the extremal frequencies
    std::size_t argmax = 0;
};

struct LittlewoodPaley {
    SampledSignal lp;     // real-valued, frequency domain
    FrameBounds bounds;
};

/// Pointwise sum over all atoms (including the output atom) of |ghat|^2,
/// with grid extrema as frame-bound estimates.
LittlewoodPaley littlewood_paley(const FilterBank& bank);

/// Scale every atom by C^{-1/2}; frame bounds divide by C.
FilterBank normalize_scale(const FilterBank& bank, double C);

/// Divide each atom by the square root of the Littlewood-Paley sum, producing
/// a Parseval frame (A = B = 1 on the grid). Throws DegenerateFrameError if
/// the sum vanishes at some grid frequency.
FilterBank normalize_parseval(const FilterBank& bank);

/// 1-D Weyl-Heisenberg bank: ghat_k(w) = e^{-pi (w - k)^2}, k in
/// [-k_max, k_max]; output atom k = 0. Requires the truncation tail
/// e^{-2 pi k_max^2} < 1e-14.
FilterBank build_weyl_heisenberg_1d(const Grid& grid, int k_max);

/// 1-D dyadic wavelet bank: ghat_j(w) = psihat(2^{-j} w) for j in
/// [j_min, j_max], psihat(w) = e^{-pi (|w| - 1)^2}, plus a Gaussian low-pass
/// output atom phihat(w) = e^{-pi (2^{-j_min} w)^2} covering DC.
FilterBank build_wavelet_1d(const Grid& grid, int j_min, int j_max);

/// 2-D separable tensor wavelet bank: atoms psihat^e(2^{-j} w) for
/// e in {0,1}^2 \ {(0,0)}, j = 0..J, plus the coarse tensor low-pass
/// phihat(w1) phihat(w2) as output atom. 3(J+1)+1 atoms.
FilterBank build_tensor_wavelet_2d(const Grid& grid, int J);

/// 2-D directional wavelet bank: K rotated copies of an isotropic Gaussian
/// bump per scale on dyadic rings, scales j = 1..J, plus a Gaussian low-pass
/// output atom. K*J+1 atoms; ring radii 0.75 * nyquist * 2^{-j}.
FilterBank build_directional_wavelet_2d(const Grid& grid, int J, int K);

}  // namespace frameshift
