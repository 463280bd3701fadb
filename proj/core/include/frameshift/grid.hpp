#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "frameshift/errors.hpp"

namespace frameshift {

/// Periodic uniform grid, square (same extent per axis), power-of-two size.
/// Physical positions are k*spacing, k = 0..n-1, per axis; the domain wraps
/// with period n*spacing.
struct Grid {
    int dim = 1;          // 1 or 2
    int n = 0;            // samples per axis, power of two
    double spacing = 1.0; // grid step, physical length units

    std::size_t total() const {
        std::size_t t = 1;
        for (int i = 0; i < dim; ++i) t *= static_cast<std::size_t>(n);
        return t;
    }

    double extent() const { return n * spacing; }
    double nyquist() const { return 1.0 / (2.0 * spacing); }

    /// DFT-bin index -> signed frequency in cycles per unit length.
    /// Bins 0..n/2-1 are non-negative, n/2..n-1 negative (n/2 is -nyquist).
    double freq(int k) const {
        int s = (k < n / 2) ? k : k - n;
        return s / extent();
    }

    /// Riemann cell measure spacing^dim.
    double cell() const { return dim == 1 ? spacing : spacing * spacing; }

    /// Frequency-grid cell measure (1/extent)^dim.
    double freq_cell() const {
        double c = 1.0 / extent();
        return dim == 1 ? c : c * c;
    }

    bool operator==(const Grid&) const = default;

    void validate() const {
        if (dim != 1 && dim != 2) throw DimensionError("grid dim must be 1 or 2");
        if (n < 2 || (n & (n - 1)) != 0) throw DimensionError("grid size must be a power of two >= 2");
        if (!(spacing > 0.0) || !std::isfinite(spacing)) throw DimensionError("grid spacing must be positive");
    }
};

inline void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw DimensionError("operands live on different grids");
}

}  // namespace frameshift
