#pragma once

#include <string>

#include "frameshift/frames.hpp"
#include "frameshift/network.hpp"
#include "frameshift/signal.hpp"

namespace frameshift {

// Binary signal format (.fsig): little-endian "FSIG" magic, version u32,
// dim u32, per-axis size u32, per-axis spacing f64, domain u8, then
// re/im f64 pairs in row-major order.
void write_signal(const std::string& path, const SampledSignal& f);
SampledSignal read_signal(const std::string& path);

// Filter bank container (.fbank): "FBNK" magic, version u32, manifest
// length u64, JSON manifest (labels, output_atom, grid, construction),
// then one signal blob per atom in label order.
void write_bank(const std::string& path, const FilterBank& bank);
FilterBank read_bank(const std::string& path);

// Feature pack (.fpack): "FPAK" magic, version u32, manifest length u64,
// JSON manifest (per-layer paths, grids, norms, tail energy), then one
// signal blob per feature in manifest order.
void write_features(const std::string& path, const FeatureVector& phi);
FeatureVector read_features(const std::string& path);

}  // namespace frameshift
