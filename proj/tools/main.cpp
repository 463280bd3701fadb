// frameshift CLI: frame building/analysis, network assembly, feature
// extraction, and the bound-verification harness.
//
// Exit codes: 0 success, 1 I/O or usage error, 2 admissibility rejection,
// 3 theorem-precondition violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frameshift/deform.hpp"
#include "frameshift/frames.hpp"
#include "frameshift/io.hpp"
#include "frameshift/network.hpp"
#include "frameshift/threading.hpp"
#include "frameshift/verify.hpp"

namespace fs = frameshift;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fs::IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fs::IoError("cannot open " + path + " for writing");
    out << text;
}

json report_json(const fs::BoundReport& r) {
    return json{{"name", r.name},
                {"measured", r.measured},
                {"bound", r.bound},
                {"pass", r.pass},
                {"slack", r.slack()},
                {"notes", r.notes}};
}

json admissibility_json(const fs::AdmissibilityReport& rep) {
    json layers = json::array();
    int n = 1;
    for (const auto& s : rep.layers) {
        layers.push_back({{"layer", n++},
                          {"B", s.B},
                          {"L", s.L},
                          {"R", s.R},
                          {"score", s.score},
                          {"suggested_C", s.suggested_C}});
    }
    return json{{"admissible", rep.admissible}, {"layers", layers}};
}

std::vector<double> freq_of(const fs::Grid& g, std::size_t flat) {
    if (g.dim == 1) return {g.freq(static_cast<int>(flat))};
    return {g.freq(static_cast<int>(flat) / g.n), g.freq(static_cast<int>(flat) % g.n)};
}

struct FrameBuildArgs {
    std::string kind;
    int n = 0;
    double spacing = 1.0;
    int k_max = 3;
    int j_min = -4, j_max = 0;
    int J = 3, K = 8;
    std::string normalize = "none";
    double scale = 0.0;
    std::string out;
};

int cmd_frame_build(const FrameBuildArgs& a) {
    fs::Grid grid;
    grid.dim = (a.kind == "wh1d" || a.kind == "wav1d") ? 1 : 2;
    grid.n = a.n;
    grid.spacing = a.spacing;
    grid.validate();

    fs::FilterBank bank;
    if (a.kind == "wh1d") bank = fs::build_weyl_heisenberg_1d(grid, a.k_max);
    else if (a.kind == "wav1d") bank = fs::build_wavelet_1d(grid, a.j_min, a.j_max);
    else if (a.kind == "tensor2d") bank = fs::build_tensor_wavelet_2d(grid, a.J);
    else if (a.kind == "dir2d") bank = fs::build_directional_wavelet_2d(grid, a.J, a.K);
    else throw fs::PreconditionError("unknown frame kind: " + a.kind);

    if (a.normalize == "parseval") bank = fs::normalize_parseval(bank);
    else if (a.normalize != "none") throw fs::PreconditionError("unknown normalize mode: " + a.normalize);
    if (a.scale > 0.0) bank = fs::normalize_scale(bank, a.scale);

    fs::write_bank(a.out, bank);
    const auto lp = fs::littlewood_paley(bank);
    std::cout << "wrote " << a.out << ": " << bank.labels.size() << " atoms ("
              << bank.construction << "), A=" << lp.bounds.A << " B=" << lp.bounds.B << "\n";
    return 0;
}

int cmd_frame_check(const std::string& path) {
    const fs::FilterBank bank = fs::read_bank(path);
    bank.validate();
    const auto lp = fs::littlewood_paley(bank);
    const bool parseval =
        std::abs(lp.bounds.A - 1.0) <= 1e-6 && std::abs(lp.bounds.B - 1.0) <= 1e-6;
    std::printf("A=%.6f B=%.6f\n", lp.bounds.A, lp.bounds.B);
    json rep{{"construction", bank.construction},
             {"atoms", bank.labels.size()},
             {"A", lp.bounds.A},
             {"B", lp.bounds.B},
             {"argmin_freq", freq_of(bank.grid, lp.bounds.argmin)},
             {"argmax_freq", freq_of(bank.grid, lp.bounds.argmax)},
             {"parseval", parseval}};
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_net_check(const std::string& net_path) {
    const fs::ModuleSequence seq = fs::build_sequence_from_json(slurp(net_path));
    const auto rep = fs::check_admissibility(seq);
    std::cout << admissibility_json(rep).dump(2) << "\n";
    return rep.admissible ? 0 : 2;
}

int cmd_extract(const std::string& net_path, const std::string& in_path,
                const std::string& out_path, bool force) {
    const std::string cfg = slurp(net_path);
    const fs::ModuleSequence seq = fs::build_sequence_from_json(cfg);
    const bool allow = force || fs::config_allows_inadmissible(cfg);
    const auto rep = fs::check_admissibility(seq);
    if (!rep.admissible && !allow) {
        std::cerr << admissibility_json(rep).dump(2) << "\n";
        throw fs::AdmissibilityError("module-sequence is not admissible (use --force to override)");
    }
    const fs::SampledSignal f = fs::read_signal(in_path);
    const fs::FeatureVector phi = fs::extract(seq, f, allow);
    fs::write_features(out_path, phi);
    std::cout << "wrote " << out_path << ": depth " << seq.depth() << ", |Phi f| = "
              << fs::feature_norm(phi) << ", tail energy " << phi.tail_energy << "\n";
    return 0;
}

struct VerifyArgs {
    std::string check;
    std::string net_path;
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<double> t;
    std::string field_path;
    double radius = 0.0;  // 0 = nyquist/4 default
    int depth = 0;        // 0 = deepest layer
    std::string csv_path;
    std::string json_path;
};

int cmd_verify(const VerifyArgs& a) {
    const fs::ModuleSequence seq = fs::build_sequence_from_json(slurp(a.net_path));
    const fs::Grid grid = seq.input_grid();
    const double radius = a.radius > 0.0 ? a.radius : grid.nyquist() / 4.0;
    const int depth = a.depth > 0 ? a.depth : seq.depth();

    const bool needs_t = a.check == "invariance" || a.check == "covariance";
    if (needs_t && a.t.empty())
        throw fs::PreconditionError("--t is required for " + a.check);
    if (needs_t && static_cast<int>(a.t.size()) != grid.dim)
        throw fs::PreconditionError("--t needs one component per grid dimension");

    fs::DeformationField field;
    const bool fixed_field = !a.field_path.empty();
    if (fixed_field) field = fs::DeformationField::parse(slurp(a.field_path));

    std::vector<fs::BoundReport> reports;
    for (int tr = 0; tr < a.trials; ++tr) {
        const fs::BandlimitSpec spec{radius, a.seed + 2 * static_cast<std::uint64_t>(tr)};
        if (a.check == "energy") {
            reports.push_back(fs::verify_energy(seq, fs::random_bandlimited(spec, grid)));
        } else if (a.check == "lipschitz") {
            const fs::BandlimitSpec spec2{radius, spec.seed + 1};
            reports.push_back(fs::verify_lipschitz(seq, fs::random_bandlimited(spec, grid),
                                                   fs::random_bandlimited(spec2, grid)));
        } else if (a.check == "invariance") {
            const auto all = fs::verify_invariance_all(seq, fs::random_bandlimited(spec, grid), a.t);
            reports.insert(reports.end(), all.begin(), all.end());
        } else if (a.check == "covariance") {
            reports.push_back(
                fs::verify_covariance(seq, fs::random_bandlimited(spec, grid), a.t, depth));
        } else if (a.check == "deformation") {
            const fs::DeformationField fld =
                fixed_field ? field : fs::random_parametric_field(grid, spec.seed);
            reports.push_back(fs::verify_deformation(seq, spec, fld));
        } else if (a.check == "bandlimit-error") {
            const fs::DeformationField fld =
                fixed_field ? field : fs::random_parametric_field(grid, spec.seed);
            reports.push_back(fs::verify_bandlimited_error(spec, grid, fld));
        } else {
            throw fs::PreconditionError("unknown verify check: " + a.check);
        }
    }

    int passes = 0;
    double min_slack = 0.0;
    bool first = true;
    json trials = json::array();
    for (const auto& r : reports) {
        trials.push_back(report_json(r));
        if (r.pass) ++passes;
        if (first || r.slack() < min_slack) min_slack = r.slack();
        first = false;
    }
    json out{{"check", a.check},
             {"seed", a.seed},
             {"reports", trials},
             {"aggregate",
              {{"total", reports.size()},
               {"passes", passes},
               {"min_slack", min_slack},
               {"pass", passes == static_cast<int>(reports.size())}}}};
    const std::string text = out.dump(2) + "\n";
    if (a.json_path.empty()) std::cout << text;
    else spit(a.json_path, text);

    if (!a.csv_path.empty()) {
        std::ostringstream csv;
        csv << "depth,measured,bound\n";
        for (const auto& r : reports) {
            int n = depth;
            // invariance report names carry the layer index
            if (auto p = r.name.find("n="); p != std::string::npos)
                n = std::stoi(r.name.substr(p + 2));
            csv << n << "," << r.measured << "," << r.bound << "\n";
        }
        spit(a.csv_path, csv.str());
    }
    return passes == static_cast<int>(reports.size()) ? 0 : 1;
}

int cmd_preset(int n, double spacing, int J, int K, int depth, const std::string& out) {
    json cfg{{"grid", {{"dim", 2}, {"n", n}, {"spacing", spacing}}},
             {"depth", depth},
             {"layers",
              json::array({{{"frame", {{"kind", "dir2d"}, {"J", J}, {"K", K}, {"normalize", "parseval"}}},
                            {"nonlinearity", "modulus"},
                            {"pooling", "subsample:1"}}})}};
    // fail fast if the preset does not assemble on this grid
    fs::build_sequence_from_json(cfg.dump());
    spit(out, cfg.dump(2) + "\n");
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_signal(const std::string& kind, int dim, int n, double spacing, double radius,
               std::uint64_t seed, const std::string& out) {
    fs::Grid grid{dim, n, spacing};
    grid.validate();
    if (kind == "random") {
        const double r = radius > 0.0 ? radius : grid.nyquist() / 4.0;
        fs::write_signal(out, fs::random_bandlimited({r, seed}, grid));
    } else if (kind == "zero") {
        fs::write_signal(out, fs::SampledSignal(grid, fs::Domain::Space));
    } else {
        throw fs::PreconditionError("unknown signal kind: " + kind);
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-discrete frame filter banks, deep feature extraction, bound verification"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker count (0: FRAMESHIFT_THREADS, then 1)");

    // frame build | frame check
    auto* frame = app.add_subcommand("frame", "build and analyze filter banks");
    frame->require_subcommand(1);
    FrameBuildArgs fb;
    auto* build = frame->add_subcommand("build", "construct a bank and write it to disk");
    build->add_option("--kind", fb.kind, "wh1d|wav1d|tensor2d|dir2d")
        ->required()
        ->check(CLI::IsMember({"wh1d", "wav1d", "tensor2d", "dir2d"}));
    build->add_option("--grid", fb.n, "samples per axis (power of two)")->required();
    build->add_option("--spacing", fb.spacing, "sample spacing");
    build->add_option("--kmax", fb.k_max, "wh1d: modulation range");
    build->add_option("--jmin", fb.j_min, "wav1d: coarsest scale");
    build->add_option("--jmax", fb.j_max, "wav1d: finest scale");
    build->add_option("--J", fb.J, "2-D: scale count");
    build->add_option("--K", fb.K, "dir2d: directions per scale");
    build->add_option("--normalize", fb.normalize, "parseval|none")
        ->check(CLI::IsMember({"parseval", "none"}));
    build->add_option("--scale", fb.scale, "divide atoms by sqrt(C)");
    build->add_option("--out", fb.out, "output .fbank path")->required();

    std::string check_bank;
    auto* fcheck = frame->add_subcommand("check", "print frame bounds and LP extrema");
    fcheck->add_option("bank", check_bank, ".fbank path")->required();

    // net check
    auto* net = app.add_subcommand("net", "network assembly and admissibility");
    net->require_subcommand(1);
    std::string net_cfg;
    auto* ncheck = net->add_subcommand("check", "per-layer admissibility report");
    ncheck->add_option("--net", net_cfg, "network config JSON")->required();

    // extract
    std::string ex_net, ex_in, ex_out;
    bool ex_force = false;
    auto* extract = app.add_subcommand("extract", "run the feature extractor");
    extract->add_option("--net", ex_net, "network config JSON")->required();
    extract->add_option("--in", ex_in, "input .fsig")->required();
    extract->add_option("--out", ex_out, "output .fpack")->required();
    extract->add_flag("--force", ex_force, "run even if the net is not admissible");

    // verify
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a proved bound empirically");
    verify->add_option("check", va.check,
                       "energy|lipschitz|invariance|covariance|deformation|bandlimit-error")
        ->required()
        ->check(CLI::IsMember({"energy", "lipschitz", "invariance", "covariance",
                               "deformation", "bandlimit-error"}));
    verify->add_option("--net", va.net_path, "network config JSON")->required();
    verify->add_option("--trials", va.trials, "number of random draws");
    verify->add_option("--seed", va.seed, "base RNG seed")->required();
    verify->add_option("--t", va.t, "translation vector (one entry per axis)");
    verify->add_option("--field", va.field_path, "deformation field JSON");
    verify->add_option("--radius", va.radius, "input band limit (default nyquist/4)");
    verify->add_option("--depth", va.depth, "feature layer (default deepest)");
    verify->add_option("--csv", va.csv_path, "write (depth,measured,bound) rows");
    verify->add_option("--json", va.json_path, "write the report here instead of stdout");

    // preset
    int pn = 128, pJ = 3, pK = 8, pdepth = 2;
    double pspacing = 1.0;
    std::string pout;
    auto* preset = app.add_subcommand("preset", "write a scattering-network config");
    preset->add_option("--grid", pn, "samples per axis (power of two)");
    preset->add_option("--spacing", pspacing, "sample spacing");
    preset->add_option("--J", pJ, "scale count");
    preset->add_option("--K", pK, "directions per scale");
    preset->add_option("--depth", pdepth, "network depth");
    preset->add_option("--out", pout, "output config path")->required();

    // signal
    std::string sg_kind = "random", sg_out;
    int sg_dim = 1, sg_n = 0;
    double sg_spacing = 1.0, sg_radius = 0.0;
    std::uint64_t sg_seed = 0;
    auto* signal = app.add_subcommand("signal", "generate test signals");
    signal->add_option("kind", sg_kind, "random|zero")
        ->check(CLI::IsMember({"random", "zero"}));
    signal->add_option("--dim", sg_dim, "1 or 2");
    signal->add_option("--grid", sg_n, "samples per axis (power of two)")->required();
    signal->add_option("--spacing", sg_spacing, "sample spacing");
    signal->add_option("--radius", sg_radius, "band limit (default nyquist/4)");
    signal->add_option("--seed", sg_seed, "RNG seed")->required();
    signal->add_option("--out", sg_out, "output .fsig path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        fs::threading::set_threads(threads);
        if (build->parsed()) return cmd_frame_build(fb);
        if (fcheck->parsed()) return cmd_frame_check(check_bank);
        if (ncheck->parsed()) return cmd_net_check(net_cfg);
        if (extract->parsed()) return cmd_extract(ex_net, ex_in, ex_out, ex_force);
        if (verify->parsed()) return cmd_verify(va);
        if (preset->parsed()) return cmd_preset(pn, pspacing, pJ, pK, pdepth, pout);
        if (signal->parsed()) return cmd_signal(sg_kind, sg_dim, sg_n, sg_spacing, sg_radius, sg_seed, sg_out);
        std::cerr << "no command\n";
        return 1;
    } catch (const fs::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fs::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
