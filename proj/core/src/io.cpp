#include "frameshift/io.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

namespace frameshift {

using nlohmann::json;

namespace {

void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_u64(std::ostream& os, std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_f64(std::ostream& os, double v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_u8(std::ostream& os, std::uint8_t v) { os.write(reinterpret_cast<const char*>(&v), 1); }

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
std::uint8_t get_u8(std::istream& is) {
    std::uint8_t v;
    is.read(reinterpret_cast<char*>(&v), 1);
    return v;
}

void check_magic(std::istream& is, const char* magic, const std::string& what) {
    char buf[4];
    is.read(buf, 4);
    if (!is || std::memcmp(buf, magic, 4) != 0) throw IoError("bad magic for " + what);
}

void write_signal_stream(std::ostream& os, const SampledSignal& f) {
    os.write("FSIG", 4);
    put_u32(os, 1);
    put_u32(os, static_cast<std::uint32_t>(f.grid.dim));
    for (int i = 0; i < f.grid.dim; ++i) put_u32(os, static_cast<std::uint32_t>(f.grid.n));
    for (int i = 0; i < f.grid.dim; ++i) put_f64(os, f.grid.spacing);
    put_u8(os, static_cast<std::uint8_t>(f.domain));
    for (const auto& v : f.samples) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
}

SampledSignal read_signal_stream(std::istream& is) {
    check_magic(is, "FSIG", "signal");
    const std::uint32_t version = get_u32(is);
    if (version != 1) throw IoError("unsupported signal format version");
    Grid g;
    g.dim = static_cast<int>(get_u32(is));
    if (g.dim != 1 && g.dim != 2) throw IoError("signal has unsupported dimension");
    std::uint32_t n0 = 0;
    for (int i = 0; i < g.dim; ++i) {
        const std::uint32_t ni = get_u32(is);
        if (i == 0) n0 = ni;
        else if (ni != n0) throw IoError("non-square grids are not supported");
    }
    g.n = static_cast<int>(n0);
    double s0 = 0.0;
    for (int i = 0; i < g.dim; ++i) {
        const double si = get_f64(is);
        if (i == 0) s0 = si;
        else if (si != s0) throw IoError("anisotropic spacings are not supported");
    }
    g.spacing = s0;
    const std::uint8_t tag = get_u8(is);
    if (tag > 1) throw IoError("bad domain tag");
    g.validate();
    SampledSignal f(g, static_cast<Domain>(tag));
    for (auto& v : f.samples) {
        const double re = get_f64(is);
        const double im = get_f64(is);
        v = cplx{re, im};
    }
    if (!is) throw IoError("truncated signal blob");
    return f;
}

json grid_to_json(const Grid& g) {
    return json{{"dim", g.dim}, {"n", g.n}, {"spacing", g.spacing}};
}

}  // namespace

void write_signal(const std::string& path, const SampledSignal& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_signal_stream(os, f);
    if (!os) throw IoError("write failed: " + path);
}

SampledSignal read_signal(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    return read_signal_stream(is);
}

void write_bank(const std::string& path, const FilterBank& bank) {
    bank.validate();
    json manifest{
        {"labels", bank.labels},
        {"output_atom", bank.output_atom},
        {"construction", bank.construction},
        {"grid", grid_to_json(bank.grid)},
    };
    const std::string m = manifest.dump();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write("FBNK", 4);
    put_u32(os, 1);
    put_u64(os, m.size());
    os.write(m.data(), static_cast<std::streamsize>(m.size()));
    for (const auto& a : bank.atoms_freq) write_signal_stream(os, a);
    if (!os) throw IoError("write failed: " + path);
}

FilterBank read_bank(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    check_magic(is, "FBNK", "filter bank");
    if (get_u32(is) != 1) throw IoError("unsupported bank format version");
    const std::uint64_t mlen = get_u64(is);
    std::string m(mlen, '\0');
    is.read(m.data(), static_cast<std::streamsize>(mlen));
    const json manifest = json::parse(m);
    FilterBank bank;
    bank.labels = manifest.at("labels").get<std::vector<std::string>>();
    bank.output_atom = manifest.at("output_atom").get<std::string>();
    bank.construction = manifest.value("construction", "");
    const auto& g = manifest.at("grid");
    bank.grid = Grid{g.at("dim").get<int>(), g.at("n").get<int>(), g.at("spacing").get<double>()};
    for (std::size_t i = 0; i < bank.labels.size(); ++i)
        bank.atoms_freq.push_back(read_signal_stream(is));
    bank.validate();
    return bank;
}

void write_features(const std::string& path, const FeatureVector& phi) {
    json layers = json::array();
    for (const auto& layer : phi.layers) {
        json paths = json::array();
        json norms = json::array();
        for (const auto& e : layer) {
            paths.push_back(e.path);
            norms.push_back(norm_l2(e.signal));
        }
        json jl{{"paths", paths}, {"norms", norms}};
        if (!layer.empty()) jl["grid"] = grid_to_json(layer.front().signal.grid);
        layers.push_back(jl);
    }
    json manifest{{"layers", layers}, {"tail_energy", phi.tail_energy}};
    const std::string m = manifest.dump();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write("FPAK", 4);
    put_u32(os, 1);
    put_u64(os, m.size());
    os.write(m.data(), static_cast<std::streamsize>(m.size()));
    for (const auto& layer : phi.layers)
        for (const auto& e : layer) write_signal_stream(os, e.signal);
    if (!os) throw IoError("write failed: " + path);
}

FeatureVector read_features(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    check_magic(is, "FPAK", "feature pack");
    if (get_u32(is) != 1) throw IoError("unsupported feature pack version");
    const std::uint64_t mlen = get_u64(is);
    std::string m(mlen, '\0');
    is.read(m.data(), static_cast<std::streamsize>(mlen));
    const json manifest = json::parse(m);
    FeatureVector phi;
    phi.tail_energy = manifest.value("tail_energy", 0.0);
    for (const auto& jl : manifest.at("layers")) {
        std::vector<FeatureEntry> layer;
        for (const auto& jp : jl.at("paths")) {
            FeatureEntry e;
            e.path = jp.get<Path>();
            e.signal = read_signal_stream(is);
            layer.push_back(std::move(e));
        }
        phi.layers.push_back(std::move(layer));
    }
    return phi;
}

}  // namespace frameshift
