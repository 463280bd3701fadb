#include "frameshift/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace frameshift::fft {
namespace {

struct PlanCache {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, fftw_plan> plans;

    fftw_plan get(int n, int dim, int sign) {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(n, dim, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        // FFTW_UNALIGNED so the plan works with any std::vector storage via
        // the new-array execute interface.
        std::size_t total = (dim == 1) ? static_cast<std::size_t>(n)
                                       : static_cast<std::size_t>(n) * n;
        auto* scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
        fftw_plan p;
        if (dim == 1) {
            p = fftw_plan_dft_1d(n, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        } else {
            p = fftw_plan_dft_2d(n, n, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        }
        fftw_free(scratch);
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(std::complex<double>* data, int n, int dim, int sign) {
    fftw_plan p = cache().get(n, dim, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace

void forward(std::complex<double>* data, int n, int dim) { run(data, n, dim, FFTW_FORWARD); }
void inverse(std::complex<double>* data, int n, int dim) { run(data, n, dim, FFTW_BACKWARD); }

}  // namespace frameshift::fft
