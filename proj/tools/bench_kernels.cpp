// Benchmark comparing the OpenMP kernels against their serial references:
// exhaustive weight enumeration, dual weight-distribution enumeration, and
// grid propagation.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermitian/codes.hpp"
#include "hermitian/grid.hpp"
#include "hermitian/oracle.hpp"

using namespace hermitian;

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
                serial, parallel, serial / parallel, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP with %d threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif

    {
        // [26, 8] two-point code over GF(9): 9^8 messages
        const CurveParams cp = curve_params(3);
        const FieldSpec& F = field_make(3);
        const LinearCode code = classical_code(SequenceKind::TwoPoint, 12, cp, F);
        long ws = 0, wp = 0;
        const double ts = time_of([&] { ws = min_weight_exhaustive_serial(code, 1e12); });
        const double tp = time_of([&] { wp = min_weight_exhaustive(code, 1e12); });
        report("min weight, q=3, k=8", ts, tp, ws == wp);
    }
    {
        // dual distribution of a [26, 18] code over GF(9): 9^8 dual words
        const CurveParams cp = curve_params(3);
        const FieldSpec& F = field_make(3);
        const LinearCode code = classical_code(SequenceKind::TwoPoint, 22, cp, F);
        WeightDistribution ds, dp;
        const double ts =
            time_of([&] { ds = dual_weight_distribution_serial(code, 1e12); });
        const double tp = time_of([&] { dp = dual_weight_distribution(code, 1e12); });
        bool equal = ds.counts.size() == dp.counts.size();
        for (size_t i = 0; equal && i < ds.counts.size(); ++i)
            equal = ds.counts[i] == dp.counts[i];
        report("dual distribution, q=3", ts, tp, equal);
    }
    {
        // propagation fixpoint on a q = 16 window
        const CurveParams cp = curve_params(16);
        const DivisorGrid base = make_base_grid(cp, -20, 600, cp.q + 2);
        DivisorGrid gs = base, gp = base;
        const double ts = time_of([&] { propagate_grid_serial(gs); });
        const double tp = time_of([&] { propagate_grid(gp); });
        report("grid propagation, q=16", ts, tp,
               gs.lab_p == gp.lab_p && gs.lab_q == gp.lab_q);
    }
    return 0;
}
