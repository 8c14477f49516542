#include "hermitian/grid.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hermitian {

namespace {
constexpr long kInf = kInfiniteDistance;
constexpr long kNegInf = -kInfiniteDistance;
}

DivisorGrid make_base_grid(const CurveParams& cp, long m_min, long m_max,
                           long n_max) {
    if (m_max <= m_min || n_max < 1) throw std::invalid_argument("bad window");
    DivisorGrid g;
    g.q = cp.q;
    g.m_min = m_min;
    g.m_max = m_max;
    g.n_max = n_max;
    g.lab_p.assign(g.node_count(), 0);
    g.lab_q.assign(g.node_count(), 0);
    const long kd = cp.k_degree();
    for (long m = m_min; m <= m_max; ++m)
        for (long n = 0; n <= n_max; ++n) {
            const CanonicalForm c = canonicalize({m - kd, n}, cp);
            if (m < m_max) g.p_label(m, n) = base_coset_bound(c, StepDir::P, cp);
            if (n < n_max) g.q_label(m, n) = base_coset_bound(c, StepDir::Q, cp);
        }
    return g;
}

namespace {

// One full application of the raise rule; returns true if any label grew.
// For each source node A: W(v) = best path-min from A to v, M(v) = max of
// W over nodes >= v; every edge with tail >= A may rise to M(head).
bool sweep(DivisorGrid& g, bool parallel) {
    const long nn = g.nodes_n();
    const long nm = g.nodes_m();
    const long n_nodes = nm * nn;

#ifdef _OPENMP
    const int threads = parallel ? omp_get_max_threads() : 1;
#else
    const int threads = 1;
    (void)parallel;
#endif

    std::vector<std::vector<long>> tl_p(threads, g.lab_p);
    std::vector<std::vector<long>> tl_q(threads, g.lab_q);

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        auto& bp = tl_p[tid];
        auto& bq = tl_q[tid];
        std::vector<long> w(n_nodes), mx(n_nodes);

#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
        for (long src = 0; src < n_nodes; ++src) {
            const long am = src / nn, an = src % nn;
            // W forward over the cone of A
            for (long m = am; m < nm; ++m)
                for (long n = an; n < nn; ++n) {
                    const long v = m * nn + n;
                    if (m == am && n == an) {
                        w[v] = kInf;
                        continue;
                    }
                    long best = kNegInf;
                    if (m > am) {
                        const long u = v - nn;
                        best = std::max(best, std::min(w[u], g.lab_p[u]));
                    }
                    if (n > an) {
                        const long u = v - 1;
                        best = std::max(best, std::min(w[u], g.lab_q[u]));
                    }
                    w[v] = best;
                }
            // suffix max of W, excluding the source itself
            for (long m = nm - 1; m >= am; --m)
                for (long n = nn - 1; n >= an; --n) {
                    const long v = m * nn + n;
                    long b = (m == am && n == an) ? kNegInf : w[v];
                    if (m + 1 < nm) b = std::max(b, mx[v + nn]);
                    if (n + 1 < nn) b = std::max(b, mx[v + 1]);
                    mx[v] = b;
                }
            // raise edges with tail in the cone
            for (long m = am; m < nm; ++m)
                for (long n = an; n < nn; ++n) {
                    const long v = m * nn + n;
                    if (m + 1 < nm && mx[v + nn] > bp[v]) bp[v] = mx[v + nn];
                    if (n + 1 < nn && mx[v + 1] > bq[v]) bq[v] = mx[v + 1];
                }
        }
    }

    std::vector<long> best_p = std::move(tl_p[0]);
    std::vector<long> best_q = std::move(tl_q[0]);
    for (int t = 1; t < threads; ++t)
        for (long v = 0; v < n_nodes; ++v) {
            best_p[v] = std::max(best_p[v], tl_p[t][v]);
            best_q[v] = std::max(best_q[v], tl_q[t][v]);
        }
    const bool changed = best_p != g.lab_p || best_q != g.lab_q;
    g.lab_p = std::move(best_p);
    g.lab_q = std::move(best_q);
    return changed;
}

}  // namespace

void propagate_grid(DivisorGrid& grid) {
    while (sweep(grid, true)) {
    }
}

void propagate_grid_serial(DivisorGrid& grid) {
    while (sweep(grid, false)) {
    }
}

long search_exit_degree(const CurveParams& cp, long delta_max) {
    const long h = cp.q + 1;
    return cp.k_degree() + std::max(delta_max, h * h);
}

std::vector<long> search_sequences(const DivisorGrid& grid, const CurveParams& cp,
                                   long delta_max) {
    if (delta_max < 2) throw std::invalid_argument("delta_max < 2");
    const long exit_deg = search_exit_degree(cp, delta_max);
    if (grid.m_max < exit_deg || grid.m_min > -1 - cp.q || grid.n_max < cp.q + 1)
        throw std::invalid_argument("window too small for the sequence search");
    const long nm = grid.nodes_m(), nn = grid.nodes_n();
    std::vector<long> result;
    std::vector<long> val(nm * nn, 0);
    for (long delta = 2; delta <= delta_max; ++delta) {
        for (long m = grid.m_max; m >= grid.m_min; --m)
            for (long n = grid.n_max; n >= 0; --n) {
                const size_t v = grid.node_idx(m, n);
                if (m + n >= exit_deg) {
                    val[v] = 0;
                    continue;
                }
                long best = kInf;
                if (m < grid.m_max) {
                    const long lab = grid.p_label(m, n);
                    best = std::min(best, val[grid.node_idx(m + 1, n)] +
                                              ((lab > 0 && lab < delta) ? 1 : 0));
                }
                if (n < grid.n_max) {
                    const long lab = grid.q_label(m, n);
                    best = std::min(best, val[grid.node_idx(m, n + 1)] +
                                              ((lab > 0 && lab < delta) ? 1 : 0));
                }
                val[v] = best;
            }
        long best_start = kInf;
        for (long n = 0; n <= cp.q; ++n) {
            const long m = -1 - n;
            if (m < grid.m_min) break;
            best_start = std::min(best_start, val[grid.node_idx(m, n)]);
        }
        result.push_back(best_start);
    }
    return result;
}

}  // namespace hermitian
