#pragma once

#include <stdexcept>
#include <vector>

#include "hermitian/bounds.hpp"

namespace hermitian {

/// Rectangle of divisors mP + nQ, m in [m_min, m_max], n in [0, n_max],
/// with one label per P-edge (m,n)->(m+1,n) and per Q-edge (m,n)->(m,n+1).
/// Labels bound the minimum weight of the corresponding residue-code coset
/// over the support R - P - Q.
struct DivisorGrid {
    int q = 0;
    long m_min = 0, m_max = 0, n_max = 0;
    std::vector<long> lab_p;  // (m,n) with m < m_max
    std::vector<long> lab_q;  // (m,n) with n < n_max

    long nodes_m() const { return m_max - m_min + 1; }
    long nodes_n() const { return n_max + 1; }
    long node_count() const { return nodes_m() * nodes_n(); }
    size_t node_idx(long m, long n) const {
        if (m < m_min || m > m_max || n < 0 || n > n_max)
            throw std::out_of_range("divisor outside the grid window");
        return static_cast<size_t>((m - m_min) * nodes_n() + n);
    }
    long& p_label(long m, long n) { return lab_p[node_idx(m, n)]; }
    long p_label(long m, long n) const { return lab_p[node_idx(m, n)]; }
    long& q_label(long m, long n) { return lab_q[node_idx(m, n)]; }
    long q_label(long m, long n) const { return lab_q[node_idx(m, n)]; }
};

/// Initial labels from the base coset bound at each edge.
DivisorGrid make_base_grid(const CurveParams& cp, long m_min, long m_max,
                           long n_max);

/// Fixpoint of the path-propagation rule: repeatedly, for node pairs
/// A <= B, every edge lying between A and B may be raised to the best
/// over monotone paths A -> B of the minimum label along the path.
/// Labels never decrease; the fixpoint is order-independent.
/// The parallel version partitions the sweep across threads and merges
/// raises with max; its fixpoint is identical to the serial one.
void propagate_grid(DivisorGrid& grid);
void propagate_grid_serial(DivisorGrid& grid);

/// Improved redundancy of the best monotone P/Q divisor sequence, per
/// designed distance delta = 2..delta_max: the DP minimizes the number of
/// edge labels in (0, delta) over paths from the degree -1 frontier
/// (n in [0, q]) to the exit frontier where every later bound is >= delta.
/// Requires the grid to cover degrees up to 2g-2 + max(delta_max, (q+1)^2).
std::vector<long> search_sequences(const DivisorGrid& grid, const CurveParams& cp,
                                   long delta_max);

/// Exit degree used by search_sequences' far frontier.
long search_exit_degree(const CurveParams& cp, long delta_max);

}  // namespace hermitian
