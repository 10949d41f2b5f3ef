#ifndef DCX_HOMOLOGY_HPP
#define DCX_HOMOLOGY_HPP

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "dcx/errors.hpp"

namespace dcx {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over the rationals by Smith-style integer elimination with
/// smallest-pivot selection to limit coefficient growth.
inline int integer_rank(IntMatrix m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c0 = 0; r < rows && c0 < cols; ++c0) {
        // Find the entry of smallest nonzero magnitude in the remaining block.
        int pr = -1, pc = -1;
        for (int i = r; i < rows; ++i)
            for (int j = c0; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr < 0 || std::abs(m[i][j]) < std::abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(m[r], m[pr]);
        for (auto& row : m) std::swap(row[c0], row[pc]);
        // Clear the column below; repeat until exact (Euclidean steps).
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                std::int64_t q = m[i][c0] / m[r][c0];
                for (int j = c0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c0] != 0) {
                    std::swap(m[r], m[i]); // remainder is smaller; continue
                    dirty = true;
                }
            }
        }
        ++r;
    }
    return r;
}

/// Rank over GF(2), as an independent cross-check on the integer path.
inline int mod2_rank(const IntMatrix& m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    std::vector<std::vector<char>> a(rows, std::vector<char>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = (char)(((m[i][j] % 2) + 2) % 2);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c])
                for (int j = c; j < cols; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

/// Rank with the GF(2) cross-check. A disagreement means 2-torsion in the
/// chain maps, which the complexes here never produce.
inline int checked_rank(const IntMatrix& m) {
    int ri = integer_rank(m);
    require_internal(ri == mod2_rank(m), "integer and mod-2 ranks disagree");
    return ri;
}

/// Reduced Betti numbers b~_0..b~_{max_dim} from chain sizes and boundary
/// matrices (boundary[k] maps C_k -> C_{k-1}; boundary[0] is empty).
inline std::vector<int> reduced_betti(const std::vector<int>& chain_sizes,
                                      const std::vector<IntMatrix>& boundary,
                                      int max_dim) {
    std::vector<int> rank(max_dim + 2, 0);
    for (int k = 1; k <= max_dim + 1; ++k)
        if (k < (int)boundary.size() && k < (int)chain_sizes.size() && chain_sizes[k] > 0)
            rank[k] = checked_rank(boundary[k]);
    std::vector<int> betti(max_dim + 1, 0);
    for (int k = 0; k <= max_dim; ++k) {
        int ck = k < (int)chain_sizes.size() ? chain_sizes[k] : 0;
        int b = ck - rank[k] - rank[k + 1] - (k == 0 ? 1 : 0);
        betti[k] = b;
    }
    return betti;
}

} // namespace dcx

#endif
