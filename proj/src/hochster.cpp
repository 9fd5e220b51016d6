#include "sqdepth/hochster.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "sqdepth/errors.hpp"

namespace sqdepth {

namespace {

using boost::multiprecision::cpp_int;

// Cross-multiplication elimination with per-row gcd reduction.  Not Bareiss:
// this file keeps its own arithmetic so the two depth routes stay separate.
int rank_rational(std::vector<std::vector<cpp_int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        const cpp_int piv = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const cpp_int head = m[i][col];
            cpp_int g = 0;
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] = piv * m[i][j] - head * m[rank][j];
                g = boost::multiprecision::gcd(g, m[i][j]);
            }
            if (g > 1)
                for (std::size_t j = col; j < cols; ++j) m[i][j] /= g;
        }
        ++rank;
    }
    return int(rank);
}

int rank_gf(std::vector<std::vector<long long>> m, std::uint32_t p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m)
        for (auto& v : row) {
            v %= p;
            if (v < 0) v += p;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        // Clear below without inverting: row_i := piv*row_i - head*row_rank.
        const long long piv = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const long long head = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = ((m[i][j] * piv - m[rank][j] * head) % p + p) % p;
        }
        ++rank;
    }
    return int(rank);
}

}  // namespace

int hochster_depth_oracle(const MonomialIdeal& j, FieldSpec field) {
    const int n = j.n;
    if (n < 1 || n > 20)
        throw InputError("n_too_large_for_enumeration",
                         "the simplicial oracle enumerates multidegrees, n <= 20 required");
    if (j.is_unit()) throw InputError("J_unit", "the quotient by the unit ideal is zero");

    const std::uint64_t size = std::uint64_t(1) << n;
    std::vector<char> face(size);
    for (std::uint64_t mask = 0; mask < size; ++mask) face[mask] = !contains(j, Monomial{mask});

    int max_i = 0;
    std::vector<std::vector<std::uint32_t>> faces_by_card(n + 1);
    for (std::uint64_t a = 0; a < size; ++a) {
        if (face[a]) {
            // Faces are closed under subsets, so the restriction to a is the
            // full simplex: acyclic unless a is empty (where H~_{-1} = K).
            if (a == 0) max_i = std::max(max_i, 0);
            continue;
        }
        const int na = std::popcount(a);
        for (int s = 0; s <= na; ++s) faces_by_card[s].clear();
        for (std::uint64_t b = a;; b = (b - 1) & a) {
            if (face[b]) faces_by_card[std::popcount(b)].push_back(std::uint32_t(b));
            if (b == 0) break;
        }
        for (int s = 0; s <= na; ++s)
            std::sort(faces_by_card[s].begin(), faces_by_card[s].end());

        // Reduced complex: dimension k holds the faces of cardinality k+1,
        // down to the empty face at k = -1.  r[s] = rank of the boundary
        // from cardinality s to cardinality s-1.
        std::vector<int> r(na + 2, 0);
        for (int s = 1; s <= na; ++s) {
            const auto& cols = faces_by_card[s];
            const auto& rows = faces_by_card[s - 1];
            if (cols.empty() || rows.empty()) continue;
            std::vector<std::vector<long long>> mat(rows.size(),
                                                    std::vector<long long>(cols.size(), 0));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint64_t b = cols[c];
                for (std::uint64_t rest = b; rest; rest &= rest - 1) {
                    std::uint64_t tbit = rest & (~rest + 1);
                    std::uint64_t sub = b & ~tbit;
                    auto it = std::lower_bound(rows.begin(), rows.end(), std::uint32_t(sub));
                    if (it == rows.end() || *it != sub) continue;
                    int sgn = std::popcount(b & (tbit - 1)) % 2 ? -1 : 1;
                    mat[std::size_t(it - rows.begin())][c] = sgn;
                }
            }
            if (field.is_rational()) {
                std::vector<std::vector<cpp_int>> big(mat.size(),
                                                      std::vector<cpp_int>(cols.size()));
                for (std::size_t i = 0; i < mat.size(); ++i)
                    for (std::size_t c = 0; c < cols.size(); ++c) big[i][c] = mat[i][c];
                r[s] = rank_rational(std::move(big));
            } else {
                r[s] = rank_gf(std::move(mat), field.characteristic);
            }
        }

        for (int s = 0; s <= na; ++s) {
            long long dim = (long long)faces_by_card[s].size() - r[s] - r[s + 1];
            if (dim < 0) throw Error("negative homology dimension");
            if (dim > 0) max_i = std::max(max_i, na - (s - 1) - 1);
        }
    }
    return n - max_i;
}

}  // namespace sqdepth
