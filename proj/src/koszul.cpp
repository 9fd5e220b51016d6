#include "sqdepth/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sqdepth/errors.hpp"

namespace sqdepth {

bool SqModule::is_zero() const { return ideal_subset(top, bottom); }

namespace {

inline int pop(std::uint64_t x) { return std::popcount(x); }

// (-1)^{#{k in A : k < t}} for a 1-based variable t.
inline int koszul_sign(std::uint64_t A, int t) {
    return pop(A & ((std::uint64_t(1) << (t - 1)) - 1)) % 2 ? -1 : 1;
}

// Membership table for the upward closure of `gens` on all 2^n subsets:
// in[mask] = some generator divides mask.
std::vector<char> closure_table(int n, const MonomialIdeal& ideal) {
    std::vector<char> in(std::size_t(1) << n, 0);
    for (const Monomial& g : ideal.gens) in[g.bits] = 1;
    for (std::uint64_t mask = 0; mask < in.size(); ++mask) {
        if (in[mask]) continue;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
            if (in[mask & ~(rest & (~rest + 1))]) {
                in[mask] = 1;
                break;
            }
        }
    }
    return in;
}

}  // namespace

KoszulReport koszul_homology(const SqModule& m, FieldSpec field, KoszulOptions opts) {
    if (m.n < 1 || m.n > 20)
        throw InputError("n_too_large_for_enumeration",
                         "Koszul homology enumerates multidegrees, n <= 20 required");
    KoszulReport rep;
    rep.n = m.n;
    if (m.is_zero()) {
        rep.zero_module = true;
        rep.pd = -1;
        rep.depth = kDepthInfinite;
        return rep;
    }

    const int n = m.n;
    const std::uint64_t size = std::uint64_t(1) << n;
    std::vector<char> in_top = closure_table(n, m.top);
    std::vector<char> in_bottom = closure_table(n, m.bottom);
    const bool top_unit = m.top.is_unit();

    std::vector<long long> h(n + 1, 0);
    std::vector<std::vector<BettiEntry>> found(n + 1);
    std::vector<std::vector<std::uint32_t>> level(n + 1);

    for (std::uint64_t a = 0; a < size; ++a) {
        // No submonomial of a lies in top: every component vanishes.
        if (!in_top[a]) continue;
        if (opts.full_shortcut && top_unit && !in_bottom[a]) {
            // Every basis vector over subsets of a is present, so the
            // component is the full simplex chain complex: exact for a != 0.
            if (a == 0) {
                h[0] += 1;
                if (opts.collect) found[0].push_back({a, 0, 1});
            }
            continue;
        }

        const int na = pop(a);
        for (int i = 0; i <= na; ++i) level[i].clear();
        for (std::uint64_t b = a;; b = (b - 1) & a) {
            if (in_top[b] && !in_bottom[b]) level[pop(a ^ b)].push_back(std::uint32_t(a ^ b));
            if (b == 0) break;
        }
        for (int i = 0; i <= na; ++i) std::sort(level[i].begin(), level[i].end());

        // r[i] = rank of the boundary K_i -> K_{i-1} on this component.
        std::vector<int> r(na + 2, 0);
        std::vector<IntMat> mats(na + 1);
        for (int i = 1; i <= na; ++i) {
            const auto& cols = level[i];
            const auto& rows = level[i - 1];
            if (cols.empty() || rows.empty()) continue;
            IntMat mat(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint64_t A = cols[c];
                for (std::uint64_t rest = A; rest; rest &= rest - 1) {
                    int t = std::countr_zero(rest) + 1;
                    std::uint64_t A2 = A & ~(rest & (~rest + 1));
                    auto it = std::lower_bound(rows.begin(), rows.end(), std::uint32_t(A2));
                    if (it == rows.end() || *it != A2) continue;  // target not in module
                    mat.at(std::size_t(it - rows.begin()), c) = koszul_sign(A, t);
                }
            }
            r[i] = rank_in_field(mat, field);
            if (opts.check_d2) mats[i] = std::move(mat);
        }

        if (opts.check_d2) {
            for (int i = 1; i + 1 <= na; ++i) {
                if (mats[i].rows == 0 || mats[i + 1].cols == 0 || mats[i + 1].rows == 0) continue;
                for (std::size_t row = 0; row < mats[i].rows; ++row)
                    for (std::size_t c = 0; c < mats[i + 1].cols; ++c) {
                        long long s = 0;
                        for (std::size_t k = 0; k < mats[i].cols; ++k)
                            s += mats[i].at(row, k) * mats[i + 1].at(k, c);
                        if (s != 0) throw Error("boundary composite is nonzero");
                    }
            }
        }

        for (int i = 0; i <= na; ++i) {
            long long hi = (long long)level[i].size() - r[i] - r[i + 1];
            if (hi < 0) throw Error("negative homology dimension");
            if (hi > 0) {
                h[i] += hi;
                if (opts.collect) found[i].push_back({a, i, hi});
            }
        }
    }

    rep.pd = -1;
    for (int i = n; i >= 0; --i)
        if (h[i] > 0) {
            rep.pd = i;
            break;
        }
    if (rep.pd < 0) throw Error("nonzero module with no Koszul homology");
    rep.depth = n - rep.pd;

    if (opts.collect) {
        for (int i = 0; i <= n; ++i)
            for (const BettiEntry& e : found[i]) rep.entries.push_back(e);
        std::sort(rep.entries.begin(), rep.entries.end(),
                  [](const BettiEntry& x, const BettiEntry& y) {
                      if (x.multidegree != y.multidegree)
                          return canonical_less(Monomial{x.multidegree}, Monomial{y.multidegree});
                      return x.index < y.index;
                  });
    }
    return rep;
}

int depth_of(const SqModule& m, FieldSpec field) { return koszul_homology(m, field).depth; }

CycleWitness witness_cycle_descent(const Instance& inst, int r_index, FieldSpec field) {
    const int r = inst.r();
    if (r_index < 1 || r_index > r)
        throw InputError("generator_index", "generator index out of range");
    if (r < 2)
        throw InapplicableError("cycle descent needs a second minimal generator of least degree");

    const int n = inst.n;
    const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    const Monomial fr = inst.F[r_index - 1];

    // Kernel of the boundary leaving homological index n-d at the full
    // multidegree of I/(J, f_r).  Columns: the generators f_i, i != r (the
    // complete basis there).  Rows: the degree-(d+1) monomials of the module.
    std::vector<int> col_gen;  // 0-based F index per column
    for (int i = 0; i < r; ++i)
        if (i != r_index - 1) col_gen.push_back(i);

    std::vector<std::uint64_t> row_set;
    for (int i : col_gen) {
        std::uint64_t fi = inst.F[i].bits;
        for (std::uint64_t rest = full & ~fi; rest; rest &= rest - 1) {
            std::uint64_t b = fi | (rest & (~rest + 1));
            if (divides(fr, Monomial{b}) || contains(inst.J, Monomial{b})) continue;
            row_set.push_back(b);
        }
    }
    std::sort(row_set.begin(), row_set.end());
    row_set.erase(std::unique(row_set.begin(), row_set.end()), row_set.end());

    IntMat mat(row_set.size(), col_gen.size());
    for (std::size_t c = 0; c < col_gen.size(); ++c) {
        const Monomial fi = inst.F[col_gen[c]];
        for (std::size_t row = 0; row < row_set.size(); ++row) {
            Monomial b{row_set[row]};
            if (!divides(fi, b)) continue;
            int t = std::countr_zero(b.bits & ~fi.bits) + 1;
            mat.at(row, c) = koszul_sign(full & ~fi.bits, t);
        }
    }

    std::vector<BigInt> y;
    if (field.is_rational()) {
        y = kernel_vector_char0(mat);
    } else {
        for (long long v : kernel_vector_mod_p(mat, field.characteristic)) y.push_back(v);
    }
    if (y.empty())
        throw InapplicableError("depth I/(J, f_r) exceeds the least generator degree: "
                                "the top multidegree kernel is trivial");

    CycleWitness w;
    w.r_index = r_index;
    w.coefficients.assign(r, "0");
    for (std::size_t c = 0; c < col_gen.size(); ++c) w.coefficients[col_gen[c]] = y[c].str();

    int m_col = -1;
    for (std::size_t c = 0; c < col_gen.size(); ++c)
        if (y[c] != 0) {
            m_col = int(c);
            break;
        }
    w.m_index = col_gen[m_col] + 1;
    const Monomial fm = inst.F[w.m_index - 1];
    // f_r and f_m are distinct of equal degree, so the difference is nonempty.
    w.j = std::countr_zero(fr.bits & ~fm.bits) + 1;
    const std::uint64_t jbit = std::uint64_t(1) << (w.j - 1);

    // z_j = sum delta_i y_i f_i e_{[n] \ ({j} u supp f_i)} over i with
    // j outside supp f_i; delta_i = (-1)^{#{k not in supp f_i : k > j}}.
    struct Term {
        std::uint64_t A;
        Monomial f;
        BigInt c;
    };
    std::vector<Term> terms;
    const std::uint64_t above_j = full & ~((jbit << 1) - 1);
    for (std::size_t c = 0; c < col_gen.size(); ++c) {
        if (y[c] == 0) continue;
        const Monomial fi = inst.F[col_gen[c]];
        if (fi.bits & jbit) continue;
        BigInt coef = pop(above_j & ~fi.bits) % 2 ? -y[c] : y[c];
        if (!field.is_rational()) {
            coef %= field.characteristic;
            if (coef < 0) coef += field.characteristic;
            if (coef == 0) continue;
        }
        terms.push_back({full & ~(fi.bits | jbit), fi, coef});
    }
    w.nonzero = !terms.empty();

    std::map<std::uint64_t, BigInt> boundary;
    for (const Term& term : terms) {
        for (std::uint64_t rest = term.A; rest; rest &= rest - 1) {
            std::uint64_t tbit = rest & (~rest + 1);
            int t = std::countr_zero(tbit) + 1;
            Monomial b{term.f.bits | tbit};
            if (contains(inst.J, b)) continue;  // dead in I/J
            BigInt v = term.c * koszul_sign(term.A, t);
            boundary[term.A & ~tbit] += v;
        }
    }
    w.boundary_vanishes = true;
    for (const auto& [key, v] : boundary) {
        BigInt val = v;
        if (!field.is_rational()) val %= field.characteristic;
        if (val != 0) {
            w.boundary_vanishes = false;
            break;
        }
    }

    // Nothing maps into this spot: coefficients one degree below the least
    // generator degree would be needed, and I has none.
    const bool incoming_empty = inst.I.min_degree() > inst.d - 1;
    w.nonzero_in_homology = w.nonzero && w.boundary_vanishes && incoming_empty;
    return w;
}

}  // namespace sqdepth
