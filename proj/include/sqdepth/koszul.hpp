#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sqdepth/instance.hpp"
#include "sqdepth/linalg.hpp"

namespace sqdepth {

// Printed as "inf"; the depth of the zero module.
constexpr int kDepthInfinite = std::numeric_limits<int>::max();

// Multigraded module top/bottom: the subquotient of the ring spanned by the
// squarefree monomials of top \ bottom.  top may be the unit ideal (the
// whole ring, for S/J style modules).
struct SqModule {
    int n = 0;
    MonomialIdeal top, bottom;

    static SqModule quotient(const Instance& inst) { return {inst.n, inst.I, inst.J}; }
    static SqModule ring_mod(const MonomialIdeal& j) {
        return {j.n, MonomialIdeal::unit(j.n), j};
    }

    // True iff every monomial of top lies in bottom.
    bool is_zero() const;
};

struct BettiEntry {
    std::uint64_t multidegree = 0;  // squarefree multidegree, as a bit set
    int index = 0;                  // homological index
    long long dim = 0;
};

struct KoszulOptions {
    bool collect = false;            // record all nonzero homology dimensions
    bool check_d2 = false;           // verify boundary-squared == 0 on every component
    bool full_shortcut = true;       // skip fully alive multidegrees (exact there)
};

struct KoszulReport {
    int n = 0;
    bool zero_module = false;
    int pd = 0;     // largest index with nonvanishing homology
    int depth = 0;  // n - pd, or kDepthInfinite for the zero module
    std::vector<BettiEntry> entries;
};

// Koszul homology of M with respect to x1..xn over the given field, computed
// one squarefree multidegree at a time.  Guarded to n <= 20.
KoszulReport koszul_homology(const SqModule& m, FieldSpec field, KoszulOptions opts = {});

int depth_of(const SqModule& m, FieldSpec field);

// The constructive cycle descent behind the one-generator depth drop: given
// depth I/(J, f_r) = d, builds the top-multidegree kernel combination
// z = sum y_i f_i e_{[n] \ supp f_i} and the contracted chain
//   z_j = sum_i delta_i y_i f_i e_{[n] \ ({j} u supp f_i)},
//   delta_i = (-1)^{#{k not in supp f_i : k > j}},
// in the Koszul complex of I/J, then verifies it is a nonzero cycle (and
// nonzero in homology), certifying depth I/J <= d+1.
struct CycleWitness {
    int r_index = 0;  // 1-based index into F of the removed generator
    int m_index = 0;  // 1-based index of the chosen y_m != 0
    int j = 0;        // chosen variable in supp f_r \ supp f_m
    std::vector<std::string> coefficients;  // y_i per F index, "0" for absent
    bool boundary_vanishes = false;
    bool nonzero = false;
    bool nonzero_in_homology = false;
};

// Throws InapplicableError unless r > 1 and depth I/(J, f_r) == d.
CycleWitness witness_cycle_descent(const Instance& inst, int r_index, FieldSpec field);

}  // namespace sqdepth
