#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqdepth/instance.hpp"

namespace sqdepth {

// lcm of a generator pair, with 1-based indices into F, i < j.
struct PairLcm {
    int i = 0, j = 0;
    Monomial m;
};

// The degree-level sets attached to a quotient I/J:
//   B = squarefree monomials of I\J of degree d+1,
//   C = squarefree monomials of I\J of degree d+2,
//   W = pairwise lcms of the degree-d generators (with pair provenance),
//   C3 = elements of C in (F) all of whose degree-(d+1) squarefree divisors
//        lying in B but not among the degree-(d+1) generators are W-monomials.
struct DerivedSets {
    std::vector<Monomial> B, C;
    std::vector<PairLcm> W;
    std::vector<Monomial> w_monomials;  // deduped, canonical order
    std::vector<Monomial> C3;

    int s() const { return int(B.size()); }
    int q() const { return int(C.size()); }
};

DerivedSets derive_sets(const Instance& inst);

// True iff every element of B divisible by some degree-d generator is a
// W-monomial.
bool is_pathological(const Instance& inst, const DerivedSets& ds);

struct HypothesisReport {
    bool pathological = false;
    bool c_w_empty = false;
    bool c_in_c3 = false;
    bool theorem_applicable = false;  // pathological && c_w_empty
    std::vector<Monomial> pathological_witnesses;  // B n (F) \ W
    std::vector<Monomial> c_w_witnesses;           // C n W
    std::vector<std::string> notes;
};

HypothesisReport check_theorem_hypotheses(const Instance& inst);
HypothesisReport check_theorem_hypotheses(const Instance& inst, const DerivedSets& ds);

// The distinct degree-(d-1) gcds u_1 < ... < u_e of generator pairs
// (canonical order) and U_i = { 1-based j : u_i | f_j }.  Distinct families
// share at most one generator (checked).  May be empty.
struct GcdFamily {
    std::vector<Monomial> u;
    std::vector<std::vector<int>> U;

    int e() const { return int(u.size()); }
};

GcdFamily gcd_family(const Instance& inst);

// Premise: every family contains a common generator.  Conclusion: C meets no
// W-monomial.  Callers assert premise => conclusion on instances satisfying
// the ambient hypotheses.  Throws InapplicableError when e = 0.
struct LemmaL4Check {
    bool premise = false;
    bool conclusion = false;
};

LemmaL4Check lemma_l4_check(const Instance& inst);

// Peeling analysis for the designated last family U_e: with f_r in U_e and
// Iprime the ideal of U_e minus f_r,
//   A       = { k : f_k in (union of earlier families) \ U_e,
//               w_{r,k} in B, w_{r,k} not in Iprime },
//   classes = components of "share an earlier family" on A,
//   Gamma   = variables g with w_{r,t} = x_g * f_r for t in A and
//             w_{r,t} outside (J, Iprime).
struct GammaAnalysis {
    int r_index = 0;
    std::vector<int> A;
    std::vector<std::vector<int>> classes;
    std::vector<int> gamma;
};

GammaAnalysis gamma_analysis(const Instance& inst, int r_index, const MonomialIdeal& iprime);

// Builds the canonical pathological quotient over F: J is generated by the
// degree-(d+1) multiples of F that are not W-monomials together with the
// degree-(d+2) W-monomials.  The result always satisfies the applicability
// predicate (B n (F) inside W, C disjoint from W).  Optional extra
// generators (degree >= d+1, inside (F)) are added to J before validation.
Instance pathologize(int n, const std::vector<Monomial>& F, FieldSpec field = {},
                     const std::vector<Monomial>& extra_j = {});

// True iff every squarefree monomial of I\J of degree d+i is an lcm of i+1
// distinct degree-d generators.  Requires E empty (InapplicableError) and
// 1 <= i (InputError).
bool question_hypothesis(const Instance& inst, int i);

}  // namespace sqdepth
