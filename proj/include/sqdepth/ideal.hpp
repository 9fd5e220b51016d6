#pragma once

#include <vector>

#include "sqdepth/monomial.hpp"

namespace sqdepth {

// Squarefree monomial ideal given by its unique minimal generators, kept as
// a canonically sorted antichain.  No generators = zero ideal; the single
// generator 1 = the whole ring.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    static MonomialIdeal zero(int n) { return MonomialIdeal{n, {}}; }
    static MonomialIdeal unit(int n) { return MonomialIdeal{n, {Monomial::one()}}; }

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }

    // Smallest generator degree; meaningless for the zero ideal.
    int min_degree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Drops generators divisible by another, dedupes, sorts canonically.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

// Membership: some generator divides m.
bool contains(const MonomialIdeal& ideal, Monomial m);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Intersection via pairwise lcms.
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// (j : u).  Satisfies: m in (j : u)  <=>  m*u in j (exponents capped at 1).
MonomialIdeal ideal_colon(const MonomialIdeal& j, Monomial u);

// a subseteq b as sets of monomials.
bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace sqdepth
