#include "sqdepth/ideal.hpp"

#include <algorithm>

namespace sqdepth {

int MonomialIdeal::min_degree() const {
    int best = Monomial::max_vars + 1;
    for (const Monomial& g : gens) best = std::min(best, g.degree());
    return best;
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        // canonical order refines degree, so only earlier entries can divide
        for (std::size_t k = 0; k < i && !redundant; ++k)
            redundant = divides(gens[k], gens[i]);
        if (!redundant) keep.push_back(gens[i]);
    }
    return MonomialIdeal{n, std::move(keep)};
}

bool contains(const MonomialIdeal& ideal, Monomial m) {
    for (const Monomial& g : ideal.gens)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return minimalize(a.n, std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const Monomial& g : a.gens)
        for (const Monomial& h : b.gens) gens.push_back(lcm(g, h));
    return minimalize(a.n, std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& j, Monomial u) {
    std::vector<Monomial> gens;
    gens.reserve(j.gens.size());
    for (const Monomial& g : j.gens) gens.push_back(Monomial{g.bits & ~u.bits});
    return minimalize(j.n, std::move(gens));
}

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    for (const Monomial& g : a.gens)
        if (!contains(b, g)) return false;
    return true;
}

}  // namespace sqdepth
