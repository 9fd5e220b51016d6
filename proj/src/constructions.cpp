#include "sqdepth/constructions.hpp"

#include <algorithm>
#include <map>

#include "sqdepth/errors.hpp"

namespace sqdepth {

namespace {

// Appends all squarefree supersets of `base` using `need` extra variables
// drawn from [next_var, n].
void extend_supersets(std::uint64_t base, int next_var, int need, int n,
                      std::vector<std::uint64_t>& out) {
    if (need == 0) {
        out.push_back(base);
        return;
    }
    for (int t = next_var; t + need - 1 <= n; ++t) {
        std::uint64_t b = std::uint64_t(1) << (t - 1);
        if (base & b) continue;
        extend_supersets(base | b, t + 1, need - 1, n, out);
    }
}

// Squarefree monomials of `top` \ `bottom` of exact degree `deg`, canonical
// order.  Enumerates supersets of the generators, so it stays cheap even for
// large n.
std::vector<Monomial> survivors_of_degree(const MonomialIdeal& top, const MonomialIdeal& bottom,
                                          int deg) {
    std::vector<std::uint64_t> raw;
    for (const Monomial& g : top.gens) {
        if (g.degree() > deg) continue;
        extend_supersets(g.bits, 1, deg - g.degree(), top.n, raw);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> out;
    for (std::uint64_t bits : raw)
        if (!contains(bottom, Monomial{bits})) out.push_back(Monomial{bits});
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool sorted_member(const std::vector<Monomial>& sorted, Monomial m) {
    return std::binary_search(sorted.begin(), sorted.end(), m, CanonicalLess{});
}

}  // namespace

DerivedSets derive_sets(const Instance& inst) {
    DerivedSets ds;
    ds.B = survivors_of_degree(inst.I, inst.J, inst.d + 1);
    ds.C = survivors_of_degree(inst.I, inst.J, inst.d + 2);
    for (int i = 0; i < inst.r(); ++i)
        for (int j = i + 1; j < inst.r(); ++j)
            ds.W.push_back({i + 1, j + 1, lcm(inst.F[i], inst.F[j])});
    for (const PairLcm& w : ds.W) ds.w_monomials.push_back(w.m);
    std::sort(ds.w_monomials.begin(), ds.w_monomials.end(), CanonicalLess{});
    ds.w_monomials.erase(std::unique(ds.w_monomials.begin(), ds.w_monomials.end()),
                         ds.w_monomials.end());

    MonomialIdeal fgens = minimalize(inst.n, inst.F);
    for (const Monomial& c : ds.C) {
        if (!contains(fgens, c)) continue;
        bool all_w = true;
        for (int t : c.indices()) {
            Monomial b = c.without_var(t);
            // b divides c and c avoids J, so b is in B iff it lies in I.
            if (!contains(inst.I, b)) continue;
            if (std::find(inst.E.begin(), inst.E.end(), b) != inst.E.end()) continue;
            if (!sorted_member(ds.w_monomials, b)) {
                all_w = false;
                break;
            }
        }
        if (all_w) ds.C3.push_back(c);
    }
    return ds;
}

bool is_pathological(const Instance& inst, const DerivedSets& ds) {
    MonomialIdeal fgens = minimalize(inst.n, inst.F);
    for (const Monomial& b : ds.B)
        if (contains(fgens, b) && !sorted_member(ds.w_monomials, b)) return false;
    return true;
}

HypothesisReport check_theorem_hypotheses(const Instance& inst) {
    return check_theorem_hypotheses(inst, derive_sets(inst));
}

HypothesisReport check_theorem_hypotheses(const Instance& inst, const DerivedSets& ds) {
    HypothesisReport hyp;
    MonomialIdeal fgens = minimalize(inst.n, inst.F);
    for (const Monomial& b : ds.B)
        if (contains(fgens, b) && !sorted_member(ds.w_monomials, b))
            hyp.pathological_witnesses.push_back(b);
    hyp.pathological = hyp.pathological_witnesses.empty();
    for (const Monomial& c : ds.C)
        if (sorted_member(ds.w_monomials, c)) hyp.c_w_witnesses.push_back(c);
    hyp.c_w_empty = hyp.c_w_witnesses.empty();
    hyp.c_in_c3 = true;
    for (const Monomial& c : ds.C)
        if (contains(fgens, c) && !sorted_member(ds.C3, c)) {
            hyp.c_in_c3 = false;
            break;
        }
    hyp.theorem_applicable = hyp.pathological && hyp.c_w_empty;
    if (!inst.E.empty())
        hyp.notes.push_back("higher-degree generators present; tests restricted to B and C inside (F)");
    return hyp;
}

GcdFamily gcd_family(const Instance& inst) {
    std::vector<Monomial> us;
    for (int i = 0; i < inst.r(); ++i)
        for (int j = i + 1; j < inst.r(); ++j) {
            Monomial g = gcd(inst.F[i], inst.F[j]);
            if (g.degree() == inst.d - 1) us.push_back(g);
        }
    std::sort(us.begin(), us.end(), CanonicalLess{});
    us.erase(std::unique(us.begin(), us.end()), us.end());

    GcdFamily fam;
    for (const Monomial& u : us) {
        std::vector<int> members;
        for (int j = 0; j < inst.r(); ++j)
            if (divides(u, inst.F[j])) members.push_back(j + 1);
        fam.u.push_back(u);
        fam.U.push_back(std::move(members));
    }

    // Two shared generators f_a, f_b would force u_i = gcd(f_a, f_b) = u_j.
    for (int i = 0; i < fam.e(); ++i)
        for (int j = i + 1; j < fam.e(); ++j) {
            std::vector<int> both;
            std::set_intersection(fam.U[i].begin(), fam.U[i].end(), fam.U[j].begin(),
                                  fam.U[j].end(), std::back_inserter(both));
            if (both.size() > 1)
                throw Error("distinct gcd families share two generators");
        }
    return fam;
}

LemmaL4Check lemma_l4_check(const Instance& inst) {
    GcdFamily fam = gcd_family(inst);
    if (fam.e() == 0) throw InapplicableError("no generator pair has a degree d-1 gcd");
    std::vector<int> common = fam.U[0];
    for (int i = 1; i < fam.e(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), fam.U[i].begin(), fam.U[i].end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    LemmaL4Check out;
    out.premise = !common.empty();
    DerivedSets ds = derive_sets(inst);
    out.conclusion = true;
    for (const Monomial& c : ds.C)
        if (sorted_member(ds.w_monomials, c)) {
            out.conclusion = false;
            break;
        }
    return out;
}

GammaAnalysis gamma_analysis(const Instance& inst, int r_index, const MonomialIdeal& iprime) {
    if (r_index < 1 || r_index > inst.r())
        throw InputError("generator_index",
                         "generator index " + std::to_string(r_index) + " out of range");
    if (!ideal_subset(iprime, inst.I))
        throw InputError("iprime_subset", "Iprime is not contained in I");
    GcdFamily fam = gcd_family(inst);
    if (fam.e() == 0) throw InapplicableError("no generator pair has a degree d-1 gcd");
    const std::vector<int>& last = fam.U.back();
    if (!std::binary_search(last.begin(), last.end(), r_index))
        throw InapplicableError("designated generator is not in the last family");

    GammaAnalysis ga;
    ga.r_index = r_index;
    Monomial fr = inst.F[r_index - 1];
    std::vector<char> in_earlier(inst.r() + 1, 0), in_last(inst.r() + 1, 0);
    for (int i = 0; i + 1 < fam.e(); ++i)
        for (int k : fam.U[i]) in_earlier[k] = 1;
    for (int k : last) in_last[k] = 1;
    for (int k = 1; k <= inst.r(); ++k) {
        if (!in_earlier[k] || in_last[k]) continue;
        Monomial w = lcm(fr, inst.F[k - 1]);
        if (w.degree() != inst.d + 1) continue;  // w in B needs degree d+1
        if (contains(inst.J, w)) continue;
        if (contains(iprime, w)) continue;
        ga.A.push_back(k);
    }

    // Components of "lie in a common earlier family" on A.
    std::map<int, int> parent;
    for (int k : ga.A) parent[k] = k;
    auto find = [&](int k) {
        while (parent[k] != k) k = parent[k] = parent[parent[k]];
        return k;
    };
    for (int i = 0; i + 1 < fam.e(); ++i) {
        int first = 0;
        for (int k : fam.U[i]) {
            if (!parent.count(k)) continue;
            if (first == 0)
                first = k;
            else
                parent[find(k)] = find(first);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int k : ga.A) groups[find(k)].push_back(k);
    for (auto& [root, members] : groups) ga.classes.push_back(members);
    std::sort(ga.classes.begin(), ga.classes.end());

    for (int k : ga.A) {
        // Membership in A already rules w_{r,k} out of J and Iprime.
        Monomial w = lcm(fr, inst.F[k - 1]);
        int g = Monomial{w.bits & ~fr.bits}.indices().front();
        ga.gamma.push_back(g);
    }
    std::sort(ga.gamma.begin(), ga.gamma.end());
    ga.gamma.erase(std::unique(ga.gamma.begin(), ga.gamma.end()), ga.gamma.end());
    return ga;
}

Instance pathologize(int n, const std::vector<Monomial>& F, FieldSpec field,
                     const std::vector<Monomial>& extra_j) {
    MonomialIdeal fgens = minimalize(n, F);
    if (fgens.is_zero()) throw InputError("I_zero", "pathologize needs at least one generator");
    if (fgens.gens.size() != F.size())
        throw InputError("generator_degrees", "generators must form an antichain");
    int d = fgens.min_degree();
    for (const Monomial& f : fgens.gens)
        if (f.degree() != d)
            throw InputError("generator_degrees", "generators must share one degree");

    std::vector<std::uint64_t> wbits;
    for (std::size_t i = 0; i < fgens.gens.size(); ++i)
        for (std::size_t j = i + 1; j < fgens.gens.size(); ++j)
            wbits.push_back(lcm(fgens.gens[i], fgens.gens[j]).bits);
    std::sort(wbits.begin(), wbits.end());
    wbits.erase(std::unique(wbits.begin(), wbits.end()), wbits.end());

    std::vector<std::uint64_t> mult;
    for (const Monomial& f : fgens.gens) extend_supersets(f.bits, 1, 1, n, mult);
    std::sort(mult.begin(), mult.end());
    mult.erase(std::unique(mult.begin(), mult.end()), mult.end());

    std::vector<Monomial> jg;
    for (std::uint64_t bits : mult)
        if (!std::binary_search(wbits.begin(), wbits.end(), bits)) jg.push_back(Monomial{bits});
    for (std::uint64_t bits : wbits)
        if (std::popcount(bits) == d + 2) jg.push_back(Monomial{bits});
    jg.insert(jg.end(), extra_j.begin(), extra_j.end());
    return make_instance(n, fgens.gens, jg, field);
}

bool question_hypothesis(const Instance& inst, int i) {
    if (i < 1 || i > inst.r() - 1)
        throw InputError("question_index", "i must lie in [1, r-1]");
    if (!inst.E.empty()) throw InapplicableError("higher-degree generators present");

    std::vector<Monomial> ms = survivors_of_degree(inst.I, inst.J, inst.d + i);
    for (const Monomial& m : ms) {
        std::vector<int> div;
        for (int j = 0; j < inst.r(); ++j)
            if (divides(inst.F[j], m)) div.push_back(j);
        if (int(div.size()) < i + 1) return false;
        // Depth-first search for an (i+1)-subset with lcm m.
        auto pick = [&](auto&& self, std::size_t pos, int left, std::uint64_t acc) -> bool {
            if (left == 0) return acc == m.bits;
            if (div.size() - pos < std::size_t(left)) return false;
            for (std::size_t t = pos; t < div.size(); ++t)
                if (self(self, t + 1, left - 1, acc | inst.F[div[t]].bits)) return true;
            return false;
        };
        if (!pick(pick, 0, i + 1, 0)) return false;
    }
    return true;
}

}  // namespace sqdepth
