// End-to-end acceptance gate: ten checks, one line of output each.
// Every check recomputes its claim from scratch through the public API and
// fails loudly on any mismatch or when it overruns its wall-clock budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sqdepth/constructions.hpp"
#include "sqdepth/corpus.hpp"
#include "sqdepth/errors.hpp"
#include "sqdepth/hochster.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/stanley.hpp"

using namespace sqdepth;

namespace {

Monomial mono(std::initializer_list<int> idx) { return Monomial::from_indices({idx}); }

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << " FAILED[" << what << "]";
        }
    }
};

int quotient_depth(const Instance& inst) {
    return depth_of(SqModule::quotient(inst), inst.field);
}

int depth_mod_extra(const Instance& inst, Monomial extra) {
    MonomialIdeal bottom = ideal_sum(inst.J, minimalize(inst.n, {extra}));
    return depth_of(SqModule{inst.n, inst.I, bottom}, inst.field);
}

// ---- 1: five-generator reference quotient ------------------------------

void criterion1(Check& c) {
    Instance e2 = example_instance("e2");
    c.require(quotient_depth(e2) == 3, "depth I/J");
    c.require(depth_of(SqModule::ring_mod(e2.J), e2.field) == 3, "depth S/J");
    c.require(depth_of(SqModule::ring_mod(e2.I), e2.field) == 2, "depth S/I");

    DerivedSets ds = derive_sets(e2);
    std::vector<Monomial> expect = {mono({1, 2, 3}), mono({1, 2, 4}), mono({1, 3, 4}),
                                    mono({1, 3, 5}), mono({2, 3, 5})};
    c.require(ds.B == expect, "B as listed");
    for (Monomial b : ds.B)
        c.require(depth_mod_extra(e2, b) == 2, "depth I/(J," + to_string(b) + ")");
    c.detail << " depths I/J=3 S/J=3 S/I=2, |B|=5, every I/(J,b) has depth 2";
}

// ---- 2: the non-pathological variant -----------------------------------

void criterion2(Check& c) {
    Instance e4 = example_instance("e4");
    HypothesisReport hyp = check_theorem_hypotheses(e4);
    c.require(!hyp.pathological, "not pathological");
    bool witness = false;
    for (Monomial w : hyp.pathological_witnesses)
        if (w == mono({2, 3, 5})) witness = true;
    c.require(witness, "witness x2*x3*x5");
    c.require(quotient_depth(e4) == 3, "depth I'/J'");
    c.require(depth_mod_extra(e4, mono({2, 3, 5})) == 3, "depth I'/(J',x2*x3*x5)");
    c.require(depth_mod_extra(e4, mono({1, 3, 5})) == 2, "depth I'/(J',x1*x3*x5)");

    AuditReport audit = audit_example("e4", make_field(0));
    c.require(audit.all_asserts_pass, "recorded claims");
    c.detail << " pathological=false (witness x2*x3*x5), depth I'/J'=3, audit clean";
}

// ---- 3: the twelve-variable quotient ------------------------------------

void criterion3(Check& c) {
    Instance e = example_instance("e");
    DerivedSets ds = derive_sets(e);
    c.require(ds.s() == 27, "|B| = 27");
    c.require(depth_of(SqModule::ring_mod(e.J), e.field) == 2, "depth S/J");
    c.require(depth_of(SqModule::ring_mod(e.I), e.field) == 6, "depth S/I");
    c.require(quotient_depth(e) == 2, "depth I/J");

    Poset poset = build_poset(e);
    IntervalPartition part = example_e_partition();
    c.require(part.intervals.size() == 16, "16 intervals");
    std::set<std::uint64_t> seen;
    int covered = 0;
    for (const Interval& iv : part.intervals) {
        c.require(divides(iv.bottom, iv.top), "interval well formed");
        c.require(iv.top.degree() == 4, "top degree 4");
    }
    for (Monomial x : poset.elements) {
        int hits = 0;
        for (const Interval& iv : part.intervals)
            if (divides(iv.bottom, x) && divides(x, iv.top)) ++hits;
        c.require(hits <= 1, "intervals disjoint");
        if (hits == 1) ++covered;
    }
    c.detail << " published partition: valid, disjoint, tops degree 4, covers " << covered
             << "/" << poset.size() << " elements, computed |C|=" << ds.q();

    DecisionResult dec = sdepth_decision(poset, 4, kDefaultNodeBudget);
    c.require(dec.status != SearchStatus::Refuted, "sdepth >= 4 proven or timeout");
    c.detail << (dec.status == SearchStatus::Proven ? ", sdepth>=4 proven"
                                                    : ", sdepth>=4 search timed out");
}

// ---- 4: the eight-generator quotient ------------------------------------

void criterion4(Check& c) {
    Instance e3 = example_instance("e3");
    GcdFamily fam = gcd_family(e3);
    std::vector<std::string> want_u = {"x1", "x2", "x3", "x4", "x6"};
    std::vector<std::vector<int>> want_U = {
        {1, 2, 3}, {1, 4, 5}, {2, 4, 6, 7}, {3, 8}, {5, 7, 8}};
    c.require(fam.e() == 5, "five families");
    for (int i = 0; i < fam.e() && i < 5; ++i) {
        c.require(to_string(fam.u[i]) == want_u[i], "family gcd " + want_u[i]);
        c.require(fam.U[i] == want_U[i], "family members of " + want_u[i]);
    }
    int depth = quotient_depth(e3);
    c.require(depth <= 3, "depth I/J <= 3");
    c.detail << " families as printed, depth I/J=" << depth;
}

// ---- 5: two independent depth computations agree -------------------------

void criterion5(Check& c) {
    std::mt19937_64 rng(20260814);
    int checks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 5);  // 3..7
        std::vector<Monomial> gens;
        int count = 1 + int(rng() % 4);
        for (int i = 0; i < count; ++i) {
            std::uint64_t bits = rng() & ((std::uint64_t(1) << n) - 1);
            if (bits == 0) bits = 1;
            gens.push_back(Monomial{bits});
        }
        MonomialIdeal j = minimalize(n, gens);
        if (j.is_unit()) continue;
        for (long long p : {0LL, 2LL}) {
            FieldSpec field = make_field(p);
            int koszul = depth_of(SqModule::ring_mod(j), field);
            int simplicial = hochster_depth_oracle(j, field);
            if (koszul != simplicial) {
                c.require(false, "n=" + std::to_string(n) + " char=" + std::to_string(p));
                return;
            }
            ++checks;
        }
    }
    c.require(checks >= 100, "at least 100 comparisons");
    c.detail << " " << checks << " random quotients: resolution depth == simplicial depth";
}

// ---- 6: interval search agrees with exhaustive enumeration ---------------

void criterion6(Check& c) {
    int done = 0;
    for (std::uint64_t seed = 0; done < 50 && seed < 600; ++seed) {
        Instance inst;
        try {
            inst = random_instance(4 + int(seed % 2), 2, 3 + int(seed % 2), seed,
                                   GenMode::Generic);
        } catch (const Error&) {
            continue;
        }
        Poset p = build_poset(inst);
        if (p.size() > 12) continue;
        SdepthResult res = sdepth(p);
        if (!res.exact) continue;
        int brute = brute_force_sdepth(p);
        if (res.value != brute || !verify_partition(p, res.certificate, res.value).ok) {
            c.require(false, "seed " + std::to_string(seed));
            return;
        }
        ++done;
    }
    c.require(done >= 50, "at least 50 posets");
    c.detail << " " << done << " posets (<=12 elements): search value == brute force,"
             << " certificates verify";
}

// ---- 7: the depth bound on generated pathological quotients --------------

void criterion7(Check& c) {
    int count = 0, sdepth_checked = 0;
    for (int d : {1, 2, 3}) {
        for (int n = 4; n <= 7; ++n) {
            int max_r = d == 1 ? n : 2 * n / d;
            for (int r = 3; r <= max_r && count < 320; ++r) {
                for (std::uint64_t seed = 0; seed < 8; ++seed) {
                    Instance inst;
                    try {
                        inst = random_instance(n, d, r, seed, GenMode::Pathological);
                    } catch (const Error&) {
                        continue;
                    }
                    HypothesisReport hyp = check_theorem_hypotheses(inst);
                    if (!hyp.theorem_applicable) {
                        c.require(false, "generated instance not applicable");
                        return;
                    }
                    int depth = quotient_depth(inst);
                    if (depth > inst.d + 1) {
                        c.require(false, "depth bound at seed " + std::to_string(seed));
                        c.detail << " " << serialize_instance(inst);
                        return;
                    }
                    SdepthResult sres = sdepth(build_poset(inst), 200'000);
                    if (sres.exact) {
                        ++sdepth_checked;
                        if (sres.value < depth) {
                            c.require(false, "sdepth >= depth at seed " +
                                                 std::to_string(seed));
                            c.detail << " " << serialize_instance(inst);
                            return;
                        }
                    }
                    ++count;
                }
            }
        }
    }
    c.require(count >= 200, "at least 200 instances");
    c.detail << " " << count << " pathological quotients (n<=7, d in {1,2,3}):"
             << " depth <= d+1 always; sdepth >= depth on " << sdepth_checked
             << " completed searches";
}

// ---- 8: common-generator construction keeps C away from W ----------------

void criterion8(Check& c) {
    int count = 0;
    std::vector<std::array<int, 3>> shapes = {
        {6, 2, 3}, {7, 2, 4}, {8, 2, 4}, {7, 3, 4}, {8, 3, 5}, {9, 3, 5}, {9, 4, 5}};
    for (std::uint64_t seed = 0; count < 500 && seed < 200; ++seed) {
        for (const auto& [n, d, r] : shapes) {
            Instance inst;
            try {
                inst = random_instance(n, d, r, seed, GenMode::CommonGenerator);
            } catch (const Error&) {
                continue;
            }
            GcdFamily fam = gcd_family(inst);
            if (fam.e() < 2) continue;
            DerivedSets ds = derive_sets(inst);
            HypothesisReport hyp = check_theorem_hypotheses(inst, ds);
            if (!hyp.c_w_empty) {
                c.require(false, "C meets W at seed " + std::to_string(seed));
                c.detail << " " << serialize_instance(inst);
                return;
            }
            ++count;
        }
    }
    c.require(count >= 500, "at least 500 instances with two families");
    c.detail << " " << count << " common-generator quotients with e>=2: C n W empty";
}

// ---- 9: constructive depth-drop witnesses --------------------------------

void criterion9(Check& c) {
    Instance e2 = example_instance("e2");
    CycleWitness base = witness_cycle_descent(e2, 5, e2.field);
    c.require(base.boundary_vanishes && base.nonzero, "reference witness");

    int verified = 0, failures = 0;
    for (std::uint64_t seed = 0; verified < 20 && seed < 400; ++seed) {
        Instance inst;
        try {
            inst = random_instance(4 + int(seed % 3), 2, 3 + int(seed % 3), seed,
                                   GenMode::Pathological);
        } catch (const Error&) {
            continue;
        }
        if (inst.r() < 2) continue;
        for (int ri = inst.r(); ri >= 1; --ri) {
            if (depth_mod_extra(inst, inst.F[ri - 1]) != inst.d) continue;
            CycleWitness w = witness_cycle_descent(inst, ri, inst.field);
            if (!(w.boundary_vanishes && w.nonzero)) {
                ++failures;
                c.detail << " " << serialize_instance(inst);
            }
            ++verified;
            break;
        }
    }
    c.require(verified >= 20, "at least 20 random witnesses");
    c.require(failures == 0, "witness failures");
    c.detail << " reference witness plus " << verified
             << " random depth-drop witnesses: cycle closed and nonzero, " << failures
             << " failures";
}

// ---- 10: structural invariants -------------------------------------------

void criterion10(Check& c) {
    std::mt19937_64 rng(1009);

    // boundary composed with boundary vanishes on random modules
    for (int trial = 0; trial < 8; ++trial) {
        int n = 3 + int(rng() % 3);
        std::vector<Monomial> gi, gj;
        for (int i = 0; i < 3; ++i) {
            std::uint64_t bits = rng() & ((std::uint64_t(1) << n) - 1);
            gi.push_back(Monomial{bits ? bits : 1});
        }
        MonomialIdeal top = minimalize(n, gi);
        KoszulOptions opts;
        opts.check_d2 = true;
        opts.full_shortcut = false;
        try {
            koszul_homology(SqModule{n, top, MonomialIdeal::zero(n)}, make_field(0), opts);
        } catch (const Error&) {
            c.require(false, "d2 check");
            return;
        }
    }

    // quotient depth never drops below the generation degree
    int depth_checked = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Instance inst;
        try {
            inst = random_instance(5 + int(seed % 2), 2, 3 + int(seed % 3), seed,
                                   GenMode::Generic);
        } catch (const Error&) {
            continue;
        }
        c.require(quotient_depth(inst) >= inst.d, "depth >= d at seed " +
                                                      std::to_string(seed));
        ++depth_checked;

        // distinct gcd families share at most one generator (throws if not)
        gcd_family(inst);
    }

    // homology over GF(p) dominates the rational homology, degreewise
    KoszulOptions collect;
    collect.collect = true;
    for (const char* id : {"e2", "e4", "e3"}) {
        Instance inst = example_instance(id);
        KoszulReport r0 = koszul_homology(SqModule::quotient(inst), make_field(0), collect);
        for (long long p : {2LL, 3LL}) {
            KoszulReport rp = koszul_homology(SqModule::quotient(inst), make_field(p),
                                              collect);
            std::map<std::pair<std::uint64_t, int>, long long> dimp;
            for (const BettiEntry& e : rp.entries) dimp[{e.multidegree, e.index}] = e.dim;
            for (const BettiEntry& e : r0.entries) {
                auto it = dimp.find({e.multidegree, e.index});
                c.require(it != dimp.end() && it->second >= e.dim,
                          std::string("betti domination ") + id);
            }
            c.require(rp.depth <= r0.depth, std::string("depth drop ") + id);
        }
    }

    // ideal arithmetic against exhaustive membership, n = 8
    std::vector<Monomial> space;
    for (std::uint64_t b = 0; b < (1u << 8); ++b) space.push_back(Monomial{b});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Monomial> ga, gb;
        for (int i = 0; i < 4; ++i) {
            ga.push_back(Monomial{rng() & 0xffu});
            gb.push_back(Monomial{rng() & 0xffu});
        }
        MonomialIdeal a = minimalize(8, ga), b = minimalize(8, gb);
        Monomial u = Monomial{rng() & 0xffu};
        MonomialIdeal sum = ideal_sum(a, b), inter = ideal_intersect(a, b),
                      colon = ideal_colon(a, u);
        for (Monomial x : space) {
            bool ok = contains(sum, x) == (contains(a, x) || contains(b, x)) &&
                      contains(inter, x) == (contains(a, x) && contains(b, x)) &&
                      contains(colon, x) == contains(a, lcm(x, u));
            if (!ok) {
                c.require(false, "ideal arithmetic");
                return;
            }
        }
    }

    c.detail << " boundary^2=0, depth>=d on " << depth_checked
             << " quotients, family overlap bound, betti domination over GF(2)/GF(3),"
             << " ideal arithmetic vs enumeration";
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        void (*run)(Check&);
        double budget_seconds;
    };
    const std::vector<Entry> entries = {
        {1, "five-generator reference quotient", criterion1, 5.0},
        {2, "non-pathological variant", criterion2, 5.0},
        {3, "twelve-variable quotient and partition", criterion3, 600.0},
        {4, "eight-generator families and depth", criterion4, 30.0},
        {5, "resolution depth vs simplicial depth", criterion5, 120.0},
        {6, "interval search vs brute force", criterion6, 120.0},
        {7, "depth bound on pathological quotients", criterion7, 600.0},
        {8, "common-generator disjointness", criterion8, 120.0},
        {9, "cycle descent witnesses", criterion9, 120.0},
        {10, "structural invariants", criterion10, 300.0},
    };

    bool all = true;
    for (const Entry& entry : entries) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.run(check);
        } catch (const std::exception& e) {
            check.pass = false;
            check.detail << " exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        if (secs > entry.budget_seconds) {
            check.pass = false;
            check.detail << " over budget (" << entry.budget_seconds << "s)";
        }
        all = all && check.pass;
        std::printf("CRITERION %d: %s (%.2fs) %s -%s\n", entry.id,
                    check.pass ? "PASS" : "FAIL", secs, entry.label,
                    check.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILED");
    return all ? 0 : 1;
}
