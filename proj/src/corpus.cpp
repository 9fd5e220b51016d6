#include "sqdepth/corpus.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>
#include <set>

#include "sqdepth/constructions.hpp"
#include "sqdepth/errors.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/report.hpp"

namespace sqdepth {

namespace {

using ordered_json = nlohmann::ordered_json;

Monomial mono(std::initializer_list<int> idx) { return Monomial::from_indices(idx); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string depth_str(int depth) {
    return depth == kDepthInfinite ? "inf" : std::to_string(depth);
}

std::string index_set(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string family_str(const GcdFamily& fam) {
    std::string s;
    for (int i = 0; i < fam.e(); ++i) {
        if (i) s += ';';
        s += "(" + to_string(fam.u[i]) + "," + index_set(fam.U[i]) + ")";
    }
    return s.empty() ? "none" : s;
}

int depth_with_extra(const Instance& inst, const std::vector<Monomial>& extra) {
    MonomialIdeal bottom = ideal_sum(inst.J, minimalize(inst.n, extra));
    return depth_of(SqModule{inst.n, inst.I, bottom}, inst.field);
}

std::vector<int> family_intersection(const GcdFamily& fam) {
    std::vector<int> common = fam.U.empty() ? std::vector<int>{} : fam.U[0];
    for (int i = 1; i < fam.e(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), fam.U[i].begin(), fam.U[i].end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    return common;
}

}  // namespace

std::vector<std::string> example_ids() { return {"e2", "e4", "e", "e3"}; }

Instance example_instance(const std::string& id, FieldSpec field) {
    if (id == "e2") {
        std::vector<Monomial> I = {mono({1, 2}), mono({1, 3}), mono({1, 4}), mono({2, 3}),
                                   mono({3, 5})};
        std::vector<Monomial> J = {mono({1, 2, 5}), mono({1, 4, 5}), mono({2, 3, 4}),
                                   mono({3, 4, 5})};
        return make_instance(5, I, J, field);
    }
    if (id == "e4") {
        std::vector<Monomial> I = {mono({1, 2}), mono({1, 3}), mono({1, 4}), mono({2, 3})};
        std::vector<Monomial> J = {mono({1, 2, 5}), mono({1, 4, 5}), mono({2, 3, 4})};
        return make_instance(5, I, J, field);
    }
    if (id == "e") {
        std::vector<Monomial> I;
        for (int i = 1; i <= 6; ++i) I.push_back(mono({i, 12}));
        for (int k = 7; k <= 11; ++k) I.push_back(mono({6, k}));
        std::vector<Monomial> J;
        for (int k = 7; k <= 11; ++k)
            for (int i = 1; i <= 5; ++i) J.push_back(mono({i, k, 12}));
        for (int i = 1; i <= 5; ++i)
            for (int k = 7; k <= 11; ++k) J.push_back(mono({i, 6, k}));
        for (int k = 9; k <= 11; ++k) J.push_back(mono({6, k, 12}));
        return make_instance(12, I, J, field);
    }
    if (id == "e3") {
        std::vector<Monomial> I = {mono({1, 2}), mono({1, 3}), mono({1, 4}), mono({2, 3}),
                                   mono({3, 5}), mono({2, 6}), mono({3, 6}), mono({4, 6})};
        std::vector<Monomial> J = {mono({1, 2, 5}), mono({1, 3, 6}), mono({1, 4, 5}),
                                   mono({1, 4, 6}), mono({2, 3, 4}), mono({2, 5, 6}),
                                   mono({3, 4, 5}), mono({3, 5, 6}), mono({4, 5, 6})};
        return make_instance(6, I, J, field);
    }
    throw InputError("unknown_example", "no bundled example named \"" + id + "\"");
}

IntervalPartition example_e_partition() {
    IntervalPartition p;
    auto add = [&](std::initializer_list<int> u, std::initializer_list<int> v) {
        p.intervals.push_back({mono(u), mono(v)});
    };
    add({1, 12}, {1, 2, 6, 12});
    add({2, 12}, {2, 3, 6, 12});
    add({3, 12}, {3, 4, 6, 12});
    add({4, 12}, {4, 5, 6, 12});
    add({5, 12}, {1, 5, 6, 12});
    add({6, 12}, {6, 7, 8, 12});
    add({6, 7}, {6, 7, 8, 9});
    add({6, 8}, {6, 8, 9, 10});
    add({6, 9}, {6, 9, 10, 11});
    add({6, 10}, {6, 7, 10, 11});
    add({6, 11}, {6, 7, 8, 11});
    add({1, 3, 12}, {1, 3, 4, 12});
    add({1, 4, 12}, {1, 4, 5, 12});
    add({2, 4, 12}, {2, 4, 6, 12});
    add({2, 5, 12}, {2, 3, 5, 12});
    add({3, 5, 12}, {3, 5, 6, 12});
    return p;
}

namespace {

struct AuditBuilder {
    AuditReport rep;

    void row(const std::string& id, const std::string& claimed, const std::string& computed,
             Policy policy) {
        bool pass = policy == Policy::Report || claimed == computed;
        if (policy == Policy::Report && claimed != computed)
            rep.notes.push_back("reported claim " + id + ": printed " + claimed + ", computed " +
                                computed);
        if (policy == Policy::Assert && !pass) rep.all_asserts_pass = false;
        rep.rows.push_back({id, claimed, computed, policy, pass});
    }

    // Assert row whose pass condition is supplied by the caller (used for
    // one-sided bounds).
    void row_check(const std::string& id, const std::string& claimed,
                   const std::string& computed, bool pass) {
        if (!pass) rep.all_asserts_pass = false;
        rep.rows.push_back({id, claimed, computed, Policy::Assert, pass});
    }
};

void audit_e2(AuditBuilder& b, FieldSpec field) {
    Instance inst = example_instance("e2", field);
    DerivedSets ds = derive_sets(inst);
    HypothesisReport hyp = check_theorem_hypotheses(inst, ds);

    b.row("B", "[x1*x2*x3,x1*x2*x4,x1*x3*x4,x1*x3*x5,x2*x3*x5]", monomial_list(ds.B),
          Policy::Assert);
    b.row("s", "5", std::to_string(ds.s()), Policy::Assert);
    b.row("B_subset_W", "true", bool_str(hyp.pathological), Policy::Assert);
    b.row("q", "2", std::to_string(ds.q()), Policy::Report);
    b.rep.notes.push_back("computed C = " + monomial_list(ds.C));

    int depth_ij = depth_of(SqModule::quotient(inst), field);
    int depth_sj = depth_of(SqModule::ring_mod(inst.J), field);
    int depth_si = depth_of(SqModule::ring_mod(inst.I), field);
    if (field.is_rational()) {
        b.row("depth_I/J", "3", depth_str(depth_ij), Policy::Assert);
        b.row("depth_S/J", "3", depth_str(depth_sj), Policy::Assert);
        b.row("depth_S/I", "2", depth_str(depth_si), Policy::Assert);
        for (const Monomial& m : ds.B)
            b.row("depth_I/(J," + to_string(m) + ")", "2",
                  depth_str(depth_with_extra(inst, {m})), Policy::Assert);
    } else {
        b.row_check("depth_I/J", "<=3", depth_str(depth_ij), depth_ij <= 3);
        b.row_check("depth_S/J", "<=3", depth_str(depth_sj), depth_sj <= 3);
        b.row_check("depth_S/I", "<=2", depth_str(depth_si), depth_si <= 2);
    }
}

void audit_e4(AuditBuilder& b, FieldSpec field) {
    Instance inst = example_instance("e4", field);
    Instance outer = example_instance("e2", field);
    DerivedSets ds = derive_sets(inst);
    HypothesisReport hyp = check_theorem_hypotheses(inst, ds);

    b.row("J'=J_intersect_I'", "[x1*x2*x5,x1*x4*x5,x2*x3*x4]",
          monomial_list(ideal_intersect(outer.J, inst.I).gens), Policy::Assert);
    b.row("pathological", "false", bool_str(hyp.pathological), Policy::Assert);
    bool witness = std::find(hyp.pathological_witnesses.begin(),
                             hyp.pathological_witnesses.end(),
                             mono({2, 3, 5})) != hyp.pathological_witnesses.end();
    b.row("x2*x3*x5_in_B'\\W'", "true", bool_str(witness), Policy::Assert);
    b.rep.notes.push_back("pathological witnesses = " +
                          monomial_list(hyp.pathological_witnesses));

    Monomial b1 = mono({1, 3, 5}), b2 = mono({2, 3, 5});
    b.row("depth_I'/(J',x1*x3*x5)", "2", depth_str(depth_with_extra(inst, {b1})),
          Policy::Assert);
    b.row("depth_I'/(J',x1*x3*x5,x2*x3*x5)", "2",
          depth_str(depth_with_extra(inst, {b1, b2})), Policy::Assert);
    b.row("depth_I/(J,f5)", "2", depth_str(depth_with_extra(outer, {mono({3, 5})})),
          Policy::Assert);
    if (field.is_rational()) {
        b.row("depth_I'/(J',x2*x3*x5)", "3", depth_str(depth_with_extra(inst, {b2})),
              Policy::Assert);
        b.row("depth_I'/J'", "3", depth_str(depth_of(SqModule::quotient(inst), field)),
              Policy::Assert);
    }
}

void audit_e(AuditBuilder& b, FieldSpec field) {
    Instance inst = example_instance("e", field);
    DerivedSets ds = derive_sets(inst);
    GcdFamily fam = gcd_family(inst);

    // B as described: lcms w_ij over 1<=i<j<=5, w_kt over 6<k<t<=11, and
    // w_i6 for i in [8]\{6}, in the paper's generator numbering.
    std::vector<Monomial> described;
    auto w = [&](Monomial a, Monomial c) { return lcm(a, c); };
    auto f = [&](int i) { return i <= 6 ? mono({i, 12}) : mono({6, i}); };
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) described.push_back(w(f(i), f(j)));
    for (int k = 7; k <= 11; ++k)
        for (int t = k + 1; t <= 11; ++t) described.push_back(w(f(k), f(t)));
    for (int i = 1; i <= 8; ++i)
        if (i != 6) described.push_back(w(f(i), f(6)));
    std::sort(described.begin(), described.end(), CanonicalLess{});

    b.row("s", "27", std::to_string(ds.s()), Policy::Assert);
    b.row("B_matches_description", "true", bool_str(described == ds.B), Policy::Assert);
    b.row("q", "16", std::to_string(ds.q()), Policy::Report);
    b.rep.notes.push_back("computed C = " + monomial_list(ds.C));

    std::vector<Monomial> listed_c = {
        mono({1, 2, 6, 12}), mono({2, 3, 6, 12}), mono({3, 4, 6, 12}), mono({4, 5, 6, 12}),
        mono({1, 5, 6, 12}), mono({6, 7, 8, 12}), mono({6, 7, 8, 9}),  mono({6, 8, 9, 10}),
        mono({6, 9, 10, 11}), mono({6, 7, 10, 11}), mono({6, 7, 8, 11}), mono({1, 3, 4, 12}),
        mono({1, 4, 5, 12}), mono({2, 4, 6, 12}), mono({2, 3, 5, 12}), mono({3, 5, 6, 12})};
    bool listed_in_c = true;
    for (const Monomial& c : listed_c)
        listed_in_c = listed_in_c && std::binary_search(ds.C.begin(), ds.C.end(), c,
                                                        CanonicalLess{});
    b.row("listed_C_in_C", "true", bool_str(listed_in_c), Policy::Assert);

    b.row("u_family", "(x6,{6,7,8,9,10,11});(x12,{1,2,3,4,5,11})", family_str(fam),
          Policy::Assert);

    if (field.is_rational()) {
        b.row("depth_S/J", "2", depth_str(depth_of(SqModule::ring_mod(inst.J), field)),
              Policy::Assert);
        b.row("depth_S/I", "6", depth_str(depth_of(SqModule::ring_mod(inst.I), field)),
              Policy::Assert);
        b.row("depth_I/J", "2", depth_str(depth_of(SqModule::quotient(inst), field)),
              Policy::Assert);
        b.row("pr_verdict", "holds", to_string(verify_lemma(inst, "pr").verdict),
              Policy::Assert);
    }

    Poset poset = build_poset(inst);
    IntervalPartition part = example_e_partition();
    std::set<std::uint64_t> in_poset;
    for (const Monomial& m : poset.elements) in_poset.insert(m.bits);

    bool valid = true, tops4 = true;
    for (const Interval& iv : part.intervals) {
        valid = valid && in_poset.count(iv.bottom.bits) && in_poset.count(iv.top.bits) &&
                divides(iv.bottom, iv.top);
        tops4 = tops4 && iv.top.degree() == 4;
    }
    int uncovered = 0, overlapped = 0;
    std::vector<Monomial> uncovered_list;
    for (const Monomial& m : poset.elements) {
        int covers = 0;
        for (const Interval& iv : part.intervals)
            if (divides(iv.bottom, m) && divides(m, iv.top)) ++covers;
        if (covers == 0) {
            ++uncovered;
            uncovered_list.push_back(m);
        }
        if (covers > 1) ++overlapped;
    }
    b.row("partition_intervals_valid", "true", bool_str(valid), Policy::Assert);
    b.row("partition_pairwise_disjoint", "true", bool_str(overlapped == 0), Policy::Assert);
    b.row("partition_tops_degree_4", "true", bool_str(tops4), Policy::Assert);
    b.row("partition_covers_poset", "covers", "uncovered=" + std::to_string(uncovered),
          Policy::Report);
    if (uncovered > 0)
        b.rep.notes.push_back("uncovered elements = " + monomial_list(uncovered_list));

    DecisionResult lower = sdepth_decision(poset, 4, kDefaultNodeBudget);
    std::string lower_str = lower.status == SearchStatus::Proven    ? "proven"
                            : lower.status == SearchStatus::Refuted ? "refuted"
                                                                    : "timeout";
    b.row_check("sdepth>=4", "proven-or-timeout", lower_str,
                lower.status != SearchStatus::Refuted);
    // Upper bound is budget-permitting; a smaller probe keeps the audit fast.
    DecisionResult upper = sdepth_decision(poset, 5, 2'000'000);
    std::string upper_str = upper.status == SearchStatus::Proven    ? "proven"
                            : upper.status == SearchStatus::Refuted ? "refuted"
                                                                    : "timeout";
    b.row("sdepth<5", "refuted", upper_str, Policy::Report);
}

void audit_e3(AuditBuilder& b, FieldSpec field) {
    Instance inst = example_instance("e3", field);
    GcdFamily fam = gcd_family(inst);
    b.row("u_family", "(x1,{1,2,3});(x2,{1,4,5});(x3,{2,4,6,7});(x4,{3,8});(x6,{5,7,8})",
          family_str(fam), Policy::Assert);

    if (field.is_rational()) {
        // Last canonical family x6 = {x2x6, x3x6, x4x6}, the peeled ideal.
        std::vector<Monomial> ue = {mono({2, 6}), mono({3, 6}), mono({4, 6})};
        b.row("depth_I/(J,(U_x6))", "3", depth_str(depth_with_extra(inst, ue)),
              Policy::Assert);
        int depth_ij = depth_of(SqModule::quotient(inst), field);
        b.row_check("depth_I/J", "<=3", depth_str(depth_ij), depth_ij <= 3);
        b.row("l3_verdict", "holds", to_string(verify_lemma(inst, "l3").verdict),
              Policy::Assert);
    }
}

}  // namespace

AuditReport audit_example(const std::string& id, FieldSpec field) {
    AuditBuilder b;
    b.rep.example_id = id;
    b.rep.field = field;
    if (id == "e2")
        audit_e2(b, field);
    else if (id == "e4")
        audit_e4(b, field);
    else if (id == "e")
        audit_e(b, field);
    else if (id == "e3")
        audit_e3(b, field);
    else
        throw InputError("unknown_example", "no bundled example named \"" + id + "\"");
    return b.rep;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Inapplicable: return "inapplicable";
        case Verdict::Holds: return "holds";
        case Verdict::Counterexample: return "counterexample";
    }
    return "unknown";
}

CheckOutcome verify_theorem(const Instance& inst) {
    DerivedSets ds = derive_sets(inst);
    HypothesisReport hyp = check_theorem_hypotheses(inst, ds);
    CheckOutcome out;
    if (!hyp.theorem_applicable) {
        out.verdict = Verdict::Inapplicable;
        if (!hyp.pathological)
            out.detail = "not pathological; witness " + to_string(hyp.pathological_witnesses[0]);
        else
            out.detail = "C meets the W-monomials; witness " + to_string(hyp.c_w_witnesses[0]);
        return out;
    }
    int depth = depth_of(SqModule::quotient(inst), inst.field);
    int bound = inst.d + 1;
    out.detail = "depth=" + depth_str(depth) + " bound=" + std::to_string(bound);
    if (depth <= bound) {
        out.verdict = Verdict::Holds;
    } else {
        out.verdict = Verdict::Counterexample;
        out.dump = serialize_instance(inst);
    }
    return out;
}

namespace {

CheckOutcome inapplicable(const std::string& why) {
    CheckOutcome out;
    out.verdict = Verdict::Inapplicable;
    out.detail = why;
    return out;
}

CheckOutcome conclude(const Instance& inst, bool conclusion, const std::string& detail) {
    CheckOutcome out;
    out.detail = detail;
    if (conclusion) {
        out.verdict = Verdict::Holds;
    } else {
        out.verdict = Verdict::Counterexample;
        out.dump = serialize_instance(inst);
    }
    return out;
}

CheckOutcome lemma_d(const Instance& inst) {
    if (!inst.E.empty()) return inapplicable("higher-degree generators present");
    DerivedSets ds = derive_sets(inst);
    for (const Monomial& m : ds.B)
        if (depth_with_extra(inst, {m}) == inst.d) {
            int depth = depth_of(SqModule::quotient(inst), inst.field);
            return conclude(inst, depth <= inst.d + 1,
                            "b=" + to_string(m) + " depth=" + depth_str(depth));
        }
    return inapplicable("no b in B with depth I/(J,b) = d");
}

CheckOutcome lemma_dprime(const Instance& inst) {
    if (inst.r() < 2) return inapplicable("needs at least two least-degree generators");
    for (const Monomial& f : inst.F)
        if (depth_with_extra(inst, {f}) == inst.d) {
            int depth = depth_of(SqModule::quotient(inst), inst.field);
            return conclude(inst, depth <= inst.d + 1,
                            "f_r=" + to_string(f) + " depth=" + depth_str(depth));
        }
    return inapplicable("no generator f with depth I/(J,f) = d");
}

CheckOutcome lemma_l2(const Instance& inst) {
    if (!inst.E.empty()) return inapplicable("higher-degree generators present");
    HypothesisReport hyp = check_theorem_hypotheses(inst);
    if (!hyp.pathological) return inapplicable("not pathological");
    if (!hyp.c_w_empty) return inapplicable("C meets the W-monomials");
    GcdFamily fam = gcd_family(inst);
    if (fam.e() < 2) return inapplicable("fewer than two gcd families");
    int r_idx = fam.U.back().back();
    std::vector<Monomial> rest;
    for (int k : fam.U.back())
        if (k != r_idx) rest.push_back(inst.F[k - 1]);
    MonomialIdeal iprime = minimalize(inst.n, rest);

    std::vector<Monomial> with_fr = rest;
    with_fr.push_back(inst.F[r_idx - 1]);
    int peeled = depth_with_extra(inst, with_fr);
    if (peeled < inst.d + 1)
        return inapplicable("depth I/(J,Iprime,f_r) = " + depth_str(peeled) + " below d+1");
    GammaAnalysis ga = gamma_analysis(inst, r_idx, iprime);
    if (ga.A.empty()) return inapplicable("no admissible w_{r,t} outside Iprime");
    int depth = depth_with_extra(inst, rest);
    return conclude(inst, depth == inst.d + 1,
                    "f_r=" + to_string(inst.F[r_idx - 1]) + " depth I/(J,Iprime)=" +
                        depth_str(depth));
}

CheckOutcome lemma_l3(const Instance& inst) {
    if (!inst.E.empty()) return inapplicable("higher-degree generators present");
    HypothesisReport hyp = check_theorem_hypotheses(inst);
    if (!hyp.pathological) return inapplicable("not pathological");
    if (!hyp.c_w_empty) return inapplicable("C meets the W-monomials");
    GcdFamily fam = gcd_family(inst);
    if (fam.e() < 2) return inapplicable("fewer than two gcd families");
    for (int i = 0; i < fam.e(); ++i) {
        std::vector<Monomial> gens;
        for (int k : fam.U[i]) gens.push_back(inst.F[k - 1]);
        int peeled = depth_with_extra(inst, gens);
        if (peeled <= inst.d + 1) {
            int depth = depth_of(SqModule::quotient(inst), inst.field);
            return conclude(inst, depth <= inst.d + 1,
                            "family u=" + to_string(fam.u[i]) + " depth I/(J,(U))=" +
                                depth_str(peeled) + " depth I/J=" + depth_str(depth));
        }
    }
    return inapplicable("no family with depth I/(J,(U_i)) <= d+1");
}

CheckOutcome lemma_l4(const Instance& inst) {
    GcdFamily fam = gcd_family(inst);
    if (fam.e() == 0) return inapplicable("no gcd families");
    HypothesisReport hyp = check_theorem_hypotheses(inst);
    if (!hyp.pathological) return inapplicable("not pathological");
    LemmaL4Check chk = lemma_l4_check(inst);
    if (!chk.premise) return inapplicable("no generator common to all families");
    return conclude(inst, chk.conclusion,
                    chk.conclusion ? "C avoids the W-monomials"
                                   : "C meets the W-monomials at " +
                                         to_string(hyp.c_w_witnesses[0]));
}

CheckOutcome lemma_pr(const Instance& inst) {
    if (!inst.E.empty()) return inapplicable("higher-degree generators present");
    HypothesisReport hyp = check_theorem_hypotheses(inst);
    if (!hyp.pathological) return inapplicable("not pathological");
    GcdFamily fam = gcd_family(inst);
    if (fam.e() == 0) return inapplicable("no gcd families");
    if (family_intersection(fam).empty())
        return inapplicable("no generator common to all families");
    int depth = depth_of(SqModule::quotient(inst), inst.field);
    return conclude(inst, depth <= inst.d + 1, "depth=" + depth_str(depth));
}

}  // namespace

CheckOutcome verify_lemma(const Instance& inst, const std::string& lemma_id) {
    if (lemma_id == "d") return lemma_d(inst);
    if (lemma_id == "dprime") return lemma_dprime(inst);
    if (lemma_id == "l2") return lemma_l2(inst);
    if (lemma_id == "l3") return lemma_l3(inst);
    if (lemma_id == "l4") return lemma_l4(inst);
    if (lemma_id == "pr") return lemma_pr(inst);
    throw InputError("lemma_id", "unknown lemma \"" + lemma_id +
                                     "\" (d, dprime, l2, l3, l4, pr)");
}

GenMode parse_gen_mode(const std::string& name) {
    if (name == "generic") return GenMode::Generic;
    if (name == "pathological") return GenMode::Pathological;
    if (name == "common-generator") return GenMode::CommonGenerator;
    throw InputError("gen_mode",
                     "unknown mode \"" + name + "\" (generic, pathological, common-generator)");
}

std::string to_string(GenMode m) {
    switch (m) {
        case GenMode::Generic: return "generic";
        case GenMode::Pathological: return "pathological";
        case GenMode::CommonGenerator: return "common-generator";
    }
    return "unknown";
}

namespace {

// Bounded draw; plain modulo keeps the stream reproducible and the bias is
// irrelevant here.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

long long binomial_capped(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int t = 1; t <= k; ++t) {
        out = out * (n - k + t) / t;
        if (out > (1LL << 40)) return 1LL << 40;
    }
    return out;
}

std::vector<int> shuffled_range(std::mt19937_64& rng, int lo, int hi) {
    std::vector<int> v;
    for (int t = lo; t <= hi; ++t) v.push_back(t);
    for (int i = int(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[std::size_t(draw(rng, i + 1))]);
    return v;
}

std::vector<Monomial> random_f(std::mt19937_64& rng, int n, int d, int r) {
    std::set<std::uint64_t> seen;
    std::vector<Monomial> out;
    while (int(out.size()) < r) {
        std::vector<int> vars = shuffled_range(rng, 1, n);
        Monomial m;
        for (int i = 0; i < d; ++i) m = m.with_var(vars[i]);
        if (seen.insert(m.bits).second) out.push_back(m);
    }
    return out;
}

Instance generic_instance(std::mt19937_64& rng, int n, int d, int r, FieldSpec field) {
    std::vector<Monomial> F = random_f(rng, n, d, r);
    Instance base = make_instance(n, F, {}, field);
    DerivedSets pool = derive_sets(base);
    std::vector<Monomial> J;
    for (const Monomial& m : pool.B)
        if (draw(rng, 3) == 0) J.push_back(m);
    for (const Monomial& m : pool.C)
        if (draw(rng, 6) == 0) J.push_back(m);
    return make_instance(n, F, J, field);
}

Instance common_generator_instance(std::mt19937_64& rng, int n, int d, int r, FieldSpec field) {
    // f_r plus r-1 companions split into k >= 2 families u_i = f_r / z_i;
    // every family keeps f_r, distinct fresh variables block accidental
    // extra families.
    std::vector<int> seed_vars = shuffled_range(rng, 1, n);
    Monomial fr;
    for (int i = 0; i < d; ++i) fr = fr.with_var(seed_vars[i]);

    int kmax = std::min(d, r - 1);
    int k = 2 + int(draw(rng, kmax - 1));
    std::vector<int> supp = fr.indices();
    for (int i = int(supp.size()) - 1; i > 0; --i)
        std::swap(supp[i], supp[std::size_t(draw(rng, i + 1))]);

    std::vector<int> counts(k, 1);
    for (int extra = r - 1 - k; extra > 0; --extra) ++counts[std::size_t(draw(rng, k))];

    std::vector<int> fresh;
    for (int t = 1; t <= n; ++t)
        if (!fr.has_var(t)) fresh.push_back(t);
    for (int i = int(fresh.size()) - 1; i > 0; --i)
        std::swap(fresh[i], fresh[std::size_t(draw(rng, i + 1))]);

    std::vector<Monomial> F = {fr};
    std::size_t next_fresh = 0;
    for (int i = 0; i < k; ++i) {
        Monomial u = fr.without_var(supp[i]);
        for (int c = 0; c < counts[i]; ++c) F.push_back(u.with_var(fresh[next_fresh++]));
    }

    // Pathological J at degree d+1, but the degree-(d+2) W-monomials stay
    // out so the C-versus-W prediction is informative; occasional non-W
    // degree-(d+2) generators vary the quotient.
    Instance base = make_instance(n, F, {}, field);
    DerivedSets pool = derive_sets(base);
    std::vector<Monomial> J;
    for (const Monomial& m : pool.B)
        if (!std::binary_search(pool.w_monomials.begin(), pool.w_monomials.end(), m,
                                CanonicalLess{}))
            J.push_back(m);
    for (const Monomial& m : pool.C)
        if (!std::binary_search(pool.w_monomials.begin(), pool.w_monomials.end(), m,
                                CanonicalLess{}) &&
            draw(rng, 8) == 0)
            J.push_back(m);
    return make_instance(n, F, J, field);
}

}  // namespace

Instance random_instance(int n, int d, int r, std::uint64_t seed, GenMode mode, FieldSpec field,
                         int* rejections) {
    if (n < 1 || n > Monomial::max_vars || d < 1 || d > n || r < 1)
        throw InputError("generation_infeasible", "parameters out of range");
    if (binomial_capped(n, d) < r)
        throw InputError("generation_infeasible",
                         "r exceeds the number of degree-d squarefree monomials");
    if (mode == GenMode::CommonGenerator && (d < 2 || r < 3 || n < d + r - 1))
        throw InputError("generation_infeasible",
                         "common-generator mode needs d >= 2, r >= 3, n >= d + r - 1");

    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        Instance inst = mode == GenMode::Generic
                            ? generic_instance(rng, n, d, r, field)
                            : mode == GenMode::Pathological
                                  ? pathologize(n, random_f(rng, n, d, r), field)
                                  : common_generator_instance(rng, n, d, r, field);
        if (!derive_sets(inst).B.empty()) return inst;
        if (rejections) ++*rejections;
    }
    throw InputError("generation_infeasible",
                     "no draw with monomials above degree d in 64 attempts");
}

std::string record_line(const SearchRecord& rec) {
    ordered_json j;
    j["seed"] = rec.seed;
    j["digest"] = rec.digest;
    j["n"] = rec.n;
    j["d"] = rec.d;
    j["r"] = rec.r;
    j["i"] = rec.i;
    j["applicable"] = rec.applicable;
    j["depth"] = rec.depth;
    j["bound"] = rec.bound;
    j["verdict"] = rec.verdict;
    j["sdepth_lb"] = rec.sdepth_lb;
    return j.dump();
}

SearchSummary search_question(const SearchParams& params, std::ostream* log,
                              std::vector<std::string>* dumps) {
    if (params.n > 20)
        throw InputError("n_too_large_for_enumeration", "search is limited to n <= 20");
    if (params.i < 1 || params.i > params.r - 1)
        throw InputError("question_index", "i must lie in [1, r-1]");
    if (params.seed_end < params.seed_begin)
        throw InputError("seed_range", "empty seed range");

    SearchSummary sum;
    for (std::uint64_t seed = params.seed_begin; seed < params.seed_end; ++seed) {
        int rejected = 0;
        Instance inst =
            random_instance(params.n, params.d, params.r, seed, GenMode::Generic, {}, &rejected);
        sum.rejections += rejected;

        SearchRecord rec;
        rec.seed = seed;
        rec.digest = instance_digest(inst);
        rec.n = params.n;
        rec.d = params.d;
        rec.r = params.r;
        rec.i = params.i;
        rec.bound = inst.d + params.i;
        rec.applicable = question_hypothesis(inst, params.i);
        if (rec.applicable) {
            rec.depth = depth_of(SqModule::quotient(inst), inst.field);
            rec.verdict = rec.depth <= rec.bound ? 1 : 0;
            if (params.sdepth_budget > 0)
                rec.sdepth_lb = sdepth(build_poset(inst), params.sdepth_budget).value;
        }
        if (log) *log << record_line(rec) << '\n';
        ++sum.generated;
        if (rec.applicable) {
            ++sum.applicable;
            if (rec.verdict == 1) ++sum.holds;
        }
        if (rec.verdict == 0) {
            sum.counterexamples.push_back(rec);
            if (dumps) dumps->push_back(serialize_instance(inst));
        }
    }
    return sum;
}

}  // namespace sqdepth
