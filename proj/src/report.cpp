#include "sqdepth/report.hpp"

#include <ostream>

namespace sqdepth {

namespace {

std::string depth_str(int depth) {
    return depth == kDepthInfinite ? "inf" : std::to_string(depth);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string index_set(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

}  // namespace

std::string monomial_list(const std::vector<Monomial>& ms) {
    std::string s = "[";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) s += ',';
        s += to_string(ms[i]);
    }
    return s + "]";
}

void emit_analysis(std::ostream& out, const Instance& inst, const DerivedSets& ds,
                   const GcdFamily& fam, const HypothesisReport& hyp) {
    out << "n=" << inst.n << '\n';
    out << "d=" << inst.d << '\n';
    out << "r=" << inst.r() << '\n';
    out << "char=" << inst.field.characteristic << '\n';
    out << "F=" << monomial_list(inst.F) << '\n';
    out << "E=" << monomial_list(inst.E) << '\n';
    out << "J=" << monomial_list(inst.J.gens) << '\n';
    out << "B=" << monomial_list(ds.B) << '\n';
    out << "s=" << ds.s() << '\n';
    out << "C=" << monomial_list(ds.C) << '\n';
    out << "q=" << ds.q() << '\n';
    out << "W=[";
    for (std::size_t i = 0; i < ds.W.size(); ++i) {
        if (i) out << ',';
        out << "w(" << ds.W[i].i << ',' << ds.W[i].j << ")=" << to_string(ds.W[i].m);
    }
    out << "]\n";
    out << "w_monomials=" << monomial_list(ds.w_monomials) << '\n';
    out << "C3=" << monomial_list(ds.C3) << '\n';
    out << "e=" << fam.e() << '\n';
    out << "u=" << monomial_list(fam.u) << '\n';
    out << "U=[";
    for (std::size_t i = 0; i < fam.U.size(); ++i) {
        if (i) out << ',';
        out << index_set(fam.U[i]);
    }
    out << "]\n";
    out << "pathological=" << bool_str(hyp.pathological) << '\n';
    out << "pathological_witnesses=" << monomial_list(hyp.pathological_witnesses) << '\n';
    out << "c_w_empty=" << bool_str(hyp.c_w_empty) << '\n';
    out << "c_w_witnesses=" << monomial_list(hyp.c_w_witnesses) << '\n';
    out << "c_in_c3=" << bool_str(hyp.c_in_c3) << '\n';
    out << "theorem_applicable=" << bool_str(hyp.theorem_applicable) << '\n';
    for (const std::string& note : hyp.notes) out << "note=" << note << '\n';
}

void emit_depth_report(std::ostream& out, const std::string& module_label, int n,
                       FieldSpec field, const KoszulReport& rep, int shift, bool with_betti) {
    out << "module=" << module_label << '\n';
    out << "n=" << n << '\n';
    out << "char=" << field.characteristic << '\n';
    if (shift > 0) {
        out << "restricted_n=" << rep.n << '\n';
        out << "removed_vars=" << shift << '\n';
        out << "note=depth shifted by the removed free variables\n";
    }
    out << "pd=" << (rep.zero_module ? std::string("-1") : std::to_string(rep.pd)) << '\n';
    int depth = rep.depth == kDepthInfinite ? kDepthInfinite : rep.depth + shift;
    out << "depth=" << depth_str(depth) << '\n';
    if (with_betti)
        for (const BettiEntry& entry : rep.entries) {
            out << "H(";
            std::vector<int> idx = Monomial{entry.multidegree}.indices();
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i) out << ',';
                out << idx[i];
            }
            out << ';' << entry.index << ")=" << entry.dim << '\n';
        }
}

void emit_partition(std::ostream& out, const IntervalPartition& p) {
    out << "intervals=" << p.intervals.size() << '\n';
    out << "value=" << p.value() << '\n';
    for (const Interval& iv : p.intervals)
        out << "interval=[" << to_string(iv.bottom) << ',' << to_string(iv.top) << "]\n";
}

void emit_audit(std::ostream& out, const AuditReport& rep) {
    out << "example=" << rep.example_id << '\n';
    out << "char=" << rep.field.characteristic << '\n';
    for (const ClaimRow& row : rep.rows)
        out << "claim=" << row.id << " policy="
            << (row.policy == Policy::Assert ? "assert" : "report") << " claimed=" << row.claimed
            << " computed=" << row.computed << " status=" << (row.pass ? "pass" : "FAIL")
            << '\n';
    for (const std::string& note : rep.notes) out << "note=" << note << '\n';
    out << "all_asserts_pass=" << (rep.all_asserts_pass ? "true" : "false") << '\n';
}

void emit_witness(std::ostream& out, const CycleWitness& w) {
    out << "r_index=" << w.r_index << '\n';
    out << "m_index=" << w.m_index << '\n';
    out << "j=" << w.j << '\n';
    out << "y=[";
    for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
        if (i) out << ',';
        out << w.coefficients[i];
    }
    out << "]\n";
    out << "boundary_vanishes=" << (w.boundary_vanishes ? "true" : "false") << '\n';
    out << "nonzero=" << (w.nonzero ? "true" : "false") << '\n';
    out << "nonzero_in_homology=" << (w.nonzero_in_homology ? "true" : "false") << '\n';
}

}  // namespace sqdepth
