#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqdepth/constructions.hpp"
#include "sqdepth/corpus.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/stanley.hpp"

namespace sqdepth {

std::string monomial_list(const std::vector<Monomial>& ms);

// Stable key=value text reports (identical bytes for identical inputs).
void emit_analysis(std::ostream& out, const Instance& inst, const DerivedSets& ds,
                   const GcdFamily& fam, const HypothesisReport& hyp);

void emit_depth_report(std::ostream& out, const std::string& module_label, int n,
                       FieldSpec field, const KoszulReport& rep, int shift,
                       bool with_betti);

void emit_partition(std::ostream& out, const IntervalPartition& p);

void emit_audit(std::ostream& out, const AuditReport& rep);

void emit_witness(std::ostream& out, const CycleWitness& w);

}  // namespace sqdepth
