#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqdepth/instance.hpp"
#include "sqdepth/stanley.hpp"

namespace sqdepth {

// Bundled reference examples: "e2", "e4", "e", "e3".
std::vector<std::string> example_ids();
Instance example_instance(const std::string& id, FieldSpec field = {});

// The 16 published intervals for example "e".
IntervalPartition example_e_partition();

enum class Policy { Assert, Report };

struct ClaimRow {
    std::string id;
    std::string claimed;
    std::string computed;
    Policy policy = Policy::Assert;
    bool pass = false;  // Report rows always pass; mismatches are recorded
};

struct AuditReport {
    std::string example_id;
    FieldSpec field;
    std::vector<ClaimRow> rows;
    std::vector<std::string> notes;
    bool all_asserts_pass = true;
};

// Recomputes every recorded claim of the example and compares.  Claims whose
// recorded values disagree with computation by design carry Policy::Report.
AuditReport audit_example(const std::string& id, FieldSpec field);

enum class Verdict { Inapplicable, Holds, Counterexample };

std::string to_string(Verdict v);

struct CheckOutcome {
    Verdict verdict = Verdict::Inapplicable;
    std::string detail;
    // Instance serialization, present for counterexamples.
    std::optional<std::string> dump;
};

// Applicability (pathological and C disjoint from W) => depth I/J <= d+1.
CheckOutcome verify_theorem(const Instance& inst);

// lemma_id in {d, dprime, l2, l3, l4, pr}; each gates on the lemma's side
// conditions (and, for the peeling lemmas, the ambient hypotheses of the
// section they support) before asserting its conclusion.
CheckOutcome verify_lemma(const Instance& inst, const std::string& lemma_id);

enum class GenMode { Generic, Pathological, CommonGenerator };

GenMode parse_gen_mode(const std::string& name);
std::string to_string(GenMode m);

// Deterministic in (n, d, r, seed, mode).  Generic: F uniform among r
// distinct degree-d monomials, J random among higher multiples.
// Pathological: pathologize(F).  CommonGenerator: seeded family structure
// with e >= 2 and a generator common to all families, J pathological with
// the degree-(d+2) W-monomials left out.  Infeasible parameters raise
// InputError; draws whose quotient has nothing above degree d are rejected
// and retried with the seed offset by the attempt number (the count of
// rejected draws is added to *rejections when given).
Instance random_instance(int n, int d, int r, std::uint64_t seed, GenMode mode,
                         FieldSpec field = {}, int* rejections = nullptr);

struct SearchParams {
    int n = 0, d = 0, r = 0, i = 1;
    std::uint64_t seed_begin = 0, seed_end = 0;  // half-open range
    long long sdepth_budget = 0;                 // 0 = skip the sdepth bound
};

struct SearchRecord {
    std::uint64_t seed = 0;
    std::string digest;
    int n = 0, d = 0, r = 0, i = 1;
    bool applicable = false;  // question_hypothesis(inst, i)
    int depth = -1;           // computed only when applicable
    int bound = -1;           // d + i
    int verdict = -1;         // 1 = depth <= bound, 0 = violated, -1 = untested
    int sdepth_lb = -1;       // optional Stanley lower bound
};

// One JSON line per record, fixed key order, no timing fields: reproducible
// byte-for-byte from (seed, params).
std::string record_line(const SearchRecord& rec);

struct SearchSummary {
    long long generated = 0, applicable = 0, holds = 0;
    long long rejections = 0;  // draws discarded by the generation filter
    std::vector<SearchRecord> counterexamples;
};

// Streams one record per seed to `log` (when given).  Counterexample dumps
// are appended to `dumps` in the instance file format.
SearchSummary search_question(const SearchParams& params, std::ostream* log,
                              std::vector<std::string>* dumps = nullptr);

}  // namespace sqdepth
