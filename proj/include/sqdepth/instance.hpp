#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqdepth/errors.hpp"
#include "sqdepth/ideal.hpp"

namespace sqdepth {

// Coefficient field: the rationals (characteristic 0) or GF(p), p prime.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    bool is_rational() const { return characteristic == 0; }
};

// Throws InputError("char_not_prime") unless c == 0 or c is prime (< 2^31).
FieldSpec make_field(long long c);

// A validated quotient I/J of squarefree monomial ideals:
//   - J strictly contained in I,
//   - d = smallest generator degree of I,
//   - F = the degree-d generators, E = the higher-degree generators,
//   - J zero or generated in degrees >= d+1.
struct Instance {
    int n = 0;
    MonomialIdeal I, J;
    FieldSpec field;
    int d = 0;
    std::vector<Monomial> F, E;

    int r() const { return int(F.size()); }
};

// Validates and derives d, F, E.  Generator lists are minimalized first.
// Violations raise InputError with one of the rule identifiers:
//   n_range, char_not_prime, empty_monomial_generator, I_zero,
//   J_degree_normalization, J_subset_of_I, J_proper_in_I, monomial_support.
Instance make_instance(int n, std::vector<Monomial> gensI, std::vector<Monomial> gensJ,
                       FieldSpec field);

// File format (all fields required, unknown fields rejected, "format"
// optional on input and equal to 1):
//   {"format":1, "n":5, "I":[[1,2],...], "J":[[1,2,5],...], "char":0}
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

// FNV-1a 64 hash of the canonical serialization, as fixed-width hex.
std::string instance_digest(const Instance& inst);

struct RestrictedInstance {
    Instance inst;
    std::vector<int> index_map;  // new index (1-based position) -> old index
    int removed = 0;             // variables dropped; depth shifts by this
};

// Restricts to the variables appearing in gens(I) or gens(J), renumbered
// 1..n~ in increasing order.  Depth of the restricted quotient equals the
// original depth minus `removed`.
RestrictedInstance restrict_support(const Instance& inst);

// All squarefree monomials of I \ J in canonical order (the ground set of
// the divisibility poset).  Enumerates 2^n subsets; guarded to n <= 20.
std::vector<Monomial> quotient_monomials(const Instance& inst);

}  // namespace sqdepth
