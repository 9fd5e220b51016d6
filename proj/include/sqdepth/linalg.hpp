#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "sqdepth/instance.hpp"

namespace sqdepth {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.  Rows may be absent (rows()==0).
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a;  // rows*cols entries

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Rank over the rationals by fraction-free (Bareiss) elimination; int64 with
// overflow detection, retried with arbitrary-precision integers on overflow.
int rank_char0(const IntMat& m);

// Rank over GF(p) by modular elimination; requires p < 2^31.
int rank_mod_p(const IntMat& m, std::uint32_t p);

int rank_in_field(const IntMat& m, FieldSpec field);

// One nonzero kernel vector of m (viewing columns as unknowns), exact and
// deterministic: the free column of smallest index is set to 1 and the
// result is scaled to a primitive integer vector with positive first nonzero
// entry.  Empty result = trivial kernel.
std::vector<BigInt> kernel_vector_char0(const IntMat& m);

// Same over GF(p); entries in [0, p).
std::vector<long long> kernel_vector_mod_p(const IntMat& m, std::uint32_t p);

}  // namespace sqdepth
