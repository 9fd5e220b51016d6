#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqdepth {

// Squarefree monomial in variables x1..xn, stored as a bit set:
// bit t-1 set  <=>  x_t divides the monomial.  Supports n <= 63.
struct Monomial {
    std::uint64_t bits = 0;

    static constexpr int max_vars = 63;

    static Monomial one() { return Monomial{0}; }

    // Builds from 1-based variable indices; duplicates and out-of-range
    // indices are rejected.
    static Monomial from_indices(const std::vector<int>& idx) {
        Monomial m;
        for (int t : idx) {
            if (t < 1 || t > max_vars)
                throw std::invalid_argument("variable index out of range: " + std::to_string(t));
            std::uint64_t b = std::uint64_t(1) << (t - 1);
            if (m.bits & b)
                throw std::invalid_argument("repeated variable index: " + std::to_string(t));
            m.bits |= b;
        }
        return m;
    }

    int degree() const { return std::popcount(bits); }
    bool is_one() const { return bits == 0; }

    bool has_var(int t) const { return (bits >> (t - 1)) & 1; }

    Monomial with_var(int t) const { return Monomial{bits | (std::uint64_t(1) << (t - 1))}; }
    Monomial without_var(int t) const { return Monomial{bits & ~(std::uint64_t(1) << (t - 1))}; }

    // Sorted 1-based variable indices.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline bool divides(Monomial a, Monomial b) { return (a.bits & ~b.bits) == 0; }
inline Monomial lcm(Monomial a, Monomial b) { return Monomial{a.bits | b.bits}; }
inline Monomial gcd(Monomial a, Monomial b) { return Monomial{a.bits & b.bits}; }

// Canonical order: by degree, then lexicographically on the sorted index
// lists.  For equal degrees this compares the smallest differing variable:
// the monomial owning it comes first (so x1*x4 < x2*x3).
inline bool canonical_less(Monomial a, Monomial b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.bits == b.bits) return false;
    std::uint64_t diff = a.bits ^ b.bits;
    return (a.bits & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
    bool operator()(Monomial a, Monomial b) const { return canonical_less(a, b); }
};

// "x1*x3*x5"; the unit monomial prints as "1".
inline std::string to_string(Monomial m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int t : m.indices()) {
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(t);
    }
    return s;
}

}  // namespace sqdepth
