#include "sqdepth/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>

namespace sqdepth {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct Int64Overflow {};

// Fraction-free elimination: after step k every entry is a (k+1)x(k+1) minor
// of the input, and the division by the previous pivot is exact.
int bareiss_rank_i64(IntMat m) {
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t step = 0; step < m.rows && step < m.cols; ++step) {
        std::size_t pr = m.rows, pc = m.cols;
        for (std::size_t i = rank; i < m.rows && pr == m.rows; ++i)
            for (std::size_t j = rank; j < m.cols; ++j)
                if (m.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == m.rows) break;
        if (pr != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(rank, j));
        if (pc != rank)
            for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, pc), m.at(i, rank));

        long long piv = m.at(rank, rank);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            long long head = m.at(i, rank);
            for (std::size_t j = rank + 1; j < m.cols; ++j) {
                __int128 v = (__int128)piv * m.at(i, j) - (__int128)head * m.at(rank, j);
                v /= prev;  // exact
                if (v > INT64_MAX || v < INT64_MIN) throw Int64Overflow{};
                m.at(i, j) = (long long)v;
            }
            m.at(i, rank) = 0;
        }
        prev = piv;
        ++rank;
    }
    return int(rank);
}

int bareiss_rank_big(const IntMat& in) {
    std::size_t rows = in.rows, cols = in.cols;
    std::vector<cpp_int> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m[i] = in.a[i];
    auto at = [&](std::size_t i, std::size_t j) -> cpp_int& { return m[i * cols + j]; };

    std::size_t rank = 0;
    cpp_int prev = 1;
    for (std::size_t step = 0; step < rows && step < cols; ++step) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = rank; i < rows && pr == rows; ++i)
            for (std::size_t j = rank; j < cols; ++j)
                if (at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        if (pr != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(rank, j));
        if (pc != rank)
            for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, pc), at(i, rank));

        cpp_int piv = at(rank, rank);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            cpp_int head = at(i, rank);
            for (std::size_t j = rank + 1; j < cols; ++j)
                at(i, j) = (piv * at(i, j) - head * at(rank, j)) / prev;
            at(i, rank) = 0;
        }
        prev = piv;
        ++rank;
    }
    return int(rank);
}

inline long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

int rank_char0(const IntMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return bareiss_rank_i64(m);
    } catch (const Int64Overflow&) {
        return bareiss_rank_big(m);
    }
}

int rank_mod_p(const IntMat& in, std::uint32_t p) {
    if (in.rows == 0 || in.cols == 0) return 0;
    std::size_t rows = in.rows, cols = in.cols;
    std::vector<long long> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        long long v = in.a[i] % (long long)p;
        m[i] = v < 0 ? v + p : v;
    }
    auto at = [&](std::size_t i, std::size_t j) -> long long& { return m[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(at(pr, j), at(rank, j));
        long long inv = mod_pow(at(rank, col), p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, col) == 0) continue;
            long long factor = at(i, col) * inv % p;
            for (std::size_t j = col; j < cols; ++j) {
                at(i, j) = (at(i, j) - factor * at(rank, j)) % p;
                if (at(i, j) < 0) at(i, j) += p;
            }
        }
        ++rank;
    }
    return int(rank);
}

int rank_in_field(const IntMat& m, FieldSpec field) {
    return field.is_rational() ? rank_char0(m) : rank_mod_p(m, field.characteristic);
}

std::vector<BigInt> kernel_vector_char0(const IntMat& in) {
    std::size_t rows = in.rows, cols = in.cols;
    if (cols == 0) return {};
    std::vector<cpp_rational> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m[i] = in.a[i];
    auto at = [&](std::size_t i, std::size_t j) -> cpp_rational& { return m[i * cols + j]; };

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(rank, j));
        cpp_rational piv = at(rank, col);
        for (std::size_t j = 0; j < cols; ++j) at(rank, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || at(i, col) == 0) continue;
            cpp_rational f = at(i, col);
            for (std::size_t j = 0; j < cols; ++j) at(i, j) -= f * at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::size_t free_col = cols;
    {
        std::size_t pi = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (pi < pivot_col.size() && pivot_col[pi] == col) {
                ++pi;
                continue;
            }
            free_col = col;
            break;
        }
    }
    if (free_col == cols) return {};

    std::vector<cpp_rational> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t rr = 0; rr < pivot_col.size(); ++rr) x[pivot_col[rr]] = -at(rr, free_col);

    cpp_int den = 1;
    for (const auto& v : x) den = boost::multiprecision::lcm(den, denominator(v));
    std::vector<cpp_int> y(cols);
    for (std::size_t j = 0; j < cols; ++j)
        y[j] = numerator(x[j]) * (den / denominator(x[j]));
    cpp_int g = 0;
    for (const auto& v : y) g = boost::multiprecision::gcd(g, v);
    if (g != 0)
        for (auto& v : y) v /= g;
    for (const auto& v : y) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : y) w = -w;
        break;
    }
    return y;
}

std::vector<long long> kernel_vector_mod_p(const IntMat& in, std::uint32_t p) {
    std::size_t rows = in.rows, cols = in.cols;
    if (cols == 0) return {};
    std::vector<long long> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        long long v = in.a[i] % (long long)p;
        m[i] = v < 0 ? v + p : v;
    }
    auto at = [&](std::size_t i, std::size_t j) -> long long& { return m[i * cols + j]; };

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(rank, j));
        long long inv = mod_pow(at(rank, col), p - 2, p);
        for (std::size_t j = 0; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || at(i, col) == 0) continue;
            long long f = at(i, col);
            for (std::size_t j = 0; j < cols; ++j) {
                at(i, j) = (at(i, j) - f * at(rank, j)) % p;
                if (at(i, j) < 0) at(i, j) += p;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::size_t free_col = cols;
    {
        std::size_t pi = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (pi < pivot_col.size() && pivot_col[pi] == col) {
                ++pi;
                continue;
            }
            free_col = col;
            break;
        }
    }
    if (free_col == cols) return {};

    std::vector<long long> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t rr = 0; rr < pivot_col.size(); ++rr)
        x[pivot_col[rr]] = (p - at(rr, free_col)) % p;
    return x;
}

}  // namespace sqdepth
