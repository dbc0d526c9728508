#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <set>
#include <vector>

#include "nucleus/group.hpp"
#include "nucleus/matrix.hpp"

namespace oracles {

using nucleus::ZMat;

// Elementary divisors via direct Smith reduction (row/column gcd steps).
inline std::vector<mpz_class> smith_divisors(ZMat m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> divisors;
    int top = 0, left = 0;
    while (top < rows && left < cols) {
        // locate the smallest nonzero |entry| in the remaining block
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = top; i < rows; ++i)
            for (int j = left; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                mpz_class v = abs(m.at(i, j));
                if (pi < 0 || v < best) { pi = i; pj = j; best = v; }
            }
        if (pi < 0) break;
        // move it to the corner
        for (int j = 0; j < cols; ++j) std::swap(m.at(top, j), m.at(pi, j));
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, left), m.at(i, pj));
        bool dirty = false;
        for (int i = top + 1; i < rows; ++i) {
            if (m.at(i, left) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, left).get_mpz_t(), m.at(top, left).get_mpz_t());
            for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(top, j);
            if (m.at(i, left) != 0) dirty = true;
        }
        for (int j = left + 1; j < cols; ++j) {
            if (m.at(top, j) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(top, j).get_mpz_t(), m.at(top, left).get_mpz_t());
            for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, left);
            if (m.at(top, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // corner entry must divide the rest of the block
        bool divides_all = true;
        for (int i = top + 1; i < rows && divides_all; ++i)
            for (int j = left + 1; j < cols && divides_all; ++j)
                if (m.at(i, j) % m.at(top, left) != 0) {
                    for (int jj = 0; jj < cols; ++jj) m.at(top, jj) += m.at(i, jj);
                    divides_all = false;
                }
        if (!divides_all) continue;
        divisors.push_back(abs(m.at(top, left)));
        ++top;
        ++left;
    }
    return divisors;
}

// Naive closure by repeated pairwise multiplication.
inline std::set<ZMat> naive_closure(const std::vector<ZMat>& gens, size_t cap = 100000) {
    std::set<ZMat> have(gens.begin(), gens.end());
    have.insert(ZMat::identity(gens[0].rows()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ZMat> snapshot(have.begin(), have.end());
        for (const ZMat& a : snapshot)
            for (const ZMat& b : snapshot)
                if (have.insert(a * b).second) {
                    grew = true;
                    if (have.size() > cap) throw std::runtime_error("naive_closure: cap exceeded");
                }
    }
    return have;
}

// Subgroup count by brute force over all element subsets (tiny groups only).
inline int count_subgroups_bruteforce(const nucleus::GroupData& g) {
    int n = int(g.order());
    if (n > 12) throw std::runtime_error("count_subgroups_bruteforce: group too large");
    int count = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;  // must contain the identity
        bool closed = true;
        for (int a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (int b = 0; b < n && closed; ++b) {
                if (!(mask >> b & 1u)) continue;
                if (!(mask >> g.mul(a, b) & 1u)) closed = false;
            }
        }
        if (closed) ++count;
    }
    return count;
}

// Deterministic PRNG for property tests.
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long rand_int(long lo, long hi) {  // inclusive
        return lo + long(next() % (unsigned long long)(hi - lo + 1));
    }
};

}  // namespace oracles
