#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bn/errors.hpp"

// Degeneracy-locus determinants for maps of flagged vector bundles.
//
// Data: subbundle ranks a_0 <= ... <= a_{k-1}, quotient-flag ranks
// b_0 >= ... >= b_{k-1}, target ranks r_i, with
//     0 < a_0 - r_0 < ... < a_{k-1} - r_{k-1},
//     b_0 - r_0 > ... > b_{k-1} - r_{k-1} > 0.
// The locus where each map A_i -> B_i has rank at most r_i has class
//     det( c_{mu_i - i + j}( B_{rho(i)} - A_{rho(i)} ) )_{0 <= i,j < n}
// with n = a_{k-1} - r_{k-1}, mu the weakly decreasing sequence repeating
// q_s = b_s - r_s with multiplicity n_s, and rho(i) the flag step owning
// row i.
//
// The engine is generic over the coefficient ring: callers supply Chern
// classes as a function degree -> ring element per flag step.  Determinants
// are computed by column-subset expansion (no division; the rings here have
// zero divisors).

namespace bn {

template <typename Ring>
class FilteredDegeneracyProblem {
public:
    using ChernSupplier = std::function<Ring(int degree)>;

    FilteredDegeneracyProblem(std::vector<long> a, std::vector<long> b, std::vector<long> r,
                              std::vector<ChernSupplier> chern, Ring ring_one)
        : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)),
          chern_(std::move(chern)), one_(std::move(ring_one)) {
        validate();
    }

    int steps() const { return static_cast<int>(a_.size()); }
    long rows() const { return a_.back() - r_.back(); }
    const std::vector<long>& subbundle_ranks() const { return a_; }
    const std::vector<long>& quotient_ranks() const { return b_; }
    const std::vector<long>& target_ranks() const { return r_; }
    const ChernSupplier& chern(int step) const { return chern_[static_cast<size_t>(step)]; }
    const Ring& one() const { return one_; }

private:
    void validate() const {
        const size_t k = a_.size();
        if (k == 0 || b_.size() != k || r_.size() != k || chern_.size() != k)
            throw InvalidFlag("flag data length mismatch");
        for (size_t i = 0; i + 1 < k; ++i) {
            if (a_[i] > a_[i + 1]) throw InvalidFlag("subbundle ranks must be weakly increasing");
            if (b_[i] < b_[i + 1]) throw InvalidFlag("quotient ranks must be weakly decreasing");
        }
        long prev_ar = 0;
        for (size_t i = 0; i < k; ++i) {
            const long ar = a_[i] - r_[i];
            if (ar <= prev_ar)
                throw InvalidFlag("a_i - r_i must be strictly increasing and positive");
            prev_ar = ar;
        }
        long prev_br = -1;
        for (size_t i = k; i-- > 0;) {
            const long br = b_[i] - r_[i];
            if (br <= prev_br)
                throw InvalidFlag("b_i - r_i must be strictly decreasing and positive");
            prev_br = br;
        }
        if (b_.back() - r_.back() <= 0)
            throw InvalidFlag("b_i - r_i must stay positive");
    }

    std::vector<long> a_, b_, r_;
    std::vector<ChernSupplier> chern_;
    Ring one_;
};

struct MuSequence {
    std::vector<long> mu;       // weakly decreasing, rows() entries
    std::vector<int> selector;  // flag step owning each row
};

template <typename Ring>
MuSequence mu_sequence(const FilteredDegeneracyProblem<Ring>& p) {
    MuSequence out;
    const auto& a = p.subbundle_ranks();
    const auto& b = p.quotient_ranks();
    const auto& r = p.target_ranks();
    for (int s = 0; s < p.steps(); ++s) {
        const long q = b[static_cast<size_t>(s)] - r[static_cast<size_t>(s)];
        const long block = a[static_cast<size_t>(s)] - r[static_cast<size_t>(s)] -
                           (s == 0 ? 0 : a[static_cast<size_t>(s - 1)] - r[static_cast<size_t>(s - 1)]);
        for (long t = 0; t < block; ++t) {
            out.mu.push_back(q);
            out.selector.push_back(s);
        }
    }
    return out;
}

// Determinant over a commutative ring by expansion along the first rows with
// memoization on the column mask.  Size is capped at desk scale.
template <typename Ring>
Ring ring_determinant(const std::vector<std::vector<Ring>>& m, const Ring& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    if (n > 12) throw ConfigError("determinant size beyond supported scale");
    for (const auto& row : m)
        if (row.size() != n) throw ConfigError("determinant matrix must be square");

    // minor[mask] = determinant of rows 0..popcount(mask)-1, columns in mask.
    std::map<uint32_t, Ring> memo;
    auto solve = [&](auto&& self, uint32_t mask) -> Ring {
        if (mask == 0) return one;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int row = __builtin_popcount(mask) - 1;
        Ring acc = one;
        bool started = false;
        int sign = 1;
        for (size_t col = 0, seen = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            Ring term = m[static_cast<size_t>(row)][col] * self(self, mask & ~(1u << col));
            if (((row - static_cast<int>(seen)) % 2) != 0) term = -term;
            if (!started) {
                acc = term;
                started = true;
            } else {
                acc = acc + term;
            }
            ++seen;
        }
        (void)sign;
        memo.emplace(mask, acc);
        return acc;
    };
    return solve(solve, (n >= 32) ? 0xffffffffu : ((1u << n) - 1u));
}

template <typename Ring>
std::vector<std::vector<Ring>> porteous_matrix(const FilteredDegeneracyProblem<Ring>& p) {
    const MuSequence ms = mu_sequence(p);
    const size_t n = ms.mu.size();
    std::vector<std::vector<Ring>> m;
    m.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Ring> row;
        row.reserve(n);
        for (size_t j = 0; j < n; ++j) {
            const long deg = ms.mu[i] - static_cast<long>(i) + static_cast<long>(j);
            row.push_back(p.chern(ms.selector[i])(static_cast<int>(deg)));
        }
        m.push_back(std::move(row));
    }
    return m;
}

template <typename Ring>
Ring porteous_determinant(const FilteredDegeneracyProblem<Ring>& p) {
    return ring_determinant(porteous_matrix(p), p.one());
}

// det(A + B) expanded over row subsets: for S a subset of rows, D(S) takes
// rows from A inside S and from B outside.  Returns all 2^n determinants,
// indexed by the subset bitmask.
template <typename Ring>
std::vector<Ring> det_sum_expand(const std::function<Ring(int, int)>& a,
                                 const std::function<Ring(int, int)>& b, int size,
                                 const Ring& one) {
    if (size < 0 || size > 12) throw ConfigError("det_sum_expand size out of range");
    std::vector<Ring> out;
    const uint32_t total = 1u << size;
    for (uint32_t mask = 0; mask < total; ++mask) {
        std::vector<std::vector<Ring>> m;
        for (int i = 0; i < size; ++i) {
            std::vector<Ring> row;
            for (int j = 0; j < size; ++j)
                row.push_back((mask & (1u << i)) ? a(i, j) : b(i, j));
            m.push_back(std::move(row));
        }
        out.push_back(ring_determinant(m, one));
    }
    return out;
}

// Collapsing of redundant rank conditions for strictly decreasing
// multiplicity sequences.  A maximal run m_k, m_k - 1, ..., m_k - l of
// values descending by exactly one imposes only its last condition; every
// index in the run is reassigned the run's terminal value.
struct RedundancyReduction {
    std::vector<int> reassigned;     // m', same length as the input
    std::vector<int> block_last;     // index of the kept condition per block
    std::vector<int> block_of;       // block owning each index
};

RedundancyReduction eliminate_redundant(const std::vector<int>& multiplicities);

}  // namespace bn
