#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bn/chow.hpp"
#include "bn/rational.hpp"

// Counts and expected dimensions for linear series with a ramification
// condition at a moving point of a general curve.
//
// A problem is the tuple (g, r, d, m_0 > m_1 > ... > m_r >= 0): does a g^r_d
// on a general genus-g curve admit a point with vanishing sequence m, and in
// what dimension?  Two independent evaluation paths are provided: a closed
// formula, and a symbolic degeneracy-locus determinant over the Chow ring of
// Pic^d(C) x C.  They must agree; `existence` cross-checks them.

namespace bn {

struct RamificationProblem {
    int g = 1;
    int r = 1;
    int d = 1;
    std::vector<int> m;            // strictly decreasing, size r+1, m[0] <= d
    std::optional<int> twist;      // auxiliary twist; auto-chosen when absent

    void validate() const;
};

enum class EnginePath { ClosedForm, Symbolic };

struct ClassResult {
    int theta_exponent = 0;            // codimension of the class on Pic
    Rational coefficient = 0;          // coefficient of theta^c; 0 if the class dies
    Rational formal_coefficient = 0;   // value of the formula before truncation
    std::optional<Int> count;          // coefficient * g!, only when c == g
    EnginePath path = EnginePath::ClosedForm;
    bool vacuous = false;              // no effective condition: class of the whole space
    bool truncated = false;            // c > g, the class vanishes identically

    bool is_zero() const { return !vacuous && coefficient == 0; }
};

long rho_classical(int g, int r, int d);
long rho_moving(const RamificationProblem& p);
// Expected dimension with ramification prescribed at s fixed general points.
long rho_fixed(int g, int r, int d, const std::vector<std::vector<int>>& point_sequences);

// Indices whose condition is automatic.  Index i is effective iff
// m_i + i + g - d >= 1; effective indices form a prefix.
int effective_index_count(const RamificationProblem& p);

ClassResult wrd_closed_form(const RamificationProblem& p);
ClassResult wrd_symbolic(const RamificationProblem& p);

// r = 1, m = (m0, 0) specialization in product form.
ClassResult w1d_closed_form(int g, int d, int m0);

struct ExistenceResult {
    bool exists = false;
    ClassResult symbolic;
    ClassResult closed;
    bool paths_agree = true;
    std::string disagreement;  // per-field description when paths_agree is false
};

ExistenceResult existence(const RamificationProblem& p);

// Largest subset of the multiplicities (size >= 2) whose pairwise differences
// all share a factor >= 2, minus one; 0 when no such subset exists.
int common_factor_k(const std::vector<int>& m);

struct BoundResult {
    long rho = 0;
    int k = 0;
    long bound = 0;                   // rho + k - 1, capped at rho + r - 2 when k = r
    bool nonexistence = false;        // bound < 0
    bool strong_nonexistence = false; // rho < 1 - r
    bool convention_sensitive = false;  // k = 0 and the k=1 convention flips the verdict
};

BoundResult dimension_bound(const RamificationProblem& p);

struct TableRow {
    int g = 0, d = 0, s = 0, t = 0;
    Int count = 0;
};

// All (g, d, s, t) with d = g + d_offset, m = (t, s, 0), expected dimension
// zero, 1 <= s < t <= d, g <= max_g, counted along the symbolic path.
std::vector<TableRow> rho_zero_rows(int d_offset, int max_g);

// The count with the factorial normalization stripped:
// count * (t+g+2-d)! (s+g+2-d)! (g+2-d)! / g!.  This is the quantity whose
// monotonicity in d and in t-s is asserted at expected dimension zero.
Rational table_bracket(const TableRow& row);

}  // namespace bn
