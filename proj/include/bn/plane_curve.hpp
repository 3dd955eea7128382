#pragma once

#include <vector>

#include "bn/brill_noether.hpp"

// Dimension accounting for plane models: genus and node counts of degree-d
// plane curves, the dimension of the family of degree-d genus-g curves, and
// the blowup resolution of a ramification point with its dimension ledger.

namespace bn {

// Genus of a smooth plane curve of degree d.
long genus_smooth(int d);

// Node count of an irreducible degree-d plane curve of geometric genus g.
long node_count(int d, int g);

// Dimension of the family of degree-d plane curves of genus g: 3d - 1 + g.
long dim_plane_curves(int d, int g);

struct ResolutionStep {
    enum class Kind { MultiplePoint, Inflection, FreeParameter } kind;
    int multiplicity = 0;  // for multiple points
};

struct ResolutionResult {
    std::vector<ResolutionStep> steps;
    long gross_loss = 0;     // condition count net of reintroduced freedom
    long net_loss = 0;       // gross minus the two parameters of the moving image point
    bool free_parameter = false;  // set on the non-coprime branch
    long genus_drop = 0;     // sum of m(m-1)/2 over the multiple points
};

// Blowup resolution of a local branch with vanishing pair (m0, m1), m0 > m1 >= 1.
// The gross loss always telescopes to m0 + m1 - 2.
ResolutionResult resolution_sequence(int m0, int m1);

struct PlaneAudit {
    bool feasible = false;          // a degree-d genus-g plane model exists
    std::vector<int> normalized_m;  // basepoint subtracted: (m0-m2, m1-m2, 0)
    long rho = 0;
    long nodes = 0;
    long family_dim = 0;            // 3d - 1 + g
    long family_dim_rho_form = 0;   // 3g + rho + m0 + m1 (as usually quoted)
    long ramified_total = 0;        // rho + 3g + 4 (as usually quoted)
    long ramified_total_exact = 0;  // family_dim + 2 - (m0 + m1 - 2)
    long fiber_threshold = 0;       // rho + 8
    long moduli_dim = 0;            // 3g - 3 for g >= 2, else 1
    bool nonexistence_positive_family = false;
    ResolutionResult resolution;    // of the normalized (m0, m1) when m1 >= 1
    bool resolution_applies = false;
};

// Full dimension audit for an r = 2 problem.
PlaneAudit dimension_audit(const RamificationProblem& p);

}  // namespace bn
