#pragma once

#include <map>
#include <optional>

#include "bn/brill_noether.hpp"
#include "bn/chow.hpp"
#include "bn/partition.hpp"
#include "bn/schubert.hpp"

// Class of the locus of section spaces with prescribed vanishing at a moving
// point, inside the Grassmann bundle G(r+1, E) over Pic^d(C).  Used in the
// regime g + r - d < 0, where a line bundle carries many section spaces and
// the locus on Pic alone underdetermines the family.

namespace bn {

// Combined coefficient ring for the degeneracy determinant: Chow classes of
// Pic x C tensored with symmetric functions of the dual subbundle roots.
class GrassCurveClass {
public:
    GrassCurveClass(int genus, int rows);

    static GrassCurveClass zero(int genus, int rows);
    static GrassCurveClass one(int genus, int rows);

    int genus() const { return genus_; }
    int rows() const { return rows_; }
    bool is_zero() const;
    const std::map<Partition, ChowElement>& terms() const { return terms_; }

    void add_term(const Partition& shape, const ChowElement& coeff);

    GrassCurveClass operator-() const;
    GrassCurveClass& operator+=(const GrassCurveClass& rhs);
    GrassCurveClass& operator-=(const GrassCurveClass& rhs);
    GrassCurveClass& operator*=(const GrassCurveClass& rhs);
    friend GrassCurveClass operator+(GrassCurveClass a, const GrassCurveClass& b) { return a += b; }
    friend GrassCurveClass operator-(GrassCurveClass a, const GrassCurveClass& b) { return a -= b; }
    friend GrassCurveClass operator*(GrassCurveClass a, const GrassCurveClass& b) { return a *= b; }

private:
    int genus_;
    int rows_;
    std::map<Partition, ChowElement> terms_;
};

struct GrassLocusResult {
    int twist = 0;
    int quotient_rank = 0;      // rank of Q; the box is rows x quotient_rank
    long codimension = 0;       // sum of the mu_i
    bool zero = false;

    // Class in the dual-root presentation (exact, unreduced).
    SchubertPoly raw;
    // Class reduced to the box basis of quotient-side sigma classes.
    SchubertPoly reduced;
    // Reduced coordinates indexed by box-complement shape: the coefficient of
    // theta^a sigma_{box minus nu} keyed by (nu, a).  Stable across twists.
    std::map<std::pair<Partition, int>, Rational> co_profile;
    // Pushforward to Pic, and its degree when zero-dimensional.
    PicClass pushed;
    std::optional<Int> count;
};

// Minimal admissible twist for the problem.
int grass_min_twist(int g, int r, int d, const std::vector<int>& m);

GrassLocusResult grass_locus_class(int g, int r, int d, const std::vector<int>& m,
                                   std::optional<int> twist = std::nullopt);

inline GrassLocusResult grass_locus_class(const RamificationProblem& p) {
    return grass_locus_class(p.g, p.r, p.d, p.m, p.twist);
}

}  // namespace bn
