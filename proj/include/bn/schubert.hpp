#pragma once

#include <map>
#include <utility>

#include "bn/chow.hpp"
#include "bn/partition.hpp"
#include "bn/rational.hpp"

// Schubert-class arithmetic for the Grassmann bundle G(s, E) of s-dimensional
// section spaces over Pic^d(C), where E has total Chern class e^{-theta}.
//
// Elements are sparse rational combinations of pairs (partition, theta power).
// Partitions multiply by the Littlewood-Richardson rule.  Two regimes share
// the representation:
//   - boxed: partitions confined to a rows x cols box, products truncated to
//     the box (the ring of a finite Grassmannian; used for the quotient-side
//     sigma classes where sigma_v = c_v(Q)); and
//   - unboxed: row count capped, width free (symmetric functions of the dual
//     subbundle roots; exact, reduced only at pushforward time).

namespace bn {

struct SchubertRingParams {
    int genus = 1;
    int rows = 1;        // rank of the subbundle S
    int cols = 0;        // rank of the quotient Q; ignored when boxed is false
    bool boxed = true;

    bool operator==(const SchubertRingParams&) const = default;
};

class SchubertPoly {
public:
    using Key = std::pair<Partition, int>;  // (shape, theta exponent)

    explicit SchubertPoly(SchubertRingParams params);

    static SchubertPoly zero(SchubertRingParams params);
    static SchubertPoly one(SchubertRingParams params);
    static SchubertPoly sigma(SchubertRingParams params, const Partition& shape);
    static SchubertPoly theta(SchubertRingParams params);

    const SchubertRingParams& params() const { return params_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& shape, int theta_exp) const;

    void add_term(const Partition& shape, int theta_exp, const Rational& coeff);

    SchubertPoly operator-() const;
    SchubertPoly& operator+=(const SchubertPoly& rhs);
    SchubertPoly& operator-=(const SchubertPoly& rhs);
    SchubertPoly& operator*=(const SchubertPoly& rhs);
    SchubertPoly& operator*=(const Rational& s);

    friend SchubertPoly operator+(SchubertPoly a, const SchubertPoly& b) { return a += b; }
    friend SchubertPoly operator-(SchubertPoly a, const SchubertPoly& b) { return a -= b; }
    friend SchubertPoly operator*(SchubertPoly a, const SchubertPoly& b) { return a *= b; }
    friend SchubertPoly operator*(const Rational& s, SchubertPoly a) { return a *= s; }

    bool operator==(const SchubertPoly& rhs) const = default;

    std::string str() const;

private:
    SchubertRingParams params_;
    std::map<Key, Rational> terms_;
};

// Total Chern class of the universal quotient: 1 + sigma_1 + ... + sigma_cols.
SchubertPoly chern_quotient(SchubertRingParams params);

// Total Chern class of the universal subbundle, c(pi* E) * c(Q)^{-1},
// truncated to the boxed ring.  For rows = 0 this is 1.
SchubertPoly chern_subbundle(SchubertRingParams params);

// Pushforward G(s, E) -> Pic for elements written in the dual subbundle root
// presentation (unboxed regime): theta^a s_lambda maps to a rational multiple
// of a theta power through the Segre classes of E, which are theta^t / t!.
PicClass schubert_push_to_pic(const SchubertPoly& x, int quotient_rank);

// Representation of the quotient-side basis class sigma_lambda (the
// Jacobi-Trudi determinant in the Chern classes of Q) in the dual subbundle
// root presentation.
SchubertPoly sigma_in_subbundle_roots(const Partition& shape, int genus, int rows,
                                      int quotient_rank);

}  // namespace bn
