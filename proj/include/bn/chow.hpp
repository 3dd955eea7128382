#pragma once

#include <map>
#include <vector>

#include "bn/rational.hpp"

// Exact model of the Chow ring of Pic^d(C) x C for a genus-g curve C.
//
// Generators: theta (pullback of the theta divisor from Pic), zeta (pullback
// of the point class from C), gamma (the mixed Kunneth divisor class).
// Relations:
//   zeta^2 = 0,   zeta*gamma = 0,   gamma^2 = -2*theta*zeta,
//   theta^(g+1) = 0,          (theta lives on the g-dimensional Pic)
//   theta^g * gamma = 0,      (odd Kunneth parts pair to zero)
// and theta^g * zeta is the point class of the product, of degree g!.
//
// Every element is a sparse rational combination of monomials
// theta^a * zeta^b * gamma^c with b, c in {0,1} and not both 1.

namespace bn {

struct ChowMonomial {
    int a = 0;  // theta exponent
    int b = 0;  // zeta exponent, 0 or 1
    int c = 0;  // gamma exponent, 0 or 1

    auto operator<=>(const ChowMonomial&) const = default;
};

class PicClass;

class ChowElement {
public:
    explicit ChowElement(int genus);

    static ChowElement zero(int genus);
    static ChowElement one(int genus);
    static ChowElement scalar(int genus, const Rational& value);
    static ChowElement theta(int genus);
    static ChowElement zeta(int genus);
    static ChowElement gamma(int genus);

    int genus() const { return genus_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ChowMonomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const ChowMonomial& m) const;

    // Homogeneous part in total codimension a+b+c.
    ChowElement graded_part(int degree) const;

    ChowElement operator-() const;
    ChowElement& operator+=(const ChowElement& rhs);
    ChowElement& operator-=(const ChowElement& rhs);
    ChowElement& operator*=(const ChowElement& rhs);
    ChowElement& operator*=(const Rational& s);

    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator*(ChowElement a, const ChowElement& b) { return a *= b; }
    friend ChowElement operator*(const Rational& s, ChowElement a) { return a *= s; }
    friend ChowElement operator*(ChowElement a, const Rational& s) { return a *= s; }

    bool operator==(const ChowElement& rhs) const;

    // Adds coeff * theta^a zeta^b gamma^c, applying the relations.
    void add_term(ChowMonomial m, Rational coeff);

    std::string str() const;

private:
    void check_same_ring(const ChowElement& rhs) const;

    int genus_;
    std::map<ChowMonomial, Rational> terms_;  // canonical sparse form, no zeros
};

// Classes on Pic^d(C) alone: rational polynomials in theta, exponent <= g.
class PicClass {
public:
    explicit PicClass(int genus);

    static PicClass zero(int genus);

    int genus() const { return genus_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(int theta_exp) const;

    void add_term(int theta_exp, Rational coeff);

    PicClass& operator+=(const PicClass& rhs);
    friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
    PicClass& operator*=(const Rational& s);
    bool operator==(const PicClass& rhs) const = default;

    // True when the class is supported in a single theta exponent.
    bool is_monomial() const { return coeffs_.size() == 1; }

    std::string str() const;

private:
    int genus_;
    std::map<int, Rational> coeffs_;
};

// exp of a nilpotent element: sum of powers over factorials; finite by the
// ring relations.  Throws NonNilpotent if the argument has a constant term.
ChowElement exp_class(const ChowElement& x);

// Pushforward along Pic x C -> Pic: extracts the zeta coefficient.
// Pure theta powers and gamma terms push to zero.
PicClass gysin_to_pic(const ChowElement& x);

// Degree of a top class on Pic: theta^g evaluates to g!.  The input must be
// supported in exponent g exactly (or be zero).
Rational evaluate_degree(const PicClass& x);

// Total Chern class of the twisted principal-parts quotient measuring
// vanishing to order `mult` at a moving point:
//   1 + mult*(d + (mult-1)(g-1)) zeta + mult gamma - mult(mult-1) zeta theta.
// Equals the product prod_{k=0}^{mult-1} (1 + (d + 2k(g-1)) zeta + gamma).
ChowElement chern_principal_parts(int mult, int genus, int degree);

// The product form above, computed term by term in the ring.  Used as an
// internal oracle for chern_principal_parts.
ChowElement chern_principal_parts_product(int mult, int genus, int degree);

}  // namespace bn
