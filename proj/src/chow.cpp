#include "bn/chow.hpp"

#include <sstream>

#include "bn/errors.hpp"

namespace bn {

ChowElement::ChowElement(int genus) : genus_(genus) {
    if (genus < 1) throw ConfigError("genus must be >= 1");
}

ChowElement ChowElement::zero(int genus) { return ChowElement(genus); }

ChowElement ChowElement::one(int genus) { return scalar(genus, Rational(1)); }

ChowElement ChowElement::scalar(int genus, const Rational& value) {
    ChowElement e(genus);
    e.add_term({0, 0, 0}, value);
    return e;
}

ChowElement ChowElement::theta(int genus) {
    ChowElement e(genus);
    e.add_term({1, 0, 0}, Rational(1));
    return e;
}

ChowElement ChowElement::zeta(int genus) {
    ChowElement e(genus);
    e.add_term({0, 1, 0}, Rational(1));
    return e;
}

ChowElement ChowElement::gamma(int genus) {
    ChowElement e(genus);
    e.add_term({0, 0, 1}, Rational(1));
    return e;
}

Rational ChowElement::coefficient(const ChowMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

ChowElement ChowElement::graded_part(int degree) const {
    ChowElement out(genus_);
    for (const auto& [m, q] : terms_)
        if (m.a + m.b + m.c == degree) out.add_term(m, q);
    return out;
}

void ChowElement::add_term(ChowMonomial m, Rational coeff) {
    if (coeff == 0) return;
    if (m.b >= 2 || (m.b >= 1 && m.c >= 1)) return;  // zeta^2 = zeta*gamma = 0
    while (m.c >= 2) {                               // gamma^2 = -2 theta zeta
        m.c -= 2;
        m.a += 1;
        m.b += 1;
        coeff *= -2;
        if (m.b >= 2 || (m.b >= 1 && m.c >= 1)) return;
    }
    // Truncation: theta^a dies beyond a = g; theta^a gamma dies beyond a = g-1.
    if (m.c == 1) {
        if (m.a > genus_ - 1) return;
    } else {
        if (m.a > genus_) return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ChowElement ChowElement::operator-() const {
    ChowElement out(genus_);
    for (const auto& [m, q] : terms_) out.terms_.emplace(m, -q);
    return out;
}

void ChowElement::check_same_ring(const ChowElement& rhs) const {
    if (genus_ != rhs.genus_)
        throw RingMismatch("elements live in rings of different genus (" +
                           std::to_string(genus_) + " vs " + std::to_string(rhs.genus_) + ")");
}

ChowElement& ChowElement::operator+=(const ChowElement& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, q] : rhs.terms_) add_term(m, q);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, q] : rhs.terms_) add_term(m, -q);
    return *this;
}

ChowElement& ChowElement::operator*=(const ChowElement& rhs) {
    check_same_ring(rhs);
    ChowElement out(genus_);
    for (const auto& [m1, q1] : terms_)
        for (const auto& [m2, q2] : rhs.terms_)
            out.add_term({m1.a + m2.a, m1.b + m2.b, m1.c + m2.c}, q1 * q2);
    terms_.swap(out.terms_);
    return *this;
}

ChowElement& ChowElement::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= s;
    return *this;
}

bool ChowElement::operator==(const ChowElement& rhs) const {
    return genus_ == rhs.genus_ && terms_ == rhs.terms_;
}

std::string ChowElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(q) << ")";
        if (m.a > 0) os << "*theta^" << m.a;
        if (m.b > 0) os << "*zeta";
        if (m.c > 0) os << "*gamma";
    }
    return os.str();
}

PicClass::PicClass(int genus) : genus_(genus) {
    if (genus < 1) throw ConfigError("genus must be >= 1");
}

PicClass PicClass::zero(int genus) { return PicClass(genus); }

Rational PicClass::coefficient(int theta_exp) const {
    auto it = coeffs_.find(theta_exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void PicClass::add_term(int theta_exp, Rational coeff) {
    if (coeff == 0) return;
    if (theta_exp < 0 || theta_exp > genus_) return;
    auto [it, inserted] = coeffs_.try_emplace(theta_exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

PicClass& PicClass::operator+=(const PicClass& rhs) {
    if (genus_ != rhs.genus_) throw RingMismatch("Pic classes of different genus");
    for (const auto& [e, q] : rhs.coeffs_) add_term(e, q);
    return *this;
}

PicClass& PicClass::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, q] : coeffs_) q *= s;
    return *this;
}

std::string PicClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, q] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(q) << ")";
        if (e > 0) os << "*theta^" << e;
    }
    return os.str();
}

ChowElement exp_class(const ChowElement& x) {
    if (x.coefficient({0, 0, 0}) != 0)
        throw NonNilpotent("exp_class needs a nilpotent argument (no constant term)");
    ChowElement sum = ChowElement::one(x.genus());
    ChowElement power = ChowElement::one(x.genus());
    Rational inv_fact(1);
    for (long k = 1;; ++k) {
        power *= x;
        if (power.is_zero()) break;
        inv_fact /= k;
        sum += power * inv_fact;
    }
    return sum;
}

PicClass gysin_to_pic(const ChowElement& x) {
    PicClass out(x.genus());
    for (const auto& [m, q] : x.terms())
        if (m.b == 1 && m.c == 0) out.add_term(m.a, q);
    return out;
}

Rational evaluate_degree(const PicClass& x) {
    if (x.is_zero()) return Rational(0);
    for (const auto& [e, q] : x.coeffs())
        if (e != x.genus())
            throw NotPointClass("class has support in theta^" + std::to_string(e) +
                                ", not a multiple of the point class");
    return x.coefficient(x.genus()) * Rational(factorial(x.genus()));
}

ChowElement chern_principal_parts(int mult, int genus, int degree) {
    if (mult < 0) throw InvalidMultiplicity("multiplicity must be >= 0");
    ChowElement c = ChowElement::one(genus);
    if (mult == 0) return c;
    Rational m(mult);
    c.add_term({0, 1, 0}, m * Rational(degree + (mult - 1) * (genus - 1)));
    c.add_term({0, 0, 1}, m);
    c.add_term({1, 1, 0}, -m * Rational(mult - 1));
    return c;
}

ChowElement chern_principal_parts_product(int mult, int genus, int degree) {
    if (mult < 0) throw InvalidMultiplicity("multiplicity must be >= 0");
    ChowElement prod = ChowElement::one(genus);
    for (int k = 0; k < mult; ++k) {
        ChowElement factor = ChowElement::one(genus);
        factor.add_term({0, 1, 0}, Rational(degree + 2 * k * (genus - 1)));
        factor.add_term({0, 0, 1}, Rational(1));
        prod *= factor;
    }
    return prod;
}

}  // namespace bn
