#include "bn/schubert.hpp"

#include <sstream>

#include "bn/errors.hpp"
#include "bn/porteous.hpp"

namespace bn {

SchubertPoly::SchubertPoly(SchubertRingParams params) : params_(params) {
    if (params.genus < 1) throw ConfigError("genus must be >= 1");
    if (params.rows < 0) throw ConfigError("subbundle rank must be >= 0");
}

SchubertPoly SchubertPoly::zero(SchubertRingParams params) { return SchubertPoly(params); }

SchubertPoly SchubertPoly::one(SchubertRingParams params) {
    SchubertPoly p(params);
    p.add_term(Partition::empty(), 0, Rational(1));
    return p;
}

SchubertPoly SchubertPoly::sigma(SchubertRingParams params, const Partition& shape) {
    SchubertPoly p(params);
    p.add_term(shape, 0, Rational(1));
    return p;
}

SchubertPoly SchubertPoly::theta(SchubertRingParams params) {
    SchubertPoly p(params);
    p.add_term(Partition::empty(), 1, Rational(1));
    return p;
}

Rational SchubertPoly::coefficient(const Partition& shape, int theta_exp) const {
    auto it = terms_.find({shape, theta_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertPoly::add_term(const Partition& shape, int theta_exp, const Rational& coeff) {
    if (coeff == 0) return;
    if (theta_exp < 0 || theta_exp > params_.genus) return;
    if (params_.boxed) {
        if (!shape.fits_in_box(params_.rows, params_.cols)) return;
    } else {
        if (shape.length() > params_.rows) return;
    }
    Key key{shape, theta_exp};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SchubertPoly SchubertPoly::operator-() const {
    SchubertPoly out(params_);
    for (const auto& [k, q] : terms_) out.terms_.emplace(k, -q);
    return out;
}

SchubertPoly& SchubertPoly::operator+=(const SchubertPoly& rhs) {
    if (!(params_ == rhs.params_)) throw RingMismatch("Schubert ring parameter mismatch");
    for (const auto& [k, q] : rhs.terms_) add_term(k.first, k.second, q);
    return *this;
}

SchubertPoly& SchubertPoly::operator-=(const SchubertPoly& rhs) {
    if (!(params_ == rhs.params_)) throw RingMismatch("Schubert ring parameter mismatch");
    for (const auto& [k, q] : rhs.terms_) add_term(k.first, k.second, -q);
    return *this;
}

SchubertPoly& SchubertPoly::operator*=(const SchubertPoly& rhs) {
    if (!(params_ == rhs.params_)) throw RingMismatch("Schubert ring parameter mismatch");
    SchubertPoly out(params_);
    for (const auto& [k1, q1] : terms_) {
        for (const auto& [k2, q2] : rhs.terms_) {
            const int te = k1.second + k2.second;
            if (te > params_.genus) continue;
            const Rational coeff = q1 * q2;
            const PartitionSum shapes =
                params_.boxed
                    ? lr_expand_boxed(k1.first, k2.first, params_.rows, params_.cols)
                    : lr_expand(k1.first, k2.first, params_.rows);
            for (const auto& [shape, mult] : shapes)
                out.add_term(shape, te, coeff * Rational(mult));
        }
    }
    terms_.swap(out.terms_);
    return *this;
}

SchubertPoly& SchubertPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, q] : terms_) q *= s;
    return *this;
}

std::string SchubertPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(q) << ")";
        if (k.second > 0) os << "*theta^" << k.second;
        if (k.first.length() > 0) os << "*s" << k.first.str();
    }
    return os.str();
}

SchubertPoly chern_quotient(SchubertRingParams params) {
    SchubertPoly c = SchubertPoly::one(params);
    for (int v = 1; v <= params.cols; ++v) c.add_term(Partition::row(v), 0, Rational(1));
    return c;
}

SchubertPoly chern_subbundle(SchubertRingParams params) {
    if (params.rows == 0) return SchubertPoly::one(params);
    if (!params.boxed) throw ConfigError("chern_subbundle expects the boxed ring");
    // c(S) = c(pi* E) / c(Q) = e^{-theta} * sum_t (c(Q) - 1)^t * (-1)^t;
    // the series ends because sigma classes are nilpotent in the box.
    SchubertPoly u = chern_quotient(params) - SchubertPoly::one(params);
    SchubertPoly inv = SchubertPoly::one(params);
    SchubertPoly power = SchubertPoly::one(params);
    for (;;) {
        power *= u;
        if (power.is_zero()) break;
        power *= Rational(-1);
        inv += power;
    }
    // e^{-theta} factor, theta truncating at the genus.
    SchubertPoly expth = SchubertPoly::zero(params);
    Rational inv_fact(1);
    for (int j = 0; j <= params.genus; ++j) {
        if (j > 0) inv_fact /= j;
        expth.add_term(Partition::empty(), j, (j % 2 == 0) ? inv_fact : -inv_fact);
    }
    return expth * inv;
}

PicClass schubert_push_to_pic(const SchubertPoly& x, int quotient_rank) {
    const int s = x.params().rows;
    const int g = x.params().genus;
    const long q = quotient_rank;
    PicClass out(g);
    for (const auto& [key, coeff] : x.terms()) {
        const auto& [shape, a] = key;
        // theta^a s_lambda(x_1..x_s) pushes to theta^{a + |lambda| - s q}
        // times det(s_{lambda_i - q - i + j}(E)) with Segre classes
        // s_t(E) = theta^t / t!; the determinant collapses to a factorial
        // Vandermonde in the shifted parts y_i = lambda_{i+1} - q - i.
        std::vector<long> y;
        for (int i = 0; i < s; ++i) y.push_back(shape.part(i) - q - i);
        Rational k(1);
        bool zero = false;
        for (int i = 0; i < s && !zero; ++i) {
            const Rational f = inv_factorial(y[static_cast<size_t>(i)] + s - 1);
            if (f == 0) zero = true;
            k *= f;
        }
        if (zero) continue;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                k *= Rational(y[static_cast<size_t>(i)] - y[static_cast<size_t>(j)]);
        const long exp = a + shape.size() - static_cast<long>(s) * q;
        out.add_term(static_cast<int>(exp), coeff * k);
    }
    return out;
}

SchubertPoly sigma_in_subbundle_roots(const Partition& shape, int genus, int rows,
                                      int quotient_rank) {
    SchubertRingParams params{genus, rows, 0, false};
    // c_v(Q) = sum_u (-theta)^u / u! * h_{v-u}(x).
    auto chern_q = [&](int v) {
        SchubertPoly out = SchubertPoly::zero(params);
        if (v < 0) return out;
        Rational inv_fact(1);
        for (int u = 0; u <= v && u <= genus; ++u) {
            if (u > 0) inv_fact /= u;
            out.add_term(Partition::row(v - u), u, (u % 2 == 0) ? inv_fact : -inv_fact);
        }
        return out;
    };
    const int l = shape.length();
    if (l == 0) return SchubertPoly::one(params);
    std::vector<std::vector<SchubertPoly>> jt;
    for (int i = 1; i <= l; ++i) {
        std::vector<SchubertPoly> row;
        for (int j = 1; j <= l; ++j) row.push_back(chern_q(shape.part(i - 1) + j - i));
        jt.push_back(std::move(row));
    }
    (void)quotient_rank;
    return ring_determinant(jt, SchubertPoly::one(params));
}

}  // namespace bn
