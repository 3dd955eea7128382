#include "bn/grassmann.hpp"

#include <algorithm>

#include "bn/errors.hpp"
#include "bn/porteous.hpp"

namespace bn {

GrassCurveClass::GrassCurveClass(int genus, int rows) : genus_(genus), rows_(rows) {}

GrassCurveClass GrassCurveClass::zero(int genus, int rows) { return {genus, rows}; }

GrassCurveClass GrassCurveClass::one(int genus, int rows) {
    GrassCurveClass e(genus, rows);
    e.add_term(Partition::empty(), ChowElement::one(genus));
    return e;
}

bool GrassCurveClass::is_zero() const { return terms_.empty(); }

void GrassCurveClass::add_term(const Partition& shape, const ChowElement& coeff) {
    if (coeff.is_zero()) return;
    if (shape.length() > rows_) return;
    auto [it, inserted] = terms_.try_emplace(shape, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassCurveClass GrassCurveClass::operator-() const {
    GrassCurveClass out(genus_, rows_);
    for (const auto& [shape, ce] : terms_) out.terms_.emplace(shape, -ce);
    return out;
}

GrassCurveClass& GrassCurveClass::operator+=(const GrassCurveClass& rhs) {
    if (genus_ != rhs.genus_ || rows_ != rhs.rows_)
        throw RingMismatch("combined ring parameter mismatch");
    for (const auto& [shape, ce] : rhs.terms_) add_term(shape, ce);
    return *this;
}

GrassCurveClass& GrassCurveClass::operator-=(const GrassCurveClass& rhs) {
    return *this += -rhs;
}

GrassCurveClass& GrassCurveClass::operator*=(const GrassCurveClass& rhs) {
    if (genus_ != rhs.genus_ || rows_ != rhs.rows_)
        throw RingMismatch("combined ring parameter mismatch");
    GrassCurveClass out(genus_, rows_);
    for (const auto& [s1, c1] : terms_) {
        for (const auto& [s2, c2] : rhs.terms_) {
            const ChowElement prod = c1 * c2;
            if (prod.is_zero()) continue;
            for (const auto& [shape, mult] : lr_expand(s1, s2, rows_))
                out.add_term(shape, prod * Rational(mult));
        }
    }
    terms_.swap(out.terms_);
    return *this;
}

int grass_min_twist(int g, int r, int d, const std::vector<int>& m) {
    // Section bundle exists and surjects onto each principal-parts quotient,
    // its rank is at least r + 4, and every rank condition is effective.
    int n = std::max(0, 2 * g - 1 - d + (m.empty() ? 0 : m.front()));
    n = std::max(n, g - d + r + 3);
    n = std::max(n, r + 1 - (m.empty() ? 0 : m.back()));
    return n;
}

namespace {

// Entry c_t(F - S) in the dual-root presentation: c(F) * sum_w h_w(x), the
// section bundle cancelling against the quotient's theta content.
GrassCurveClass entry_class(const ChowElement& chern_f, int degree, int rows) {
    GrassCurveClass out(chern_f.genus(), rows);
    if (degree < 0) return out;
    for (int u = 0; u <= 2 && u <= degree; ++u) {
        const ChowElement part = chern_f.graded_part(u);
        if (part.is_zero()) continue;
        out.add_term(Partition::row(degree - u), part);
    }
    return out;
}

SchubertPoly extract_zeta(const GrassCurveClass& x) {
    SchubertRingParams params{x.genus(), x.rows(), 0, false};
    SchubertPoly out = SchubertPoly::zero(params);
    for (const auto& [shape, ce] : x.terms())
        for (const auto& [mono, q] : ce.terms())
            if (mono.b == 1 && mono.c == 0) out.add_term(shape, mono.a, q);
    return out;
}

PicClass pair_against(const SchubertPoly& cls, const Partition& shape, int genus, int rows,
                      int q_rank) {
    SchubertPoly dual = sigma_in_subbundle_roots(shape, genus, rows, q_rank);
    return schubert_push_to_pic(cls * dual, q_rank);
}

}  // namespace

GrassLocusResult grass_locus_class(int g, int r, int d, const std::vector<int>& m,
                                   std::optional<int> twist) {
    if (g < 1) throw ConfigError("genus must be >= 1");
    if (r < 0) throw ConfigError("dimension r must be >= 0");
    if (static_cast<int>(m.size()) != r + 1)
        throw InvalidMultiplicity("vanishing sequence must have r+1 entries");

    GrassLocusResult out;
    out.twist = twist.value_or(grass_min_twist(g, r, d, m));
    const int n = out.twist;
    const long rank_e = static_cast<long>(d) + n + 1 - g;
    const int s = r + 1;
    if (rank_e < s) throw ConfigError("section bundle rank below the subbundle rank");
    out.quotient_rank = static_cast<int>(rank_e) - s;

    // Rank conditions with nonpositive mu impose nothing; they form a suffix
    // and leave the determinant unchanged, so drop them.
    int kept = 0;
    for (int i = 0; i <= r; ++i) {
        if (n + static_cast<long>(m[static_cast<size_t>(i)]) + i - r >= 1)
            ++kept;
        else
            break;
    }
    for (int i = kept; i <= r; ++i)
        if (n + static_cast<long>(m[static_cast<size_t>(i)]) + i - r >= 1)
            throw InternalError("effective rank conditions do not form a prefix");

    SchubertRingParams raw_params{g, s, 0, false};
    if (kept == 0) {
        out.raw = SchubertPoly::one(raw_params);
        out.codimension = 0;
        SchubertRingParams box_params{g, s, out.quotient_rank, true};
        out.reduced = SchubertPoly::one(box_params);
        out.co_profile[{Partition::box(s, out.quotient_rank), 0}] = 1;
        out.pushed = schubert_push_to_pic(out.raw, out.quotient_rank);
        return out;
    }

    std::vector<int> mk(m.begin(), m.begin() + kept);
    const RedundancyReduction red = eliminate_redundant(mk);

    std::vector<long> a, b, rr;
    std::vector<FilteredDegeneracyProblem<GrassCurveClass>::ChernSupplier> chern;
    for (int last : red.block_last) {
        a.push_back(s);
        b.push_back(static_cast<long>(n) + mk[static_cast<size_t>(last)]);
        rr.push_back(static_cast<long>(r) - last);
        ChowElement cf = chern_principal_parts(mk[static_cast<size_t>(last)], g, d);
        chern.push_back([cf, s](int deg) { return entry_class(cf, deg, s); });
    }
    FilteredDegeneracyProblem<GrassCurveClass> problem(std::move(a), std::move(b), std::move(rr),
                                                       std::move(chern),
                                                       GrassCurveClass::one(g, s));
    const MuSequence ms = mu_sequence(problem);
    out.codimension = 0;
    for (long mu : ms.mu) out.codimension += mu;

    out.raw = extract_zeta(porteous_determinant(problem));
    out.pushed = schubert_push_to_pic(out.raw, out.quotient_rank);

    // Reduce to the box basis by pairing against complementary sigma classes.
    // The pairing matrix is triangular in the shape size with unit diagonal.
    const int q = out.quotient_rank;
    SchubertRingParams box_params{g, s, q, true};
    out.reduced = SchubertPoly::zero(box_params);
    if (out.raw.is_zero()) {
        out.zero = true;
        if (!out.pushed.is_zero()) throw InternalError("zero class with nonzero pushforward");
        return out;
    }

    const long lo = std::max<long>(0, out.codimension - g);
    const long hi = std::min<long>(out.codimension, static_cast<long>(s) * q);
    std::vector<Partition> window;
    {
        // All shapes in the s x q box with size in [lo, hi].
        std::vector<int> parts;
        auto gen = [&](auto&& self, int row, int maxw, long remaining_min, long remaining_max,
                       long size) -> void {
            if (size >= lo && size <= hi) window.push_back(Partition(parts));
            if (row == s) return;
            for (int w = 1; w <= maxw; ++w) {
                if (size + w > hi) break;
                parts.push_back(w);
                self(self, row + 1, w, remaining_min, remaining_max, size + w);
                parts.pop_back();
            }
        };
        gen(gen, 0, q, lo, hi, 0);
    }
    std::sort(window.begin(), window.end(), [](const Partition& x, const Partition& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });

    std::map<Partition, PicClass> coords;
    for (const Partition& lam : window) {
        PicClass rhs = pair_against(out.raw, lam.complement(s, q), g, s, q);
        for (const auto& [nu, cnu] : coords) {
            if (nu.size() <= lam.size()) continue;
            // Pairing of sigma_nu against the dual of lambda: a pure theta
            // power of exponent |nu| - |lambda|.
            PicClass gram = schubert_push_to_pic(
                sigma_in_subbundle_roots(nu, g, s, q) *
                    sigma_in_subbundle_roots(lam.complement(s, q), g, s, q),
                q);
            for (const auto& [e1, q1] : cnu.coeffs())
                for (const auto& [e2, q2] : gram.coeffs()) rhs.add_term(e1 + e2, -q1 * q2);
        }
        if (!rhs.is_zero()) coords.emplace(lam, rhs);
    }

    for (const auto& [lam, pic] : coords)
        for (const auto& [e, coeff] : pic.coeffs()) {
            out.reduced.add_term(lam, e, coeff);
            out.co_profile[{lam.complement(s, q), e}] = coeff;
        }
    out.zero = out.reduced.is_zero();

    if (!out.pushed.is_zero() && out.pushed.is_monomial() &&
        out.pushed.coeffs().begin()->first == g) {
        const Rational cnt = evaluate_degree(out.pushed);
        if (!is_integer(cnt)) throw InternalError("non-integer locus degree");
        out.count = rational_num(cnt);
    }
    return out;
}

}  // namespace bn
