#include "bn/brill_noether.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bn/errors.hpp"
#include "bn/porteous.hpp"

namespace bn {

void RamificationProblem::validate() const {
    if (g < 1) throw ConfigError("genus must be >= 1");
    if (r < 1) throw ConfigError("dimension r must be >= 1");
    if (d < 1) throw ConfigError("degree must be >= 1");
    if (static_cast<int>(m.size()) != r + 1)
        throw InvalidMultiplicity("vanishing sequence must have r+1 entries");
    for (size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] <= m[i + 1])
            throw InvalidMultiplicity("vanishing sequence must be strictly decreasing");
    if (m.back() < 0) throw InvalidMultiplicity("vanishing orders must be nonnegative");
    if (m.front() > d) throw InvalidMultiplicity("m_0 cannot exceed the degree");
}

long rho_classical(int g, int r, int d) {
    return static_cast<long>(g) - static_cast<long>(r + 1) * (g + r - d);
}

long rho_moving(const RamificationProblem& p) {
    long s = 0;
    for (int i = 0; i <= p.r; ++i) s += p.m[static_cast<size_t>(i)] - i;
    return 1 + rho_classical(p.g, p.r, p.d) - s;
}

long rho_fixed(int g, int r, int d, const std::vector<std::vector<int>>& point_sequences) {
    long total = rho_classical(g, r, d);
    for (const auto& seq : point_sequences) {
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] <= seq[i + 1])
                throw InvalidMultiplicity("point sequence must be strictly decreasing");
        for (size_t i = 0; i < seq.size(); ++i) total -= seq[i] - static_cast<long>(i);
    }
    return total;
}

int effective_index_count(const RamificationProblem& p) {
    // mu_i = m_i + i + g - d is weakly decreasing, so the effective indices
    // (mu_i >= 1) form a prefix.
    int count = 0;
    for (int i = 0; i <= p.r; ++i) {
        if (p.m[static_cast<size_t>(i)] + i + p.g - p.d >= 1)
            ++count;
        else
            break;
    }
    return count;
}

namespace {

ClassResult vacuous_result(EnginePath path) {
    ClassResult res;
    res.theta_exponent = 0;
    res.coefficient = 1;
    res.formal_coefficient = 1;
    res.path = path;
    res.vacuous = true;
    return res;
}

// Codimension of the class after dropping the vacuous indices: with
// x_i = m_i + g - d over the p kept indices, c = sum x_i + p(p-1)/2 - 1.
// Equals g minus the expected dimension of the trimmed problem.
long trimmed_exponent(const RamificationProblem& p, int kept) {
    long c = 0;
    for (int i = 0; i < kept; ++i) c += p.m[static_cast<size_t>(i)] + p.g - p.d;
    return c + static_cast<long>(kept) * (kept - 1) / 2 - 1;
}

void finalize(ClassResult& res, int g) {
    res.formal_coefficient = res.coefficient;
    if (res.theta_exponent > g) {
        res.coefficient = 0;
        res.truncated = true;
    }
    if (res.theta_exponent == g && !res.truncated) {
        Rational cnt = res.coefficient * Rational(factorial(g));
        if (!is_integer(cnt))
            throw InternalError("non-integer count " + to_string(cnt));
        res.count = rational_num(cnt);
    }
}

}  // namespace

ClassResult wrd_closed_form(const RamificationProblem& prob) {
    prob.validate();
    const int p = effective_index_count(prob);
    if (p == 0) return vacuous_result(EnginePath::ClosedForm);

    const int g = prob.g, d = prob.d;
    std::vector<int> m(prob.m.begin(), prob.m.begin() + p);
    const std::vector<int> mp = eliminate_redundant(m).reassigned;
    const int re = p - 1;  // effective r after trimming

    // X_k = m_k + g + re - d; all positive on the kept prefix.
    std::vector<long> X(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) X[static_cast<size_t>(i)] = m[static_cast<size_t>(i)] + g + re - d;

    auto pair_product = [&](int skip1, int skip2) {
        Int prod = 1;
        for (int i = 0; i < p; ++i) {
            if (i == skip1 || i == skip2) continue;
            for (int j = i + 1; j < p; ++j) {
                if (j == skip1 || j == skip2) continue;
                prod *= m[static_cast<size_t>(i)] - m[static_cast<size_t>(j)];
            }
        }
        return prod;
    };
    // Factors from shifting index k down by one: m_i - m_k + 1 above k,
    // m_k - m_i - 1 below; both nonnegative for strictly decreasing m.
    auto shift1_product = [&](int k, int skip) {
        Int prod = 1;
        for (int i = 0; i < p; ++i) {
            if (i == k || i == skip) continue;
            prod *= (i < k) ? (m[static_cast<size_t>(i)] - m[static_cast<size_t>(k)] + 1)
                            : (m[static_cast<size_t>(k)] - m[static_cast<size_t>(i)] - 1);
        }
        return prod;
    };

    Int total = 0;
    for (int k = 0; k < p; ++k) {
        const long mk = mp[static_cast<size_t>(k)];
        if (mk == 0) continue;
        const Int Ak = Int(mk) * (d + (mk - 1) * (g - 1));
        const Int Bk = Int(mk) * (mk - 1);

        total += Ak * X[static_cast<size_t>(k)] * pair_product(k, -1) * shift1_product(k, -1);

        if (Bk != 0) {
            Int down2 = 1;
            for (int i = 0; i < p; ++i) {
                if (i == k) continue;
                down2 *= (i < k) ? (m[static_cast<size_t>(i)] - m[static_cast<size_t>(k)] + 2)
                                 : (m[static_cast<size_t>(k)] - m[static_cast<size_t>(i)] - 2);
            }
            total -= Bk * X[static_cast<size_t>(k)] * (X[static_cast<size_t>(k)] - 1) *
                     pair_product(k, -1) * down2;
        }

        for (int l = k + 1; l < p; ++l) {
            const long ml = mp[static_cast<size_t>(l)];
            if (ml == 0) continue;
            total -= 2 * Int(mk) * ml * X[static_cast<size_t>(k)] * X[static_cast<size_t>(l)] *
                     (m[static_cast<size_t>(k)] - m[static_cast<size_t>(l)]) * pair_product(k, l) *
                     shift1_product(k, l) * shift1_product(l, k);
        }
    }

    Int denom = 1;
    for (int i = 0; i < p; ++i) denom *= factorial(X[static_cast<size_t>(i)]);

    ClassResult res;
    res.path = EnginePath::ClosedForm;
    res.theta_exponent = static_cast<int>(trimmed_exponent(prob, p));
    res.coefficient = Rational(total, denom);
    finalize(res, g);
    return res;
}

namespace {

int auto_twist(const RamificationProblem& p) {
    // Large enough that the section bundle exists and surjects onto every
    // principal-parts quotient in play.
    return std::max(0, 2 * p.g - 1 - p.d + p.m.front());
}

}  // namespace

ClassResult wrd_symbolic(const RamificationProblem& prob) {
    prob.validate();
    const int p = effective_index_count(prob);
    if (p == 0) return vacuous_result(EnginePath::Symbolic);

    const int g = prob.g, d = prob.d;
    const int n = prob.twist.value_or(auto_twist(prob));
    const long rank_e = static_cast<long>(d) + n + 1 - g;

    std::vector<int> m(prob.m.begin(), prob.m.begin() + p);
    const RedundancyReduction red = eliminate_redundant(m);

    std::vector<long> a, b, r;
    std::vector<FilteredDegeneracyProblem<ChowElement>::ChernSupplier> chern;
    for (int last : red.block_last) {
        a.push_back(rank_e);
        b.push_back(static_cast<long>(n) + m[static_cast<size_t>(last)]);
        r.push_back(static_cast<long>(d) + n - g - last);
        ChowElement total = exp_class(ChowElement::theta(g)) *
                            chern_principal_parts(m[static_cast<size_t>(last)], g, d);
        chern.push_back([total](int deg) { return total.graded_part(deg); });
    }
    FilteredDegeneracyProblem<ChowElement> problem(std::move(a), std::move(b), std::move(r),
                                                   std::move(chern), ChowElement::one(g));
    const PicClass cls = gysin_to_pic(porteous_determinant(problem));

    ClassResult res;
    res.path = EnginePath::Symbolic;
    res.theta_exponent = static_cast<int>(trimmed_exponent(prob, p));
    if (!cls.is_zero()) {
        if (!cls.is_monomial() || cls.coefficient(res.theta_exponent) == 0)
            throw InternalError("degeneracy class is not a single theta power: " + cls.str());
        res.coefficient = cls.coefficient(res.theta_exponent);
    }
    finalize(res, g);
    return res;
}

ClassResult w1d_closed_form(int g, int d, int m0) {
    if (m0 < 1) throw InvalidMultiplicity("m0 must be >= 1");
    RamificationProblem p{g, 1, d, {m0, 0}, std::nullopt};
    p.validate();

    ClassResult res;
    res.path = EnginePath::ClosedForm;
    const int kept = effective_index_count(p);
    if (kept == 0) return vacuous_result(EnginePath::ClosedForm);
    if (kept == 1) return wrd_closed_form(p);  // the displayed product assumes both conditions bite

    res.theta_exponent = 2 * (g - d + 1) + m0 - 2;
    const Int num = Int(m0) * (m0 + g + 1 - d) * (m0 - 1) *
                    (Int(d) * m0 - Int(m0) * m0 + g + 1 - d + m0);
    const Int den = factorial(m0 + g + 1 - d) * factorial(g + 1 - d);
    res.coefficient = Rational(num, den);
    finalize(res, g);
    return res;
}

ExistenceResult existence(const RamificationProblem& p) {
    ExistenceResult out;
    out.symbolic = wrd_symbolic(p);
    out.closed = wrd_closed_form(p);
    out.exists = out.symbolic.vacuous || !out.symbolic.is_zero();

    std::ostringstream diff;
    if (out.symbolic.theta_exponent != out.closed.theta_exponent)
        diff << "theta exponent " << out.symbolic.theta_exponent << " vs "
             << out.closed.theta_exponent << "; ";
    if (out.symbolic.coefficient != out.closed.coefficient)
        diff << "coefficient " << to_string(out.symbolic.coefficient) << " vs "
             << to_string(out.closed.coefficient) << "; ";
    if (out.symbolic.vacuous != out.closed.vacuous) diff << "vacuous flag mismatch; ";
    out.disagreement = diff.str();
    out.paths_agree = out.disagreement.empty();
    return out;
}

int common_factor_k(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i + 1 < n; ++i)
        if (m[static_cast<size_t>(i)] <= m[static_cast<size_t>(i + 1)])
            throw InvalidMultiplicity("multiplicities must be strictly decreasing");
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int sz = __builtin_popcount(mask);
        if (sz < 2 || sz - 1 <= best) continue;
        long gcd = 0;
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (first < 0)
                first = m[static_cast<size_t>(i)];
            else
                gcd = std::gcd(gcd, static_cast<long>(first - m[static_cast<size_t>(i)]));
        }
        if (gcd >= 2) best = sz - 1;
    }
    return best;
}

BoundResult dimension_bound(const RamificationProblem& p) {
    p.validate();
    BoundResult out;
    out.rho = rho_moving(p);
    out.k = common_factor_k(p.m);
    out.bound = (out.k == p.r) ? out.rho + p.r - 2 : out.rho + out.k - 1;
    out.nonexistence = out.bound < 0;
    out.strong_nonexistence = out.rho < 1 - p.r;
    out.convention_sensitive = (out.k == 0) && (out.rho == 0);
    return out;
}

std::vector<TableRow> rho_zero_rows(int d_offset, int max_g) {
    if (d_offset != 1 && d_offset != 2) throw ConfigError("d offset must be 1 or 2");
    std::vector<TableRow> rows;
    for (int g = 1; g <= max_g; ++g) {
        const int d = g + d_offset;
        const int st = g + 3 * d_offset - 2;  // s + t forced by expected dimension zero
        for (int s = 1; 2 * s < st; ++s) {
            const int t = st - s;
            if (t > d) continue;
            RamificationProblem p{g, 2, d, {t, s, 0}, std::nullopt};
            if (rho_moving(p) != 0) throw InternalError("row sweep produced rho != 0");
            ClassResult cls = wrd_symbolic(p);
            if (!cls.count)
                throw InternalError("rho-zero row without a count");
            rows.push_back({g, d, s, t, *cls.count});
        }
    }
    return rows;
}

Rational table_bracket(const TableRow& row) {
    return Rational(row.count, factorial(row.g)) * Rational(factorial(row.t + row.g + 2 - row.d)) *
           Rational(factorial(row.s + row.g + 2 - row.d)) * Rational(factorial(row.g + 2 - row.d));
}

}  // namespace bn
