#include "bn/plane_curve.hpp"

#include <numeric>

#include "bn/errors.hpp"

namespace bn {

long genus_smooth(int d) {
    if (d < 1) throw ConfigError("degree must be >= 1");
    return static_cast<long>(d - 1) * (d - 2) / 2;
}

long node_count(int d, int g) {
    if (g < 0 || g > genus_smooth(d)) throw ConfigError("genus out of range for this degree");
    return genus_smooth(d) - g;
}

long dim_plane_curves(int d, int g) {
    (void)node_count(d, g);  // validates the range
    return 3L * d - 1 + g;
}

ResolutionResult resolution_sequence(int m0, int m1) {
    if (m1 < 1) throw InvalidMultiplicity("smooth image point: m1 must be >= 1");
    if (m0 <= m1) throw InvalidMultiplicity("resolution needs m0 > m1");

    ResolutionResult out;
    // Subtractive Euclid on the local exponent pair; each blowup removes one
    // infinitely-near point of multiplicity min(pair).
    int a = m0, b = m1;
    for (;;) {
        if (a < b) std::swap(a, b);
        if (b == a) {
            // Multiplicity-a point tangent to itself: blowing up reveals an
            // inflection whose position on the exceptional line is free.
            out.steps.push_back({ResolutionStep::Kind::MultiplePoint, a});
            out.gross_loss += a;
            out.genus_drop += static_cast<long>(a) * (a - 1) / 2;
            out.steps.push_back({ResolutionStep::Kind::FreeParameter, 0});
            out.gross_loss -= 1;
            out.free_parameter = true;
            for (int i = 0; i < a - 1; ++i) {
                out.steps.push_back({ResolutionStep::Kind::Inflection, 0});
                out.gross_loss += 1;
            }
            break;
        }
        if (b == 1) {
            // Smooth but inflected of type (1, a): a-1 inflection conditions.
            for (int i = 0; i < a - 1; ++i) {
                out.steps.push_back({ResolutionStep::Kind::Inflection, 0});
                out.gross_loss += 1;
            }
            break;
        }
        out.steps.push_back({ResolutionStep::Kind::MultiplePoint, b});
        out.gross_loss += b;
        out.genus_drop += static_cast<long>(b) * (b - 1) / 2;
        a -= b;
    }
    out.net_loss = out.gross_loss - 2;
    return out;
}

PlaneAudit dimension_audit(const RamificationProblem& p) {
    p.validate();
    if (p.r != 2) throw ConfigError("dimension audit applies to r = 2 only");

    PlaneAudit out;
    const int base = p.m[2];
    out.normalized_m = {p.m[0] - base, p.m[1] - base, 0};
    const int d = p.d - base;
    const int g = p.g;
    RamificationProblem norm{g, 2, d, out.normalized_m, std::nullopt};
    out.rho = rho_moving(norm);

    out.feasible = d >= 1 && g <= genus_smooth(d);
    if (!out.feasible) return out;

    const int m0 = out.normalized_m[0], m1 = out.normalized_m[1];
    out.nodes = node_count(d, g);
    out.family_dim = dim_plane_curves(d, g);
    out.family_dim_rho_form = 3L * g + out.rho + m0 + m1;
    out.ramified_total = out.rho + 3L * g + 4;
    out.ramified_total_exact = out.family_dim + 2 - (m0 + m1 - 2);
    out.fiber_threshold = out.rho + 8;
    out.moduli_dim = (g >= 2) ? 3L * g - 3 : 1L;
    // A positive-dimensional family on every curve would need
    // moduli_dim + fiber_threshold dimensions; the ramified total falls short.
    out.nonexistence_positive_family =
        out.ramified_total < out.moduli_dim + out.fiber_threshold;
    if (m1 >= 1 && m0 > m1) {
        out.resolution = resolution_sequence(m0, m1);
        out.resolution_applies = true;
    }
    return out;
}

}  // namespace bn
