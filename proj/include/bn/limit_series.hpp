#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bn/brill_noether.hpp"

// Exhaustive enumeration of limit linear series data on a flag curve: a
// backbone chain of g rational curves, each carrying an elliptic tail through
// a (possibly empty) chain of rational bridge curves.  Aspects are recorded
// as vanishing sequences at the nodes; the elliptic group structure enters
// only through reported torsion orders.

namespace bn {

struct FlagCurveConfig {
    int g = 1;
    std::vector<int> chain_lengths;  // bridges between backbone and each tail; default 1

    static FlagCurveConfig standard(int g) {
        return {g, std::vector<int>(static_cast<size_t>(g), 1)};
    }
    void validate() const;
};

// Component identifiers: backbone l = 1..g, bridge (l, k) with k = 1..len_l,
// tail l.  Printable form: "Z3", "W3.1", "E3".
struct ComponentId {
    enum class Kind { Backbone, Bridge, Tail } kind = Kind::Backbone;
    int index = 1;   // backbone position
    int step = 0;    // bridge step, 0 otherwise

    auto operator<=>(const ComponentId&) const = default;
    std::string str() const;
};

// One enumerated configuration: every (component, marked point) carries a
// strictly decreasing vanishing sequence.  Points are named relative to the
// component: "left"/"right" backbone nodes, "tail" toward the tail chain,
// "near"/"far" on bridges, "node" on tails, "Q" for the moving point.
struct LimitSeriesState {
    std::map<std::pair<std::string, std::string>, std::vector<int>> aspects;

    const std::vector<int>& sequence(const std::string& component,
                                     const std::string& point) const;
};

// Total ramification weight of a sequence: sum of m_i - (r - i).
long sequence_weight(const std::vector<int>& seq);

struct EnumerationOptions {
    long max_states = 200000;
};

// All states with the moving point on the given component.  Enforced
// constraints: node compatibility, per-component ramification budgets, the
// two-point degree bound, cusp conditions toward the tails, backbone
// monotonicity with at most one stalling index per step, and the required
// vanishing at the moving point.
std::vector<LimitSeriesState> enumerate_limit_series(const FlagCurveConfig& cfg,
                                                     const RamificationProblem& p,
                                                     const ComponentId& q_component,
                                                     const EnumerationOptions& opts = {});

struct WindowReport {
    long weight = 0;        // tail-aspect weight at its node
    long lower = 0;         // r(g-1)
    long upper = 0;         // r(g-1) + rho + r - 1
    long upper_alt = 0;     // r(g+1) + rho + r - 1, the looser stated bound
    bool pass = false;      // lower <= weight <= upper
    bool pass_alt = false;
    bool tight_bound_is_primary = true;  // which upper bound is sharper here
};

// Weight window for a state with the moving point on tail `tail_index`.
WindowReport weight_window_check(const LimitSeriesState& state, const RamificationProblem& p,
                                 int tail_index);

// Torsion order forced by two positions that both attain maximal vanishing at
// the tail node.  Throws when the positions are not both maximal.
int torsion_order(const LimitSeriesState& state, const RamificationProblem& p, int tail_index,
                  int pos_i, int pos_j);

// All torsion orders readable from a state (pairs of maximal positions).
std::set<int> torsion_orders(const LimitSeriesState& state, const RamificationProblem& p,
                             int tail_index);

struct AspectSplit {
    int t = 0;                 // parameters on the tail side
    long complement_dim = 0;   // parameters on the rest of the curve
    long divisor_degree = 0;   // degree of the correcting divisors, t + r - k
};

struct AspectFamilyReport {
    long dimension = 0;  // rho + k - 1, capped at rho + r - 2 when k = r
    bool nonexistent = false;
    std::vector<AspectSplit> splits;
};

AspectFamilyReport aspect_family_dimension(const RamificationProblem& p, int k);

// Summary used by the command-line front end.
struct EnumerationSummary {
    std::map<std::string, long> states_per_component;
    long tail_states = 0;
    long rational_states = 0;
    bool all_windows_pass = true;
    std::map<std::string, std::set<int>> torsion_per_tail;
};

enum class Placement { Tails, Rational, All };

EnumerationSummary enumerate_summary(const FlagCurveConfig& cfg, const RamificationProblem& p,
                                     Placement placement, const EnumerationOptions& opts = {});

}  // namespace bn
