#include "bn/limit_series.hpp"

#include <algorithm>

#include "bn/errors.hpp"

namespace bn {

void FlagCurveConfig::validate() const {
    if (g < 1) throw ConfigError("flag curve needs at least one tail");
    if (static_cast<int>(chain_lengths.size()) != g)
        throw ConfigError("one chain length per tail required");
    for (int len : chain_lengths)
        if (len < 0) throw ConfigError("chain lengths must be >= 0");
}

std::string ComponentId::str() const {
    switch (kind) {
        case Kind::Backbone: return "Z" + std::to_string(index);
        case Kind::Bridge: return "W" + std::to_string(index) + "." + std::to_string(step);
        case Kind::Tail: return "E" + std::to_string(index);
    }
    return "?";
}

const std::vector<int>& LimitSeriesState::sequence(const std::string& component,
                                                   const std::string& point) const {
    auto it = aspects.find({component, point});
    if (it == aspects.end())
        throw ConfigError("no aspect stored for " + component + ":" + point);
    return it->second;
}

long sequence_weight(const std::vector<int>& seq) {
    const int r = static_cast<int>(seq.size()) - 1;
    long w = 0;
    for (int i = 0; i <= r; ++i) w += seq[static_cast<size_t>(i)] - (r - i);
    return w;
}

namespace {

std::vector<std::vector<int>> all_sequences(int d, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int pos, int max_val) -> void {
        if (pos == r + 1) {
            out.push_back(cur);
            return;
        }
        const int need_below = r - pos;  // strictly smaller values must still fit
        for (int v = max_val; v >= need_below; --v) {
            cur.push_back(v);
            self(self, pos + 1, v - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<int> node_complement(const std::vector<int>& seq, int d) {
    const int r = static_cast<int>(seq.size()) - 1;
    std::vector<int> out(seq.size());
    for (int i = 0; i <= r; ++i) out[static_cast<size_t>(i)] = d - seq[static_cast<size_t>(r - i)];
    return out;
}

bool two_point_ok(const std::vector<int>& a, const std::vector<int>& b, int d) {
    const int r = static_cast<int>(a.size()) - 1;
    for (int i = 0; i <= r; ++i)
        if (a[static_cast<size_t>(i)] + b[static_cast<size_t>(r - i)] > d) return false;
    return true;
}

bool has_cusp(const std::vector<int>& seq) {
    const int r = static_cast<int>(seq.size()) - 1;
    if (r == 0) return seq[0] >= 2;
    return seq[static_cast<size_t>(r - 1)] >= 2;
}

bool meets_requirement(const std::vector<int>& seq, const std::vector<int>& m) {
    for (size_t i = 0; i < seq.size(); ++i)
        if (seq[i] < m[i]) return false;
    return true;
}

struct Search {
    const FlagCurveConfig& cfg;
    const RamificationProblem& prob;
    ComponentId q_comp;
    const EnumerationOptions& opts;

    int d, r, g;
    long rational_budget, tail_budget;
    std::vector<std::vector<int>> pool, q_pool;
    std::vector<LimitSeriesState>* results = nullptr;

    Search(const FlagCurveConfig& c, const RamificationProblem& p, ComponentId qc,
           const EnumerationOptions& o)
        : cfg(c), prob(p), q_comp(qc), opts(o) {
        d = prob.d;
        r = prob.r;
        g = prob.g;
        rational_budget = static_cast<long>(r + 1) * (d - r);
        tail_budget = static_cast<long>(r + 1) * d;
        pool = all_sequences(d, r);
        for (const auto& s : pool)
            if (meets_requirement(s, prob.m)) q_pool.push_back(s);
    }

    int node_count(const ComponentId& c) const {
        switch (c.kind) {
            case ComponentId::Kind::Backbone:
                return (c.index > 1 ? 1 : 0) + (c.index < g ? 1 : 0) + 1;
            case ComponentId::Kind::Bridge: return 2;
            case ComponentId::Kind::Tail: return 1;
        }
        return 0;
    }

    struct Link {
        ComponentId comp;
        std::string entry_point;  // the point through which the walk enters
    };

    // Neighbor across a node, as seen from (comp, point).
    Link neighbor(const ComponentId& c, const std::string& point) const {
        using K = ComponentId::Kind;
        if (c.kind == K::Backbone) {
            if (point == "left") return {{K::Backbone, c.index - 1, 0}, "right"};
            if (point == "right") return {{K::Backbone, c.index + 1, 0}, "left"};
            if (cfg.chain_lengths[static_cast<size_t>(c.index - 1)] > 0)
                return {{K::Bridge, c.index, 1}, "near"};
            return {{K::Tail, c.index, 0}, "node"};
        }
        if (c.kind == K::Bridge) {
            if (point == "near") {
                if (c.step > 1) return {{K::Bridge, c.index, c.step - 1}, "far"};
                return {{K::Backbone, c.index, 0}, "tail"};
            }
            if (c.step < cfg.chain_lengths[static_cast<size_t>(c.index - 1)])
                return {{K::Bridge, c.index, c.step + 1}, "near"};
            return {{K::Tail, c.index, 0}, "node"};
        }
        throw ConfigError("tail has a single node");
    }

    // True when the walk away from (comp, point) runs through a pure chain of
    // two-node rational curves and ends in a tail; the aspect of comp then
    // carries at least a cusp at that node.
    bool cusp_required(const ComponentId& c, const std::string& point) const {
        Link cur = neighbor(c, point);
        for (;;) {
            if (cur.comp.kind == ComponentId::Kind::Tail) return true;
            if (node_count(cur.comp) != 2) return false;
            std::string exit_point;
            if (cur.comp.kind == ComponentId::Kind::Bridge)
                exit_point = (cur.entry_point == "near") ? "far" : "near";
            else {
                // Two-node backbone curve: the other node among left/right/tail.
                std::vector<std::string> pts;
                if (cur.comp.index > 1) pts.push_back("left");
                if (cur.comp.index < g) pts.push_back("right");
                pts.push_back("tail");
                exit_point = (pts[0] == cur.entry_point) ? pts[1] : pts[0];
            }
            cur = neighbor(cur.comp, exit_point);
        }
    }

    bool q_here(const ComponentId& c) const { return c == q_comp; }

    // Component-level check: budget, pairwise degree bounds, cusps.
    bool component_ok(const ComponentId& c, const std::vector<std::pair<std::string,
                      const std::vector<int>*>>& marked) const {
        const long budget = (c.kind == ComponentId::Kind::Tail) ? tail_budget : rational_budget;
        long total = 0;
        for (const auto& [pt, seq] : marked) total += sequence_weight(*seq);
        if (total > budget) return false;
        for (size_t i = 0; i < marked.size(); ++i)
            for (size_t j = i + 1; j < marked.size(); ++j)
                if (!two_point_ok(*marked[i].second, *marked[j].second, d)) return false;
        if (c.kind != ComponentId::Kind::Tail)
            for (const auto& [pt, seq] : marked)
                if (pt != "Q" && cusp_required(c, pt) && !has_cusp(*seq)) return false;
        return true;
    }

    void emit(LimitSeriesState& state) {
        if (static_cast<long>(results->size()) >= opts.max_states)
            throw BudgetExceeded("state budget of " + std::to_string(opts.max_states) +
                                 " exceeded");
        results->push_back(state);
    }

    // Enumerates the bridge chain and tail of backbone index l, then moves on.
    void descend_tail(int l, const std::vector<int>& incoming, int step, LimitSeriesState& state) {
        const int len = cfg.chain_lengths[static_cast<size_t>(l - 1)];
        if (step > len) {
            // incoming is the far-side sequence facing the tail.
            ComponentId tail{ComponentId::Kind::Tail, l, 0};
            std::vector<int> node = node_complement(incoming, d);
            state.aspects[{tail.str(), "node"}] = node;
            if (q_here(tail)) {
                for (const auto& qs : q_pool) {
                    std::vector<std::pair<std::string, const std::vector<int>*>> marked = {
                        {"node", &node}, {"Q", &qs}};
                    if (!component_ok(tail, marked)) continue;
                    state.aspects[{tail.str(), "Q"}] = qs;
                    next_backbone(l + 1, state);
                    state.aspects.erase({tail.str(), "Q"});
                }
            } else {
                std::vector<std::pair<std::string, const std::vector<int>*>> marked = {
                    {"node", &node}};
                if (component_ok(tail, marked)) next_backbone(l + 1, state);
            }
            state.aspects.erase({tail.str(), "node"});
            return;
        }
        ComponentId bridge{ComponentId::Kind::Bridge, l, step};
        std::vector<int> near = node_complement(incoming, d);
        state.aspects[{bridge.str(), "near"}] = near;
        const bool q_on_bridge = q_here(bridge);
        for (const auto& far : pool) {
            std::vector<std::pair<std::string, const std::vector<int>*>> marked = {
                {"near", &near}, {"far", &far}};
            if (q_on_bridge) {
                for (const auto& qs : q_pool) {
                    auto with_q = marked;
                    with_q.push_back({"Q", &qs});
                    if (!component_ok(bridge, with_q)) continue;
                    state.aspects[{bridge.str(), "far"}] = far;
                    state.aspects[{bridge.str(), "Q"}] = qs;
                    descend_tail(l, far, step + 1, state);
                    state.aspects.erase({bridge.str(), "Q"});
                    state.aspects.erase({bridge.str(), "far"});
                }
            } else {
                if (!component_ok(bridge, marked)) continue;
                state.aspects[{bridge.str(), "far"}] = far;
                descend_tail(l, far, step + 1, state);
                state.aspects.erase({bridge.str(), "far"});
            }
        }
        state.aspects.erase({bridge.str(), "near"});
    }

    // Chooses the right-node and tail-node sequences of backbone index l.
    void next_backbone(int l, LimitSeriesState& state) {
        if (l > g) {
            emit(state);
            return;
        }
        ComponentId z{ComponentId::Kind::Backbone, l, 0};
        const bool has_left = l > 1;
        const bool has_right = l < g;
        const std::vector<int>* left = nullptr;
        if (has_left) left = &state.sequence("Z" + std::to_string(l), "left");

        auto try_tail_and_recurse = [&](const std::vector<int>* right_seq) {
            for (const auto& tail_seq : pool) {
                std::vector<std::pair<std::string, const std::vector<int>*>> marked;
                if (left) marked.push_back({"left", left});
                if (right_seq) marked.push_back({"right", right_seq});
                marked.push_back({"tail", &tail_seq});
                if (q_here(z)) {
                    for (const auto& qs : q_pool) {
                        auto with_q = marked;
                        with_q.push_back({"Q", &qs});
                        if (!component_ok(z, with_q)) continue;
                        state.aspects[{z.str(), "tail"}] = tail_seq;
                        state.aspects[{z.str(), "Q"}] = qs;
                        descend_tail(l, tail_seq, 1, state);
                        state.aspects.erase({z.str(), "Q"});
                        state.aspects.erase({z.str(), "tail"});
                    }
                } else {
                    if (!component_ok(z, marked)) continue;
                    state.aspects[{z.str(), "tail"}] = tail_seq;
                    descend_tail(l, tail_seq, 1, state);
                    state.aspects.erase({z.str(), "tail"});
                }
            }
        };

        if (!has_right) {
            try_tail_and_recurse(nullptr);
            return;
        }
        for (const auto& right : pool) {
            // Backbone monotonicity with at most one stalling index, between
            // consecutive right-node aspects.
            if (has_left) {
                const auto& prev_right = state.sequence("Z" + std::to_string(l - 1), "right");
                int ties = 0;
                bool ok = true;
                for (int i = 0; i <= r; ++i) {
                    const int a = prev_right[static_cast<size_t>(i)];
                    const int b = right[static_cast<size_t>(i)];
                    if (b < a) {
                        ok = false;
                        break;
                    }
                    if (b == a) ++ties;
                }
                if (!ok || ties > 1) continue;
            }
            state.aspects[{z.str(), "right"}] = right;
            state.aspects[{"Z" + std::to_string(l + 1), "left"}] = node_complement(right, d);
            try_tail_and_recurse(&right);
            state.aspects.erase({"Z" + std::to_string(l + 1), "left"});
            state.aspects.erase({z.str(), "right"});
        }
    }
};

}  // namespace

std::vector<LimitSeriesState> enumerate_limit_series(const FlagCurveConfig& cfg,
                                                     const RamificationProblem& p,
                                                     const ComponentId& q_component,
                                                     const EnumerationOptions& opts) {
    cfg.validate();
    p.validate();
    if (cfg.g != p.g) throw ConfigError("flag curve genus must match the problem");
    if (p.r > 3 || p.d > 8 || p.g > 4)
        throw BudgetExceeded("enumeration supports r <= 3, d <= 8, g <= 4; got r=" +
                             std::to_string(p.r) + " d=" + std::to_string(p.d) +
                             " g=" + std::to_string(p.g));

    std::vector<LimitSeriesState> results;
    Search s(cfg, p, q_component, opts);
    s.results = &results;
    LimitSeriesState state;
    s.next_backbone(1, state);
    return results;
}

WindowReport weight_window_check(const LimitSeriesState& state, const RamificationProblem& p,
                                 int tail_index) {
    WindowReport rep;
    const auto& node = state.sequence("E" + std::to_string(tail_index), "node");
    rep.weight = sequence_weight(node);
    const long rho = rho_moving(p);
    rep.lower = static_cast<long>(p.r) * (p.g - 1);
    rep.upper = rep.lower + rho + p.r - 1;
    rep.upper_alt = static_cast<long>(p.r) * (p.g + 1) + rho + p.r - 1;
    rep.pass = rep.weight >= rep.lower && rep.weight <= rep.upper;
    rep.pass_alt = rep.weight >= rep.lower && rep.weight <= rep.upper_alt;
    rep.tight_bound_is_primary = rep.upper <= rep.upper_alt;
    return rep;
}

namespace {

std::vector<int> maximal_positions(const LimitSeriesState& state, const RamificationProblem& p,
                                   int tail_index) {
    const std::string tail = "E" + std::to_string(tail_index);
    const auto& node = state.sequence(tail, "node");
    const auto& q = state.sequence(tail, "Q");
    std::vector<int> out;
    for (int i = 0; i <= p.r; ++i)
        if (node[static_cast<size_t>(p.r - i)] == p.d - q[static_cast<size_t>(i)])
            out.push_back(i);
    return out;
}

}  // namespace

int torsion_order(const LimitSeriesState& state, const RamificationProblem& p, int tail_index,
                  int pos_i, int pos_j) {
    const std::vector<int> maxpos = maximal_positions(state, p, tail_index);
    auto is_max = [&](int pos) {
        return std::find(maxpos.begin(), maxpos.end(), pos) != maxpos.end();
    };
    if (!is_max(pos_i) || !is_max(pos_j))
        throw ConfigError("torsion order needs two positions of maximal vanishing");
    const auto& q = state.sequence("E" + std::to_string(tail_index), "Q");
    return std::abs(q[static_cast<size_t>(pos_i)] - q[static_cast<size_t>(pos_j)]);
}

std::set<int> torsion_orders(const LimitSeriesState& state, const RamificationProblem& p,
                             int tail_index) {
    std::set<int> out;
    const std::vector<int> maxpos = maximal_positions(state, p, tail_index);
    const auto& q = state.sequence("E" + std::to_string(tail_index), "Q");
    for (size_t a = 0; a < maxpos.size(); ++a)
        for (size_t b = a + 1; b < maxpos.size(); ++b)
            out.insert(std::abs(q[static_cast<size_t>(maxpos[a])] -
                                q[static_cast<size_t>(maxpos[b])]));
    return out;
}

AspectFamilyReport aspect_family_dimension(const RamificationProblem& p, int k) {
    if (k < 0 || k > p.r) throw ConfigError("k must lie in [0, r]");
    AspectFamilyReport rep;
    const long rho = rho_moving(p);
    rep.dimension = (k == p.r) ? rho + p.r - 2 : rho + k - 1;
    if (rho + k - 1 < 0) {
        rep.nonexistent = true;
        return rep;
    }
    for (int t = 0; t <= rho + k - 1; ++t)
        rep.splits.push_back({t, rho + k - 1 - t, static_cast<long>(t) + p.r - k});
    return rep;
}

EnumerationSummary enumerate_summary(const FlagCurveConfig& cfg, const RamificationProblem& p,
                                     Placement placement, const EnumerationOptions& opts) {
    EnumerationSummary out;
    std::vector<ComponentId> comps;
    if (placement == Placement::Tails || placement == Placement::All)
        for (int j = 1; j <= cfg.g; ++j) comps.push_back({ComponentId::Kind::Tail, j, 0});
    if (placement == Placement::Rational || placement == Placement::All) {
        for (int j = 1; j <= cfg.g; ++j) comps.push_back({ComponentId::Kind::Backbone, j, 0});
        for (int j = 1; j <= cfg.g; ++j)
            for (int k = 1; k <= cfg.chain_lengths[static_cast<size_t>(j - 1)]; ++k)
                comps.push_back({ComponentId::Kind::Bridge, j, k});
    }
    for (const auto& comp : comps) {
        const auto states = enumerate_limit_series(cfg, p, comp, opts);
        out.states_per_component[comp.str()] = static_cast<long>(states.size());
        if (comp.kind == ComponentId::Kind::Tail) {
            out.tail_states += static_cast<long>(states.size());
            for (const auto& st : states) {
                const WindowReport rep = weight_window_check(st, p, comp.index);
                if (!rep.pass) out.all_windows_pass = false;
                for (int order : torsion_orders(st, p, comp.index))
                    out.torsion_per_tail[comp.str()].insert(order);
            }
        } else {
            out.rational_states += static_cast<long>(states.size());
        }
    }
    return out;
}

}  // namespace bn
