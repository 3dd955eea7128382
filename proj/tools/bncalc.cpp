// Command-line front end: single-instance queries, expected-dimension
// reports, table sweeps, limit-series enumeration, and plane-model audits.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bn/brill_noether.hpp"
#include "bn/errors.hpp"
#include "bn/limit_series.hpp"
#include "bn/plane_curve.hpp"
#include "bn/table_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitBudgetOrIo = 3;

std::vector<int> parse_m(const std::string& spec) {
    std::vector<int> m;
    std::istringstream is(spec);
    std::string field;
    while (std::getline(is, field, ',')) {
        if (field.empty()) throw bn::InvalidMultiplicity("empty entry in multiplicity list");
        m.push_back(std::stoi(field));
    }
    if (m.empty()) throw bn::InvalidMultiplicity("empty multiplicity list");
    return m;
}

std::vector<std::vector<int>> parse_point_lists(const std::string& spec) {
    std::vector<std::vector<int>> out;
    std::istringstream is(spec);
    std::string group;
    while (std::getline(is, group, ';'))
        if (!group.empty()) out.push_back(parse_m(group));
    return out;
}

std::string describe(const bn::ClassResult& res) {
    std::ostringstream os;
    if (res.vacuous) return "class of the whole space (no effective condition)";
    os << "theta^" << res.theta_exponent << " * " << bn::to_string(res.coefficient);
    if (res.truncated) os << "  [vanishes: exponent beyond the genus]";
    if (res.count) os << ", count = " << res.count->str();
    return os.str();
}

nlohmann::json class_json(const bn::RamificationProblem& p, const bn::ClassResult& res) {
    nlohmann::json j;
    j["theta_exponent"] = res.theta_exponent;
    j["coefficient_num"] = bn::rational_num(res.coefficient).str();
    j["coefficient_den"] = bn::rational_den(res.coefficient).str();
    j["count"] = res.count ? nlohmann::json(res.count->str()) : nlohmann::json(nullptr);
    j["vacuous"] = res.vacuous;
    (void)p;
    return j;
}

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path " << path << "\n";
        return kExitBudgetOrIo;
    }
    out << payload;
    if (!out) {
        std::cerr << "error: failed writing " << path << "\n";
        return kExitBudgetOrIo;
    }
    return kExitOk;
}

struct InstanceArgs {
    int g = 0, r = 0, d = 0;
    std::string m_spec;
    std::optional<int> twist;

    bn::RamificationProblem problem() const {
        bn::RamificationProblem p{g, r, d, parse_m(m_spec), twist};
        p.validate();
        return p;
    }
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& args, bool with_r = true) {
    cmd->add_option("--g", args.g, "genus")->required();
    if (with_r) cmd->add_option("--r", args.r, "projective dimension")->required();
    cmd->add_option("--d", args.d, "degree")->required();
    cmd->add_option("--m", args.m_spec, "vanishing sequence, comma separated, decreasing")
        ->required();
}

int cmd_rho(const InstanceArgs& args, const std::string& fixed_points) {
    const bn::RamificationProblem p = args.problem();
    std::cout << "rho_classical = " << bn::rho_classical(p.g, p.r, p.d) << "\n";
    std::cout << "rho_moving   = " << bn::rho_moving(p) << "\n";
    if (!fixed_points.empty())
        std::cout << "rho_fixed    = "
                  << bn::rho_fixed(p.g, p.r, p.d, parse_point_lists(fixed_points)) << "\n";
    const bn::BoundResult b = bn::dimension_bound(p);
    std::cout << "k            = " << b.k << "\n";
    std::cout << "bound        = " << b.bound;
    if (b.strong_nonexistence)
        std::cout << "  (no such series: rho < 1 - r)";
    else if (b.nonexistence)
        std::cout << "  (nonexistence signal: negative bound)";
    else if (b.bound == 0)
        std::cout << "  (finite or empty)";
    std::cout << "\n";
    if (b.convention_sensitive)
        std::cout << "note: k = 0 by convention; reading k = 1 would change the verdict\n";
    return kExitOk;
}

int cmd_bound(const InstanceArgs& args) {
    const bn::RamificationProblem p = args.problem();
    const bn::BoundResult b = bn::dimension_bound(p);
    std::cout << "rho = " << b.rho << ", k = " << b.k << ", bound = " << b.bound << "\n";
    if (b.strong_nonexistence)
        std::cout << "verdict: nonexistence (rho < 1 - r)\n";
    else if (b.nonexistence)
        std::cout << "verdict: nonexistence signal (negative bound)\n";
    else if (b.bound == 0)
        std::cout << "verdict: at most finitely many\n";
    else
        std::cout << "verdict: dimension at most " << b.bound << "\n";
    if (b.convention_sensitive)
        std::cout << "note: k = 0 by convention; reading k = 1 would change the verdict\n";
    return kExitOk;
}

int cmd_class(const InstanceArgs& args, const std::string& path_choice,
              const std::string& format, const std::string& out_path) {
    const bn::RamificationProblem p = args.problem();
    std::optional<bn::ClassResult> closed, symbolic;
    bool disagree = false;
    std::string warning;

    if (path_choice == "closed") {
        closed = bn::wrd_closed_form(p);
    } else if (path_choice == "symbolic") {
        symbolic = bn::wrd_symbolic(p);
    } else {
        const bn::ExistenceResult ex = bn::existence(p);
        closed = ex.closed;
        symbolic = ex.symbolic;
        if (!ex.paths_agree) {
            disagree = true;
            warning = ex.disagreement;
        }
    }
    const bn::ClassResult& primary = symbolic ? *symbolic : *closed;
    const bool exists = primary.vacuous || !primary.is_zero();

    if (format == "json") {
        nlohmann::json j;
        j["instance"] = {{"g", p.g}, {"r", p.r}, {"d", p.d}, {"m", p.m}};
        j["rho"] = bn::rho_moving(p);
        j["class"] = class_json(p, primary);
        j["existence"] = exists;
        const bn::BoundResult b = bn::dimension_bound(p);
        j["bounds"] = {{"k", b.k},
                       {"bound", b.bound},
                       {"nonexistence", b.nonexistence},
                       {"strong_nonexistence", b.strong_nonexistence}};
        j["warnings"] = nlohmann::json::array();
        if (disagree) j["warnings"].push_back("cross-path disagreement: " + warning);
        if (primary.vacuous) j["warnings"].push_back("all conditions vacuous");
        const int rc = write_output(out_path, j.dump(2) + "\n");
        if (rc != kExitOk) return rc;
    } else {
        std::cout << "instance: g=" << p.g << " r=" << p.r << " d=" << p.d << " m=";
        for (size_t i = 0; i < p.m.size(); ++i) std::cout << (i ? "," : "") << p.m[i];
        std::cout << "\n";
        std::cout << "rho_moving = " << bn::rho_moving(p) << "\n";
        if (closed) std::cout << "closed form : " << describe(*closed) << "\n";
        if (symbolic) std::cout << "symbolic    : " << describe(*symbolic) << "\n";
        std::cout << "existence   : " << (exists ? "yes" : "no") << "\n";
        if (primary.vacuous)
            std::cout << "notice: every condition is vacuous for these parameters\n";
        if (disagree)
            std::cout << "WARNING: the two paths disagree: " << warning << "\n";
    }
    return disagree ? kExitDisagreement : kExitOk;
}

int cmd_table(int d_offset, int max_g, const std::string& format, const std::string& out_path) {
    const std::vector<bn::TableRow> rows = bn::rho_zero_rows_parallel(d_offset, max_g);
    const std::string payload =
        (format == "json") ? bn::table_to_json(rows) : bn::table_to_csv(rows);
    return write_output(out_path, payload);
}

int cmd_limit_enum(const InstanceArgs& args, const std::string& placement_str,
                   const std::string& chain_spec, long max_states) {
    const bn::RamificationProblem p = args.problem();
    bn::FlagCurveConfig cfg = bn::FlagCurveConfig::standard(p.g);
    if (!chain_spec.empty()) {
        cfg.chain_lengths = parse_m(chain_spec);
        if (static_cast<int>(cfg.chain_lengths.size()) != p.g)
            throw bn::ConfigError("need one chain length per tail");
    }
    bn::Placement placement = bn::Placement::All;
    if (placement_str == "tails") placement = bn::Placement::Tails;
    else if (placement_str == "rational") placement = bn::Placement::Rational;
    else if (placement_str != "all") throw bn::ConfigError("placement must be tails|rational|all");

    bn::EnumerationOptions opts;
    opts.max_states = max_states;
    const bn::EnumerationSummary sum = bn::enumerate_summary(cfg, p, placement, opts);

    std::cout << "rho_moving = " << bn::rho_moving(p) << "\n";
    for (const auto& [comp, n] : sum.states_per_component)
        std::cout << "states on " << comp << ": " << n << "\n";
    std::cout << "tail states    : " << sum.tail_states << "\n";
    std::cout << "rational states: " << sum.rational_states << "\n";
    if (sum.tail_states > 0)
        std::cout << "weight window  : " << (sum.all_windows_pass ? "all pass" : "VIOLATED")
                  << "\n";
    for (const auto& [tail, orders] : sum.torsion_per_tail) {
        std::cout << "torsion orders on " << tail << ":";
        for (int o : orders) std::cout << " " << o;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_plane_audit(const InstanceArgs& args) {
    bn::RamificationProblem p = args.problem();
    p.r = 2;
    const bn::PlaneAudit audit = bn::dimension_audit(p);
    std::cout << "normalized m : " << audit.normalized_m[0] << "," << audit.normalized_m[1]
              << ",0\n";
    std::cout << "rho          : " << audit.rho << "\n";
    if (!audit.feasible) {
        std::cout << "infeasible: no plane model of this degree and genus\n";
        return kExitOk;
    }
    std::cout << "nodes        : " << audit.nodes << "\n";
    std::cout << "family dim   : " << audit.family_dim << " (3d-1+g); rho form "
              << audit.family_dim_rho_form << "\n";
    std::cout << "with ramified point: " << audit.ramified_total << " (quoted), "
              << audit.ramified_total_exact << " (exact ledger)\n";
    std::cout << "fiber threshold    : " << audit.fiber_threshold << " over moduli dim "
              << audit.moduli_dim << "\n";
    std::cout << "positive-dimensional family: "
              << (audit.nonexistence_positive_family ? "impossible" : "not excluded") << "\n";
    if (audit.resolution_applies) {
        std::cout << "resolution steps:";
        for (const auto& step : audit.resolution.steps) {
            switch (step.kind) {
                case bn::ResolutionStep::Kind::MultiplePoint:
                    std::cout << " m" << step.multiplicity;
                    break;
                case bn::ResolutionStep::Kind::Inflection: std::cout << " flex"; break;
                case bn::ResolutionStep::Kind::FreeParameter: std::cout << " free"; break;
            }
        }
        std::cout << "\n";
        std::cout << "gross loss " << audit.resolution.gross_loss << ", net "
                  << audit.resolution.net_loss << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for linear series with a moving ramification point"};
    app.require_subcommand(1);

    InstanceArgs rho_args;
    std::string fixed_points;
    CLI::App* rho = app.add_subcommand("rho", "expected-dimension numbers and bounds");
    add_instance_flags(rho, rho_args);
    rho->add_option("--fixed-points", fixed_points,
                    "extra fixed-point sequences, e.g. \"2,0;3,1,0\"");

    InstanceArgs class_args;
    std::string path_choice = "both", class_format = "text", class_out;
    CLI::App* cls = app.add_subcommand("class", "ramification class, count and existence");
    add_instance_flags(cls, class_args);
    cls->add_option("--path", path_choice, "closed|symbolic|both")
        ->check(CLI::IsMember({"closed", "symbolic", "both"}));
    cls->add_option("--format", class_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cls->add_option("--out", class_out, "output path (stdout when omitted)");

    int d_offset = 2, max_g = 9;
    std::string table_format = "csv", table_out;
    CLI::App* table = app.add_subcommand("table", "expected-dimension-zero count table, r = 2");
    table->add_option("--d-offset", d_offset, "1 for d=g+1, 2 for d=g+2")
        ->check(CLI::IsMember({1, 2}));
    table->add_option("--max-g", max_g, "largest genus");
    table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_out, "output path (stdout when omitted)");

    InstanceArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "dimension bound from shared factors");
    add_instance_flags(bound, bound_args);

    InstanceArgs enum_args;
    std::string placement = "all", chains;
    long max_states = 200000;
    CLI::App* lim = app.add_subcommand("limit-enum", "flag-curve limit-series enumeration");
    add_instance_flags(lim, enum_args);
    lim->add_option("--q-placement", placement, "tails|rational|all")
        ->check(CLI::IsMember({"tails", "rational", "all"}));
    lim->add_option("--chain-lengths", chains, "bridge chain lengths, comma separated");
    lim->add_option("--max-states", max_states, "refuse beyond this many states");

    InstanceArgs plane_args;
    CLI::App* plane = app.add_subcommand("plane-audit", "dimension audit via plane models, r = 2");
    add_instance_flags(plane, plane_args, /*with_r=*/false);
    plane_args.r = 2;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rho->parsed()) return cmd_rho(rho_args, fixed_points);
        if (cls->parsed()) return cmd_class(class_args, path_choice, class_format, class_out);
        if (table->parsed()) return cmd_table(d_offset, max_g, table_format, table_out);
        if (bound->parsed()) return cmd_bound(bound_args);
        if (lim->parsed()) return cmd_limit_enum(enum_args, placement, chains, max_states);
        if (plane->parsed()) return cmd_plane_audit(plane_args);
    } catch (const bn::BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudgetOrIo;
    } catch (const bn::InternalError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
