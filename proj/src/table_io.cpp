#include "bn/table_io.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bn/errors.hpp"

namespace bn {

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "g,d,s,t,count\n";
    for (const auto& r : rows)
        os << r.g << "," << r.d << "," << r.s << "," << r.t << "," << r.count.str() << "\n";
    return os.str();
}

std::vector<TableRow> table_from_csv(const std::string& csv) {
    std::vector<TableRow> rows;
    std::istringstream is(csv);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            if (line != "g,d,s,t,count") throw ConfigError("unexpected CSV header: " + line);
            header = false;
            continue;
        }
        TableRow r;
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        r.g = std::stoi(field);
        std::getline(ls, field, ',');
        r.d = std::stoi(field);
        std::getline(ls, field, ',');
        r.s = std::stoi(field);
        std::getline(ls, field, ',');
        r.t = std::stoi(field);
        std::getline(ls, field, ',');
        r.count = Int(field);
        rows.push_back(r);
    }
    return rows;
}

std::string table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"g", r.g}, {"d", r.d}, {"s", r.s}, {"t", r.t}, {"count", r.count.str()}});
    }
    return arr.dump(2) + "\n";
}

int max_threads_from_env() {
    if (const char* env = std::getenv("BN_MAX_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<TableRow> rho_zero_rows_parallel(int d_offset, int max_g) {
    if (d_offset != 1 && d_offset != 2) throw ConfigError("d offset must be 1 or 2");
    struct Item {
        int g, d, s, t;
    };
    std::vector<Item> items;
    for (int g = 1; g <= max_g; ++g) {
        const int d = g + d_offset;
        const int st = g + 3 * d_offset - 2;
        for (int s = 1; 2 * s < st; ++s) {
            const int t = st - s;
            if (t > d) continue;
            items.push_back({g, d, s, t});
        }
    }
    std::vector<TableRow> rows(items.size());
    const int workers =
        std::min(max_threads_from_env(), static_cast<int>(std::max<size_t>(items.size(), 1)));
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            const Item& it = items[i];
            RamificationProblem p{it.g, 2, it.d, {it.t, it.s, 0}, std::nullopt};
            ClassResult cls = wrd_symbolic(p);
            if (!cls.count) throw InternalError("rho-zero row without a count");
            rows[i] = {it.g, it.d, it.s, it.t, *cls.count};
        }
    };
    for (int w = 0; w < workers; ++w) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    return rows;
}

}  // namespace bn
