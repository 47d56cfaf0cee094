#include "homhom/census.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "homhom/homogeneity.hpp"
#include "homhom/localorder.hpp"
#include "homhom/version.hpp"

namespace homhom {

const char* const kCensusPredicates[5] = {"hh", "ph2", "homog", "tournament", "localorder"};

namespace {

constexpr int kHardCensusCap = 7;

int checked_level(int n, const SizeCaps& caps) {
    if (n < 1) fail(Errc::bad_argument, "census level must be >= 1");
    if (n > caps.census || n > kHardCensusCap)
        fail(Errc::size_cap_exceeded,
             "enumeration capped at " + std::to_string(std::min(caps.census, kHardCensusCap)) +
                 " vertices");
    return n;
}

void form_to_rows(const CanonicalForm& cf, uint16_t* rows) {
    for (int p = 0; p < cf.order; ++p) {
        rows[p] = 0;
        for (int q = 0; q < cf.order; ++q)
            if (p != q && cf.bit(p, q)) rows[p] |= uint16_t(1) << q;
    }
}

// Children of one parent under all single-vertex extensions, deduplicated
// within the parent to keep the level buffers small. `tournaments` restricts
// the extension patterns to complete ones.
void children_of(const CanonicalForm& parent, bool tournaments,
                 std::vector<CanonicalForm>& out) {
    int k = parent.order + 1;
    uint16_t rows[12];
    form_to_rows(parent, rows);
    rows[k - 1] = 0;

    size_t before = out.size();
    long long patterns = 1;
    for (int i = 0; i < k - 1; ++i) patterns *= tournaments ? 2 : 3;
    std::vector<int> digit(k - 1, 0);
    for (long long e = 0; e < patterns; ++e) {
        long long x = e;
        for (int i = 0; i < k - 1; ++i) {
            digit[i] = x % (tournaments ? 2 : 3);
            x /= tournaments ? 2 : 3;
        }
        uint16_t child[12];
        std::copy(rows, rows + k, child);
        for (int i = 0; i < k - 1; ++i) {
            int d = tournaments ? digit[i] + 1 : digit[i];
            if (d == 1) child[i] |= uint16_t(1) << (k - 1);
            if (d == 2) child[k - 1] |= uint16_t(1) << i;
        }
        out.push_back(canonical_form_rows(child, k));
    }
    std::sort(out.begin() + before, out.end());
    out.erase(std::unique(out.begin() + before, out.end()), out.end());
}

std::vector<CanonicalForm> level_up(const std::vector<CanonicalForm>& parents, bool tournaments,
                                    int workers) {
    std::vector<std::vector<CanonicalForm>> local((size_t)std::max(workers, 1));
    auto work = [&](int t) {
        for (size_t i = t; i < parents.size(); i += workers)
            children_of(parents[i], tournaments, local[t]);
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::vector<CanonicalForm> merged;
    for (auto& v : local) {
        merged.insert(merged.end(), v.begin(), v.end());
        v.clear();
        v.shrink_to_fit();
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

std::vector<CanonicalForm> enumerate_impl(int n, bool tournaments, int workers) {
    std::vector<CanonicalForm> level{CanonicalForm{1, {0, 0}}};
    for (int k = 2; k <= n; ++k) level = level_up(level, tournaments, workers);
    return level;
}

} // namespace

std::vector<CanonicalForm> enumerate_classes(int n, const SizeCaps& caps, int workers) {
    checked_level(n, caps);
    return enumerate_impl(n, false, workers);
}

std::vector<CanonicalForm> enumerate_tournament_classes(int n, const SizeCaps& caps) {
    checked_level(n, caps);
    return enumerate_impl(n, true, 1);
}

void enumerate_oriented_graphs(int n, const SizeCaps& caps,
                               const std::function<void(const OrientedGraph&)>& sink) {
    for (const CanonicalForm& cf : enumerate_classes(n, caps)) sink(canonical_graph(cf));
}

std::vector<OrientedGraph> enumerate_oriented_graphs(int n, const SizeCaps& caps) {
    std::vector<OrientedGraph> out;
    enumerate_oriented_graphs(n, caps, [&](const OrientedGraph& g) { out.push_back(g); });
    return out;
}

std::vector<CanonicalForm> enumerate_classes_naive(int n) {
    if (n < 1 || n > 5) fail(Errc::size_cap_exceeded, "naive enumeration only up to 5 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    long long total = 1;
    for (size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<CanonicalForm> keys;
    keys.reserve(total);
    for (long long e = 0; e < total; ++e) {
        uint16_t rows[6] = {};
        long long x = e;
        for (auto [i, j] : pairs) {
            int d = x % 3;
            x /= 3;
            if (d == 1) rows[i] |= uint16_t(1) << j;
            if (d == 2) rows[j] |= uint16_t(1) << i;
        }
        keys.push_back(canonical_form_rows(rows, n));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

namespace {

bool eval_predicate(const std::string& name, const OrientedGraph& g, const SizeCaps& caps) {
    if (name == "hh") return is_hh(g, caps);
    if (name == "ph2") return is_ph_up_to(g, 2, caps);
    if (name == "homog") return is_homogeneous(g, caps);
    if (name == "tournament") return is_tournament(g);
    if (name == "localorder") return is_tournament(g) && is_local_order(g);
    fail(Errc::bad_argument, "unknown predicate " + name);
}

std::string caps_line(const SizeCaps& c) {
    return "general=" + std::to_string(c.general) + " canonical=" + std::to_string(c.canonical) +
           " power=" + std::to_string(c.power_order) + " census=" + std::to_string(c.census);
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Errc::io_error, "cannot open " + tmp);
        out << content;
        if (!out.flush()) fail(Errc::io_error, "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(Errc::io_error, "cannot move report into place at " + path);
}

} // namespace

CensusReport run_census(const CliConfig& cfg) {
    checked_level(cfg.nmax, cfg.caps);
    if (cfg.workers < 1) fail(Errc::bad_argument, "workers must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        fail(Errc::bad_argument, "format must be csv or json");
    if (cfg.predicates.empty()) fail(Errc::bad_argument, "no predicates selected");
    for (const auto& p : cfg.predicates) {
        bool known = false;
        for (const char* k : kCensusPredicates) known = known || p == k;
        if (!known) fail(Errc::bad_argument, "unknown predicate " + p);
    }

    CensusReport rep;
    rep.version = kVersion;
    rep.caps = cfg.caps;
    rep.predicates = cfg.predicates;

    bool want_hh_list =
        std::find(cfg.predicates.begin(), cfg.predicates.end(), "hh") != cfg.predicates.end();

    for (int n = 1; n <= cfg.nmax; ++n) {
        std::vector<CanonicalForm> classes = enumerate_classes(n, cfg.caps, cfg.workers);
        size_t m = classes.size();
        std::vector<std::vector<uint8_t>> bits(cfg.predicates.size(),
                                               std::vector<uint8_t>(m, 0));
        auto work = [&](int t) {
            for (size_t i = t; i < m; i += cfg.workers) {
                OrientedGraph g = canonical_graph(classes[i]);
                for (size_t p = 0; p < cfg.predicates.size(); ++p)
                    bits[p][i] = eval_predicate(cfg.predicates[p], g, cfg.caps) ? 1 : 0;
            }
        };
        if (cfg.workers <= 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < cfg.workers; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }

        CensusRow row;
        row.n = n;
        row.total = (long long)m;
        for (size_t p = 0; p < cfg.predicates.size(); ++p) {
            long long c = 0;
            for (uint8_t b : bits[p]) c += b;
            row.counts.push_back(c);
        }
        rep.rows.push_back(row);

        if (want_hh_list) {
            size_t hh_idx = std::find(cfg.predicates.begin(), cfg.predicates.end(), "hh") -
                            cfg.predicates.begin();
            std::vector<std::string>& forms = rep.hh_forms[n];
            for (size_t i = 0; i < m; ++i)
                if (bits[hh_idx][i]) forms.push_back(to_string(classes[i]));
        }
    }

    if (!cfg.out_path.empty())
        write_atomic(cfg.out_path, cfg.format == "csv" ? render_csv(rep) : render_json(rep));
    return rep;
}

std::string render_csv(const CensusReport& r) {
    std::string s;
    s += "# homhom " + r.version + "\n";
    s += "# caps " + caps_line(r.caps) + "\n";
    s += "n,total";
    for (const auto& p : r.predicates) s += "," + p;
    s += "\n";
    for (const auto& row : r.rows) {
        s += std::to_string(row.n) + "," + std::to_string(row.total);
        for (long long c : row.counts) s += "," + std::to_string(c);
        s += "\n";
    }
    for (const auto& [n, forms] : r.hh_forms)
        for (const auto& f : forms) s += "# hh " + std::to_string(n) + " " + f + "\n";
    return s;
}

std::string render_json(const CensusReport& r) {
    nlohmann::json j;
    j["version"] = r.version;
    j["caps"] = {{"general", r.caps.general},
                 {"canonical", r.caps.canonical},
                 {"power", r.caps.power_order},
                 {"census", r.caps.census}};
    j["predicates"] = r.predicates;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json rj;
        rj["n"] = row.n;
        rj["total"] = row.total;
        for (size_t p = 0; p < r.predicates.size(); ++p) rj["counts"][r.predicates[p]] = row.counts[p];
        j["rows"].push_back(rj);
    }
    for (const auto& [n, forms] : r.hh_forms) j["hh_graphs"][std::to_string(n)] = forms;
    return j.dump(2) + "\n";
}

} // namespace homhom
