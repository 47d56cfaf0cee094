#include "homhom/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "homhom/census.hpp"
#include "homhom/classifier.hpp"
#include "homhom/configurations.hpp"
#include "homhom/embedding.hpp"
#include "homhom/homogeneity.hpp"
#include "homhom/io.hpp"
#include "homhom/localorder.hpp"
#include "homhom/version.hpp"

namespace homhom::cli {

namespace {

constexpr int kPhBound = 2; // powers checked by `check`

const char* kUsage =
    "usage: homhom <command> [options]\n"
    "\n"
    "commands:\n"
    "  check [--explain] [--json] <file.ogr>   HH verdict, witness, PH-up-to-2, core order\n"
    "  census --nmax N --out PATH [--predicates hh,ph2,homog,tournament,localorder]\n"
    "         [--format csv|json] [--workers W]\n"
    "  power <file.ogr> <n>                    n-th direct power\n"
    "  blowup <file.ogr> <m1,...,mk>           blow-up by per-vertex multiplicities\n"
    "  core <file.ogr>                         core as .ogr\n"
    "  witness <file.ogr>                      first witness, exit 1 when none\n"
    "  encode <file.ogr>                       word (tournaments) or sigma-word\n"
    "  decode <word>                           .ogr of a word like 0101 or 1:1 0:1 1:2\n"
    "  config <name|An:k|Bn:k|S:m|Ln:k>        catalog graph as .ogr\n"
    "\n"
    "exit codes: 0 success or decision \"yes\", 1 decision \"no\", 2 errors.\n"
    "HOMHOM_SIZE_CAP=<v> raises/lowers the default size caps.\n";

SizeCaps caps_from_env() {
    SizeCaps caps;
    if (const char* v = std::getenv("HOMHOM_SIZE_CAP")) {
        int cap = std::atoi(v);
        if (cap >= 1) {
            caps.general = cap;
            caps.canonical = cap;
            caps.power_order = std::max(caps.power_order, cap);
        }
    }
    return caps;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string s = "[";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

int cmd_check(const std::vector<std::string>& args, std::ostream& out, const SizeCaps& caps) {
    bool want_json = false, want_explain = false;
    std::string file;
    for (const auto& a : args) {
        if (a == "--json")
            want_json = true;
        else if (a == "--explain")
            want_explain = true;
        else if (!a.empty() && a[0] == '-')
            fail(Errc::bad_argument, "unknown flag " + a);
        else if (file.empty())
            file = a;
        else
            fail(Errc::bad_argument, "extra argument " + a);
    }
    if (file.empty()) fail(Errc::bad_argument, "check needs a file");

    OrientedGraph g = read_ogr_file(file);
    auto witness = find_witness(g, caps);
    bool hh = !witness.has_value();
    bool ph = hh && is_ph_up_to(g, kPhBound, caps);
    OrientedGraph core = compute_core(g, caps);
    HHLabel label = classify_hh_finite(g, caps);
    auto krefut = refute_ph_via_K(g);

    if (want_json) {
        nlohmann::json j;
        j["file"] = file;
        j["order"] = g.order();
        j["arc_count"] = g.arc_count();
        j["hh"] = hh;
        if (witness) {
            j["witness"] = {{"v", witness->v},
                            {"domain", witness->domain},
                            {"image", witness->image}};
        } else {
            j["witness"] = nullptr;
        }
        j["ph_up_to"] = {{"n", kPhBound}, {"holds", ph}};
        j["core_order"] = core.order();
        j["label"] = describe(label);
        if (krefut) {
            j["ph_refutation"] = {
                {"k", std::vector<Vertex>(krefut->k.begin(), krefut->k.end())},
                {"square_path",
                 std::vector<Vertex>(krefut->square_path.begin(), krefut->square_path.end())}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << "order: " << g.order() << "\n";
        out << "arcs: " << g.arc_count() << "\n";
        out << "hh: " << (hh ? "yes" : "no") << "\n";
        if (witness)
            out << "witness: v=" << witness->v << " A=" << vertex_list(witness->domain)
                << " image=" << vertex_list(witness->image) << "\n";
        else
            out << "witness: none\n";
        out << "ph_up_to_" << kPhBound << ": " << (ph ? "yes" : "no") << "\n";
        out << "core_order: " << core.order() << "\n";
        if (want_explain) {
            out << "label: " << describe(label) << "\n";
            if (krefut)
                out << "ph_refutation: K at " << krefut->k[0] << "," << krefut->k[1] << ","
                    << krefut->k[2] << "," << krefut->k[3] << " square 2-path "
                    << krefut->square_path[0] << "->" << krefut->square_path[1] << "->"
                    << krefut->square_path[2] << "\n";
        }
    }
    return hh ? 0 : 1;
}

int cmd_census(const std::vector<std::string>& args, std::ostream& out, const SizeCaps& caps) {
    CliConfig cfg;
    cfg.caps = caps;
    cfg.nmax = 0;
    for (size_t i = 0; i < args.size(); ++i) {
        auto need_value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                fail(Errc::bad_argument, std::string(flag) + " needs a value");
            return args[++i];
        };
        if (args[i] == "--nmax")
            cfg.nmax = std::atoi(need_value("--nmax").c_str());
        else if (args[i] == "--predicates")
            cfg.predicates = split(need_value("--predicates"), ',');
        else if (args[i] == "--out")
            cfg.out_path = need_value("--out");
        else if (args[i] == "--format")
            cfg.format = need_value("--format");
        else if (args[i] == "--workers")
            cfg.workers = std::atoi(need_value("--workers").c_str());
        else
            fail(Errc::bad_argument, "unknown census argument " + args[i]);
    }
    if (cfg.nmax < 1) fail(Errc::bad_argument, "census needs --nmax N (N >= 1)");
    if (cfg.out_path.empty()) fail(Errc::bad_argument, "census needs --out PATH");
    CensusReport rep = run_census(cfg);
    for (const auto& row : rep.rows) {
        out << "n=" << row.n << " total=" << row.total;
        for (size_t p = 0; p < rep.predicates.size(); ++p)
            out << " " << rep.predicates[p] << "=" << row.counts[p];
        out << "\n";
    }
    out << "report written to " << cfg.out_path << "\n";
    return 0;
}

int cmd_config(const std::string& name, std::ostream& out) {
    if (auto c = config_from_string(name)) {
        out << write_ogr(get_config(*c));
        return 0;
    }
    if (name == "C3") {
        out << write_ogr(cycle_c3());
        return 0;
    }
    auto parts = split(name, ':');
    if (parts.size() == 2) {
        int k = std::atoi(parts[1].c_str());
        if (parts[0] == "An") {
            out << write_ogr(henson_A(k));
            return 0;
        }
        if (parts[0] == "Bn") {
            out << write_ogr(henson_B(k));
            return 0;
        }
        if (parts[0] == "S") {
            out << write_ogr(circular_tournament(k));
            return 0;
        }
        if (parts[0] == "Ln") {
            out << write_ogr(transitive_tournament(k));
            return 0;
        }
    }
    fail(Errc::bad_argument, "unknown configuration " + name);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        (args.empty() ? err : out) << kUsage;
        return args.empty() ? 2 : 0;
    }
    SizeCaps caps = caps_from_env();
    const std::string& cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());

    if (cmd == "check") return cmd_check(rest, out, caps);
    if (cmd == "census") return cmd_census(rest, out, caps);

    if (cmd == "power") {
        if (rest.size() != 2) fail(Errc::bad_argument, "power needs <file> <n>");
        out << write_ogr(direct_power(read_ogr_file(rest[0]), std::atoi(rest[1].c_str()), caps));
        return 0;
    }
    if (cmd == "blowup") {
        if (rest.size() != 2) fail(Errc::bad_argument, "blowup needs <file> <m1,...,mk>");
        Multiplicity m;
        for (const auto& tok : split(rest[1], ',')) m.push_back(std::atoi(tok.c_str()));
        out << write_ogr(blowup(read_ogr_file(rest[0]), m));
        return 0;
    }
    if (cmd == "core") {
        if (rest.size() != 1) fail(Errc::bad_argument, "core needs <file>");
        out << write_ogr(compute_core(read_ogr_file(rest[0]), caps));
        return 0;
    }
    if (cmd == "witness") {
        if (rest.size() != 1) fail(Errc::bad_argument, "witness needs <file>");
        auto w = find_witness(read_ogr_file(rest[0]), caps);
        if (!w) {
            out << "no witness (homomorphism homogeneous)\n";
            return 1;
        }
        out << "witness: v=" << w->v << " A=" << vertex_list(w->domain)
            << " image=" << vertex_list(w->image) << "\n";
        return 0;
    }
    if (cmd == "encode") {
        if (rest.size() != 1) fail(Errc::bad_argument, "encode needs <file>");
        OrientedGraph g = read_ogr_file(rest[0]);
        if (is_tournament(g)) {
            auto w = tournament_to_word(g);
            if (!w) {
                out << "not encodable: not a local order\n";
                return 1;
            }
            out << *w << "\n";
            return 0;
        }
        auto sw = graph_to_sigma_word(g);
        if (auto* ne = std::get_if<NotEncodable>(&sw)) {
            out << "not encodable: " << ne->reason << "\n";
            return 1;
        }
        out << to_string(std::get<SigmaWord>(sw)) << "\n";
        return 0;
    }
    if (cmd == "decode") {
        if (rest.empty()) fail(Errc::bad_argument, "decode needs a word");
        std::string text = rest[0];
        for (size_t i = 1; i < rest.size(); ++i) text += " " + rest[i];
        if (text.find(':') != std::string::npos)
            out << write_ogr(sigma_word_to_graph(parse_sigma_word(text)));
        else
            out << write_ogr(word_to_tournament(text));
        return 0;
    }
    if (cmd == "config") {
        if (rest.size() != 1) fail(Errc::bad_argument, "config needs a name");
        return cmd_config(rest[0], out);
    }

    err << "unknown command: " << cmd << "\n" << kUsage;
    return 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace homhom::cli
