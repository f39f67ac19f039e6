#include "cyclesep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclesep/cage_nest.hpp"
#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/envelope.hpp"
#include "cyclesep/export.hpp"
#include "cyclesep/generators.hpp"
#include "cyclesep/separation.hpp"
#include "cyclesep/verify.hpp"

namespace cyclesep {

namespace {

using json = nlohmann::json;

Budget env_budget() {
    Budget b;
    if (const char* raw = std::getenv("CYCLESEP_BUDGET")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && cap > 0) b.cap = cap;
    }
    return b;
}

Embedding load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UsageError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return Embedding::from_text(buf.str());
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UsageError, "cannot open " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::UsageError, path + " is not valid JSON");
    return doc;
}

std::vector<VertexId> parse_vertex_list(const std::string& csv) {
    std::vector<VertexId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::UsageError, "bad vertex id: " + item);
        }
    }
    if (out.empty()) throw Error(ErrorKind::UsageError, "empty vertex list");
    return out;
}

// Deterministic listing of maximal cages between two poles: paths enumerate
// in canonical order, each seeds a greedy internally-disjoint family.
std::vector<Cage> list_cages(const Embedding& e, VertexId u, VertexId v, int max_len,
                             const Budget& budget) {
    std::vector<PathTuple> paths = enumerate_paths(e, u, v, max_len, budget);
    paths.erase(std::remove_if(paths.begin(), paths.end(),
                               [](const PathTuple& p) { return p.vertices.size() < 3; }),
                paths.end());
    auto compatible = [&](const PathTuple& a, const PathTuple& b) {
        std::set<VertexId> sa(a.vertices.begin(), a.vertices.end());
        int common = 0;
        for (VertexId x : b.vertices) {
            if (sa.count(x)) ++common;
        }
        return common == 2; // exactly the poles
    };
    std::vector<Cage> cages;
    std::set<std::set<std::vector<VertexId>>> seen;
    for (size_t seed = 0; seed < paths.size(); ++seed) {
        std::vector<PathTuple> family = {paths[seed]};
        for (size_t t = 0; t < paths.size(); ++t) {
            if (t == seed) continue;
            bool ok = true;
            for (const auto& p : family) {
                if (!compatible(p, paths[t])) {
                    ok = false;
                    break;
                }
            }
            if (ok) family.push_back(paths[t]);
        }
        if (family.size() < 3) continue;
        std::set<std::vector<VertexId>> key;
        for (const auto& p : family) {
            std::vector<VertexId> vs = p.vertices;
            if (vs.front() > vs.back()) std::reverse(vs.begin(), vs.end());
            key.insert(vs);
        }
        if (!seen.insert(key).second) continue;
        cages.push_back(std::get<Cage>(order_family(e, family)));
    }
    return cages;
}

json cage_to_json(const Cage& cage, int id) {
    json paths = json::array();
    for (const auto& p : cage.paths) paths.push_back(p.vertices);
    return json{{"id", id}, {"poles", {cage.pole_u, cage.pole_v}}, {"paths", paths}};
}

int cmd_check(const std::string& file, std::ostream& out) {
    Embedding e = load_file(file);
    out << json{{"vertices", e.vertex_count()},
                {"edges", e.edge_count()},
                {"faces", e.face_count()},
                {"genus", 0},
                {"coords", e.has_coords()},
                {"valid", true}}
               .dump()
        << "\n";
    return 0;
}

int cmd_faces(const std::string& file, std::ostream& out) {
    Embedding e = load_file(file);
    json faces = json::array();
    for (const auto& f : e.faces()) {
        json boundary = json::array();
        for (const auto& d : f.boundary) boundary.push_back(d.tail);
        faces.push_back(boundary);
    }
    out << json{{"faces", faces}}.dump() << "\n";
    return 0;
}

int cmd_separate(const std::string& file, VertexId a, VertexId b, const std::string& cycle_csv,
                 std::ostream& out) {
    Embedding e = load_file(file);
    std::vector<VertexId> raw = parse_vertex_list(cycle_csv);
    bool r = r_predicate(e, a, b, raw);
    out << (r ? "R=true" : "R=false") << "\n";

    json detail;
    detail["r"] = r;
    try {
        CycleTuple c = canonicalize_cycle(e, raw);
        auto sa = side_assignment(e, c);
        detail["cycle"] = c.canonical;
        detail["side0"] = sa->vertices_on(e, Side::Side0);
        detail["side1"] = sa->vertices_on(e, Side::Side1);
        auto describe = [&](VertexId x) -> std::string {
            Side s = sa->side_of(e, x);
            if (s == Side::OnCycle) return "on_cycle";
            return s == Side::Side0 ? "side0" : "side1";
        };
        detail["a_side"] = describe(a);
        detail["b_side"] = describe(b);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotACycle) throw;
        detail["cycle"] = nullptr;
        detail["note"] = "tuple is not a simple cycle";
    }
    out << detail.dump() << "\n";
    return 0;
}

int cmd_regions(const std::string& file, const std::string& support_csv, int max_len,
                std::ostream& out) {
    Embedding e = load_file(file);
    std::vector<VertexId> support = parse_vertex_list(support_csv);
    if (max_len <= 0) max_len = static_cast<int>(support.size());
    RegionPartition part = complementary_regions(e, support, max_len, env_budget());
    out << json{{"support", part.support}, {"classes", part.classes}}.dump() << "\n";
    return 0;
}

int cmd_cycles(const std::string& file, int max_len, const std::string& through_csv,
               std::ostream& out) {
    Embedding e = load_file(file);
    std::vector<VertexId> through;
    if (!through_csv.empty()) through = parse_vertex_list(through_csv);
    for (const auto& c : enumerate_cycles(e, max_len, through, env_budget())) {
        for (size_t i = 0; i < c.canonical.size(); ++i) {
            if (i) out << ",";
            out << c.canonical[i];
        }
        out << "\n";
    }
    return 0;
}

int cmd_cages(const std::string& file, const std::string& poles_csv, int max_len,
              std::ostream& out) {
    Embedding e = load_file(file);
    std::vector<VertexId> poles = parse_vertex_list(poles_csv);
    if (poles.size() != 2) throw Error(ErrorKind::UsageError, "--poles needs exactly two ids");
    json cages = json::array();
    auto found = list_cages(e, poles[0], poles[1], max_len, env_budget());
    for (size_t i = 0; i < found.size(); ++i) {
        cages.push_back(cage_to_json(found[i], static_cast<int>(i)));
    }
    out << json{{"cages", cages}}.dump() << "\n";
    return 0;
}

int cmd_fit(const std::string& file, const std::string& seq_csv, const std::string& poles_csv,
            int max_len, int cage_id, std::ostream& out) {
    Embedding e = load_file(file);
    std::vector<VertexId> seq = parse_vertex_list(seq_csv);
    std::vector<VertexId> poles = parse_vertex_list(poles_csv);
    if (poles.size() != 2) throw Error(ErrorKind::UsageError, "--poles needs exactly two ids");
    auto cages = list_cages(e, poles[0], poles[1], max_len, env_budget());
    if (cage_id < 0 || cage_id >= static_cast<int>(cages.size())) {
        throw Error(ErrorKind::UsageError,
                    "cage id out of range; `cages` listed " + std::to_string(cages.size()));
    }
    const Cage& cage = cages[static_cast<size_t>(cage_id)];
    FitResult fit = fits_into(e, seq, cage);

    json result;
    result["cage"] = cage_to_json(cage, cage_id);
    result["seq"] = seq;
    result["fits"] = fit.fits;
    if (fit.fits) {
        json regions = json::array();
        for (size_t l = 0; l + 1 < fit.witness.size(); ++l) {
            regions.push_back(json{{"region", {fit.witness[l], fit.witness[l + 1]}},
                                   {"element", seq[l]}});
        }
        result["witness"] = fit.witness;
        result["regions"] = regions;
    } else {
        result["witness"] = nullptr;
    }
    out << result.dump() << "\n";
    return 0;
}

int cmd_envelope(const std::string& file, const std::string& seq_csv, int max_len,
                 std::ostream& out) {
    Embedding e = load_file(file);
    MarkedSequence m{parse_vertex_list(seq_csv), max_len};
    EnvelopeData data = build_envelope(e, m, env_budget());

    json per_index = json::array();
    for (size_t j = 0; j < m.seq.size(); ++j) {
        json seps = json::array();
        for (const auto& c : data.separators[j]) seps.push_back(c.canonical);
        per_index.push_back(json{{"vertex", m.seq[j]},
                                 {"separators", seps},
                                 {"x_set", data.x_sets[j]},
                                 {"external", data.externals[j]},
                                 {"h_set", data.h_sets[j]},
                                 {"env", data.envs[j]}});
    }
    json result;
    result["seq"] = m.seq;
    result["max_len"] = m.max_len;
    result["indices"] = per_index;
    result["nod"] = data.nod ? json(*data.nod) : json(nullptr);
    result["diagnostics"] = json{{"nod_ambiguous", data.nod_ambiguous},
                                 {"env_depends_on_aux", data.env_depends_on_aux},
                                 {"separator_search_bound", m.max_len}};
    out << result.dump() << "\n";
    return 0;
}

int cmd_gen(const GeneratorConfig& cfg, std::ostream& out) {
    out << gen(cfg).document.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& property, int trials, std::uint64_t seed, bool corrupt,
               std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.budget = env_budget();
    opts.corrupt_sides = corrupt;
    PropertyReport report = verify(property, trials, seed, opts);
    out << report.to_json(corrupt).dump() << "\n";
    err << report.property << ": " << report.checks << " checks, " << report.failures.size()
        << " failures, " << report.elapsed_seconds << "s\n";
    return report.passed() ? 0 : 1;
}

int cmd_replay(const std::string& file, std::ostream& out) {
    json witness = read_json_file(file);
    std::vector<std::string> still_failing = replay(witness);
    json result;
    result["still_failing"] = still_failing;
    out << result.dump() << "\n";
    return still_failing.empty() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cycle separation structures on planar embeddings"};
    app.require_subcommand(1);

    std::string file, cycle_csv, support_csv, through_csv, seq_csv, poles_csv, property;
    VertexId a = 0, b = 0;
    int max_len = 12, cage_id = 0, trials = 200;
    std::uint64_t seed = 0;
    bool corrupt = false;

    auto* check = app.add_subcommand("check", "validate an embedding document");
    check->add_option("graph", file)->required();

    auto* faces = app.add_subcommand("faces", "list the faces of the embedding");
    faces->add_option("graph", file)->required();

    auto* separate = app.add_subcommand("separate", "evaluate the separation predicate");
    separate->add_option("graph", file)->required();
    separate->add_option("--a", a)->required();
    separate->add_option("--b", b)->required();
    separate->add_option("--cycle", cycle_csv)->required();

    auto* regions = app.add_subcommand("regions", "complementary regions of a support set");
    regions->add_option("graph", file)->required();
    regions->add_option("--support", support_csv)->required();
    int regions_max_len = 0;
    regions->add_option("--max-len", regions_max_len);

    auto* cycles = app.add_subcommand("cycles", "enumerate bounded-length simple cycles");
    cycles->add_option("graph", file)->required();
    cycles->add_option("--max-len", max_len);
    cycles->add_option("--through", through_csv);

    auto* cages = app.add_subcommand("cages", "list maximal cages between two poles");
    cages->add_option("graph", file)->required();
    cages->add_option("--poles", poles_csv)->required();
    cages->add_option("--max-len", max_len);

    auto* fit = app.add_subcommand("fit", "test whether a sequence fits into a cage");
    fit->add_option("graph", file)->required();
    fit->add_option("--seq", seq_csv)->required();
    fit->add_option("--poles", poles_csv)->required();
    fit->add_option("--max-len", max_len);
    fit->add_option("--cage-id", cage_id);

    auto* envelope = app.add_subcommand("envelope", "envelope data for a marked sequence");
    envelope->add_option("graph", file)->required();
    envelope->add_option("--seq", seq_csv)->required();
    envelope->add_option("--max-len", max_len);

    auto* gen_cmd = app.add_subcommand("gen", "generate a random planar instance");
    std::string kind = "stacked";
    GeneratorConfig cfg;
    bool no_coords = false;
    gen_cmd->add_option("--kind", kind, "stacked|onion|grapes|planted_cage");
    gen_cmd->add_option("--seed", cfg.seed);
    gen_cmd->add_option("--n", cfg.n);
    gen_cmd->add_option("--rings", cfg.rings);
    gen_cmd->add_option("--ring-size", cfg.ring_size);
    gen_cmd->add_option("--lobes", cfg.lobes);
    gen_cmd->add_option("--paths", cfg.cage_paths);
    gen_cmd->add_option("--path-len", cfg.path_len);
    gen_cmd->add_option("--spread", cfg.spread);
    gen_cmd->add_flag("--no-coords", no_coords);

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--property", property)->required();
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--corrupt-sides", corrupt,
                         "test fixture: inject a side-label bug");

    auto* replay_cmd = app.add_subcommand("replay", "re-run a recorded failure witness");
    replay_cmd->add_option("witness", file)->required();

    auto* export_dot = app.add_subcommand("export-dot", "emit the graph as DOT");
    export_dot->add_option("graph", file)->required();

    auto* export_svg = app.add_subcommand("export-svg", "emit the drawing as SVG");
    export_svg->add_option("graph", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    try {
        if (*check) return cmd_check(file, out);
        if (*faces) return cmd_faces(file, out);
        if (*separate) return cmd_separate(file, a, b, cycle_csv, out);
        if (*regions) return cmd_regions(file, support_csv, regions_max_len, out);
        if (*cycles) return cmd_cycles(file, max_len, through_csv, out);
        if (*cages) return cmd_cages(file, poles_csv, max_len, out);
        if (*fit) return cmd_fit(file, seq_csv, poles_csv, max_len, cage_id, out);
        if (*envelope) return cmd_envelope(file, seq_csv, max_len, out);
        if (*gen_cmd) {
            cfg.kind = gen_kind_from_string(kind);
            cfg.emit_coords = !no_coords;
            return cmd_gen(cfg, out);
        }
        if (*verify_cmd) return cmd_verify(property, trials, seed, corrupt, out, err);
        if (*replay_cmd) return cmd_replay(file, out);
        if (*export_dot) {
            out << to_dot(load_file(file));
            return 0;
        }
        if (*export_svg) {
            out << to_svg(load_file(file));
            return 0;
        }
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace cyclesep
