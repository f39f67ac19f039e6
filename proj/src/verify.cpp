#include "cyclesep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "cyclesep/cage_nest.hpp"
#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/envelope.hpp"
#include "cyclesep/generators.hpp"
#include "cyclesep/oracle.hpp"
#include "cyclesep/rng.hpp"
#include "cyclesep/separation.hpp"

namespace cyclesep {

namespace {

using json = nlohmann::json;

using CheckFn =
    std::function<std::optional<std::string>(const Embedding&, const json&, const VerifyOptions&)>;

struct Recorder; // below

struct PropertyDef {
    std::string id;
    std::function<void(std::uint64_t, int, const VerifyOptions&, Recorder&)> run;
    CheckFn check;
};

struct Recorder {
    const PropertyDef* def = nullptr;
    const VerifyOptions* opts = nullptr;
    PropertyReport* report = nullptr;
    int trial = 0;

    json doc;
    std::vector<VertexId> shrink_order;
    std::optional<Embedding> emb;

    bool load_instance(json d, std::vector<VertexId> order) {
        doc = std::move(d);
        shrink_order = std::move(order);
        emb.reset();
        try {
            emb.emplace(Embedding::from_json(doc));
            return true;
        } catch (const Error& err) {
            report->failures.push_back(
                {trial, doc, json{{"phase", "load"}}, err.what()});
            return false;
        }
    }

    void check(const json& args) {
        ++report->checks;
        std::optional<std::string> msg;
        try {
            msg = def->check(*emb, args, *opts);
        } catch (const Error& err) {
            msg = std::string("check raised: ") + err.what();
        }
        if (!msg) return;
        shrink_and_record(args, *msg);
    }

    // Fast path when a trial evaluated the query itself and it passed.
    void pass() { ++report->checks; }

    // Remove stacked vertices in reverse insertion order while the failing
    // query keeps failing.
    void shrink_and_record(const json& args, std::string message) {
        json best = doc;
        for (auto it = shrink_order.rbegin(); it != shrink_order.rend(); ++it) {
            json candidate = remove_vertex_from_document(best, *it);
            try {
                Embedding smaller = Embedding::from_json(candidate);
                auto msg = def->check(smaller, args, *opts);
                if (msg) {
                    best = std::move(candidate);
                    message = *msg;
                }
            } catch (const Error&) {
                // removal broke the query or the instance; keep the vertex
            }
        }
        report->failures.push_back({trial, std::move(best), args, std::move(message)});
    }
};

json stacked_doc(std::uint64_t seed, int trial, int n, GenMetadata* meta_out = nullptr) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.seed = Rng::fork(seed, static_cast<std::uint64_t>(trial)).next_u64();
    cfg.n = n;
    GenResult r = gen(cfg);
    if (meta_out) *meta_out = r.meta;
    return r.document;
}

std::vector<VertexId> random_simple_path(const Embedding& e, Rng& rng, int max_edges) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(e.vertex_count())));
    std::vector<VertexId> path = {e.id_of(start)};
    std::set<int> used = {start};
    int cur = start;
    int want = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges - 1)));
    for (int step = 0; step < want; ++step) {
        std::vector<int> options;
        for (int nb : e.rotation(cur)) {
            if (!used.count(nb)) options.push_back(nb);
        }
        if (options.empty()) break;
        std::sort(options.begin(), options.end(),
                  [&](int a, int b) { return e.id_of(a) < e.id_of(b); });
        cur = options[static_cast<size_t>(rng.below(options.size()))];
        used.insert(cur);
        path.push_back(e.id_of(cur));
    }
    return path;
}

std::vector<CycleTuple> cycles_from_json(const Embedding& e, const json& j) {
    std::vector<CycleTuple> out;
    for (const auto& c : j) {
        out.push_back(canonicalize_cycle(e, c.get<std::vector<VertexId>>()));
    }
    return out;
}

// ---- property: euler_genus -------------------------------------------------

void run_euler(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.seed = Rng::fork(seed, static_cast<std::uint64_t>(trial)).next_u64();
    switch (trial % 4) {
        case 0:
            cfg.kind = GenKind::StackedTriangulation;
            cfg.n = 3 + (trial * 7) % 198;
            break;
        case 1:
            cfg.kind = GenKind::Onion;
            cfg.rings = 3 + trial % 5;
            cfg.ring_size = 3 + trial % 6;
            break;
        case 2:
            cfg.kind = GenKind::Grapes;
            cfg.lobes = 3 + trial % 8;
            break;
        default:
            cfg.kind = GenKind::PlantedCage;
            cfg.cage_paths = 3 + trial % 5;
            cfg.path_len = 1 + trial % 3;
            cfg.spread = 1 + trial % 2;
            break;
    }
    GenResult r = gen(cfg);
    if (rec.load_instance(r.document, r.meta.insertion_order)) rec.check(json::object());
}

std::optional<std::string> check_euler(const Embedding& e, const json&, const VerifyOptions&) {
    long long chi = static_cast<long long>(e.vertex_count()) - e.edge_count() + e.face_count();
    if (chi != 2) return "V - E + F = " + std::to_string(chi);
    return std::nullopt;
}

// ---- property: jordan_split ------------------------------------------------

void run_jordan(std::uint64_t seed, int trial, const VerifyOptions& opts, Recorder& rec) {
    int n = 12 + (trial * 7) % 49;
    GenMetadata meta;
    json doc = stacked_doc(seed, trial, n, &meta);
    if (!rec.load_instance(doc, meta.insertion_order)) return;
    const Embedding& e = *rec.emb;
    for_each_cycle(
        e, 8,
        [&](const CycleTuple& c) {
            // Exhaustive over every cycle; only failures take the slow
            // witness path.
            int comps = dual_split_count(e, c);
            if (opts.corrupt_sides) ++comps;
            if (comps == 2) {
                rec.pass();
            } else {
                rec.check(json{{"cycle", c.canonical}});
            }
            return true;
        },
        opts.budget);
}

std::optional<std::string> check_jordan(const Embedding& e, const json& args,
                                        const VerifyOptions& opts) {
    CycleTuple c = canonicalize_cycle(e, args.at("cycle").get<std::vector<VertexId>>());
    int comps = dual_split_count(e, c);
    if (opts.corrupt_sides) ++comps;
    if (comps != 2) return "dual split produced " + std::to_string(comps) + " components";
    return std::nullopt;
}

// ---- property: oracle_agreement ---------------------------------------------

void run_oracle(std::uint64_t seed, int trial, const VerifyOptions& opts, Recorder& rec) {
    int n = 16 + (trial * 3) % 45;
    GenMetadata meta;
    json doc = stacked_doc(seed, trial, n, &meta);
    if (!rec.load_instance(doc, meta.insertion_order)) return;
    const Embedding& e = *rec.emb;

    std::vector<CycleTuple> cycles;
    for_each_cycle(
        e, 8, [&](const CycleTuple& c) { cycles.push_back(c); return cycles.size() < 4000; },
        opts.budget);
    Rng rng = Rng::fork(seed, 1000003ULL * static_cast<std::uint64_t>(trial));
    int quota = 500;
    for (int q = 0; q < quota; ++q) {
        const CycleTuple& c = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        std::vector<VertexId> off;
        for (VertexId v : e.vertex_ids()) {
            if (!c.contains(v)) off.push_back(v);
        }
        if (off.size() < 2) continue;
        VertexId v = off[static_cast<size_t>(rng.below(off.size()))];
        VertexId w = off[static_cast<size_t>(rng.below(off.size()))];
        if (v == w) continue;
        rec.check(json{{"cycle", c.canonical}, {"v", v}, {"w", w}});
    }
}

std::optional<std::string> check_oracle(const Embedding& e, const json& args,
                                        const VerifyOptions& opts) {
    CycleTuple c = canonicalize_cycle(e, args.at("cycle").get<std::vector<VertexId>>());
    VertexId v = args.at("v").get<VertexId>(), w = args.at("w").get<VertexId>();
    auto sa = side_assignment(e, c);
    Side sv = sa->side_of(e, v), sw = sa->side_of(e, w);
    if (opts.corrupt_sides) sv = opposite(sv);
    GeoSide gv = geometric_oracle(e, c, v), gw = geometric_oracle(e, c, w);
    if ((sv == sw) != (gv == gw)) {
        return "combinatorial and geometric sides disagree for vertices " + std::to_string(v) +
               "," + std::to_string(w);
    }
    return std::nullopt;
}

// ---- property: prop_a_subpath ------------------------------------------------

void run_prop_a(std::uint64_t seed, int trial, const VerifyOptions& opts, Recorder& rec) {
    int n = 20 + trial % 21;
    GenMetadata meta;
    json doc = stacked_doc(seed, trial, n, &meta);
    if (!rec.load_instance(doc, meta.insertion_order)) return;
    const Embedding& e = *rec.emb;

    std::vector<CycleTuple> cycles;
    for_each_cycle(
        e, 7, [&](const CycleTuple& c) { cycles.push_back(c); return cycles.size() < 3000; },
        opts.budget);
    Rng rng = Rng::fork(seed, 2000003ULL * static_cast<std::uint64_t>(trial));
    int found = 0;
    for (int attempt = 0; attempt < 4000 && found < 50; ++attempt) {
        std::vector<VertexId> path = random_simple_path(e, rng, 8);
        if (path.size() < 3) continue;
        const CycleTuple& c = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        if (c.contains(path.front()) || c.contains(path.back())) continue;
        auto sa = side_assignment(e, c);
        if (sa->side_of(e, path.front()) == sa->side_of(e, path.back())) continue;
        ++found;
        rec.check(json{{"path", path}, {"cycle", c.canonical}});
    }
}

std::optional<std::string> check_prop_a(const Embedding& e, const json& args,
                                        const VerifyOptions&) {
    CycleTuple c = canonicalize_cycle(e, args.at("cycle").get<std::vector<VertexId>>());
    std::vector<VertexId> path = args.at("path").get<std::vector<VertexId>>();
    if (c.contains(path.front()) || c.contains(path.back())) return std::nullopt;
    auto sa = side_assignment(e, c);
    if (sa->side_of(e, path.front()) == sa->side_of(e, path.back())) return std::nullopt;

    // Wanted: off-cycle indices j < j'-1 on different sides whose whole
    // in-between stretch runs along the cycle.
    int m = static_cast<int>(path.size());
    for (int j = 0; j < m; ++j) {
        if (c.contains(path[static_cast<size_t>(j)])) continue;
        for (int jp = j + 2; jp < m; ++jp) {
            if (c.contains(path[static_cast<size_t>(jp)])) continue;
            if (sa->side_of(e, path[static_cast<size_t>(j)]) !=
                sa->side_of(e, path[static_cast<size_t>(jp)])) {
                bool on_cycle_between = true;
                for (int i = j + 1; i < jp; ++i) {
                    if (!c.contains(path[static_cast<size_t>(i)])) {
                        on_cycle_between = false;
                        break;
                    }
                }
                if (on_cycle_between) return std::nullopt;
            }
            break; // a further j' would leave an off-cycle vertex in between
        }
    }
    return "no separated index pair with an on-cycle run between them";
}

// ---- properties: prop_b_symmetry / prop_c_classes / remark_single_path -------

void run_cycle_pairs(std::uint64_t seed, int trial, const VerifyOptions& opts, Recorder& rec,
                     bool need_single_path_hypothesis) {
    int n = 16 + trial % 17;
    GenMetadata meta;
    json doc = stacked_doc(seed, trial, n, &meta);
    if (!rec.load_instance(doc, meta.insertion_order)) return;
    const Embedding& e = *rec.emb;

    std::vector<CycleTuple> cycles;
    for_each_cycle(
        e, 7, [&](const CycleTuple& c) { cycles.push_back(c); return cycles.size() < 3000; },
        opts.budget);
    if (cycles.size() < 2) return;
    Rng rng = Rng::fork(seed, 3000017ULL * static_cast<std::uint64_t>(trial));
    int found = 0;
    for (int attempt = 0; attempt < 6000 && found < 50; ++attempt) {
        const CycleTuple& c1 = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        const CycleTuple& c2 = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        if (c1 == c2) continue;
        if (need_single_path_hypothesis && !intersection_is_single_path(c1, c2)) continue;
        ++found;
        rec.check(json{{"c1", c1.canonical}, {"c2", c2.canonical}});
    }
}

std::optional<std::string> check_prop_b(const Embedding& e, const json& args,
                                        const VerifyOptions&) {
    auto cs = cycles_from_json(e, json::array({args.at("c1"), args.at("c2")}));
    if (cs[0] == cs[1]) return std::nullopt;
    if (crosses_directed(e, cs[0], cs[1]) != crosses_directed(e, cs[1], cs[0])) {
        return "crossing test is asymmetric for this pair";
    }
    return std::nullopt;
}

std::optional<std::string> check_prop_c(const Embedding& e, const json& args,
                                        const VerifyOptions&) {
    auto cs = cycles_from_json(e, json::array({args.at("c1"), args.at("c2")}));
    if (cs[0] == cs[1]) return std::nullopt;
    if (crosses_directed(e, cs[0], cs[1])) return std::nullopt;
    RegionPartition part = joint_classes(e, cs[0], cs[1]);
    if (part.classes.size() > 3) {
        return "non-crossing pair produced " + std::to_string(part.classes.size()) + " classes";
    }
    return std::nullopt;
}

std::optional<std::string> check_remark(const Embedding& e, const json& args,
                                        const VerifyOptions&) {
    auto cs = cycles_from_json(e, json::array({args.at("c1"), args.at("c2")}));
    if (cs[0] == cs[1]) return std::nullopt;
    if (!intersection_is_single_path(cs[0], cs[1])) return std::nullopt;
    if (crosses(e, cs[0], cs[1])) return "single-path intersection but the cycles cross";
    return std::nullopt;
}

// ---- property: order_property -------------------------------------------------

void run_order(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::PlantedCage;
    cfg.seed = 0;
    cfg.cage_paths = 3 + trial % 3;
    cfg.path_len = 1 + trial % 3;
    cfg.spread = 2;
    GenResult r = gen(cfg);
    if (!rec.load_instance(r.document, {})) return;

    std::vector<std::vector<VertexId>> paths = r.meta.cage_paths;
    Rng rng = Rng::fork(seed, 4000037ULL * static_cast<std::uint64_t>(trial));
    for (size_t i = paths.size(); i > 1; --i) {
        std::swap(paths[i - 1], paths[static_cast<size_t>(rng.below(i))]);
        if (rng.below(2)) std::reverse(paths[i - 1].begin(), paths[i - 1].end());
    }
    rec.check(json{{"paths", paths}});
}

std::optional<std::string> check_order(const Embedding& e, const json& args,
                                       const VerifyOptions&) {
    std::vector<PathTuple> paths;
    for (const auto& p : args.at("paths")) {
        paths.push_back(make_path(e, p.get<std::vector<VertexId>>()));
    }
    CageOrNest ordered = order_family(e, paths); // throws on axiom failure
    const Cage& cage = std::get<Cage>(ordered);

    // Orient the inputs the way the cage stores them, then recover the
    // returned order as positions into the input list.
    std::vector<PathTuple> oriented;
    for (const auto& p : paths) {
        PathTuple q = p;
        if (q.first() != cage.pole_u) std::reverse(q.vertices.begin(), q.vertices.end());
        oriented.push_back(q);
    }
    auto position_of = [&](const PathTuple& p) {
        for (size_t i = 0; i < oriented.size(); ++i) {
            if (oriented[i].vertices == p.vertices) return static_cast<int>(i);
        }
        return -1;
    };
    std::vector<int> returned;
    for (const auto& p : cage.paths) returned.push_back(position_of(p));

    // Exhaustively find every axiom-satisfying order.
    int m = static_cast<int>(paths.size());
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    std::set<std::vector<int>> satisfying;
    do {
        Cage candidate;
        candidate.pole_u = cage.pole_u;
        candidate.pole_v = cage.pole_v;
        for (int i : perm) candidate.paths.push_back(oriented[static_cast<size_t>(i)]);
        try {
            validate_cage(e, candidate);
            satisfying.insert(perm);
        } catch (const Error&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<int>> dihedral;
    for (int rot = 0; rot < m; ++rot) {
        std::vector<int> fwd, rev;
        for (int i = 0; i < m; ++i) {
            fwd.push_back(returned[static_cast<size_t>((rot + i) % m)]);
            rev.push_back(returned[static_cast<size_t>((rot + m - i) % m)]);
        }
        dihedral.insert(fwd);
        dihedral.insert(rev);
    }
    if (satisfying != dihedral) {
        return "axiom-satisfying orders are not exactly the rotation/reflection class (" +
               std::to_string(satisfying.size()) + " vs " + std::to_string(dihedral.size()) + ")";
    }
    return std::nullopt;
}

// ---- property: non_touching ----------------------------------------------------

void run_non_touching(std::uint64_t seed, int trial, const VerifyOptions& opts, Recorder& rec) {
    int n = 14 + trial % 7;
    GenMetadata meta;
    json doc = stacked_doc(seed, trial, n, &meta);
    if (!rec.load_instance(doc, meta.insertion_order)) return;
    const Embedding& e = *rec.emb;

    std::vector<CycleTuple> cycles;
    for_each_cycle(
        e, 6, [&](const CycleTuple& c) { cycles.push_back(c); return cycles.size() < 2000; },
        opts.budget);
    Rng rng = Rng::fork(seed, 5000011ULL * static_cast<std::uint64_t>(trial));
    for (int attempt = 0; attempt < 4000; ++attempt) {
        const CycleTuple& c1 = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        const CycleTuple& c2 = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        if (c1 == c2) continue;
        int common = 0;
        for (VertexId v : c1.canonical) {
            if (c2.contains(v)) ++common;
        }
        if (common < 2) continue;
        rec.check(json{{"c1", c1.canonical}, {"c2", c2.canonical}});
        return;
    }
}

std::optional<std::string> check_non_touching(const Embedding& e, const json& args,
                                              const VerifyOptions& opts) {
    auto cs = cycles_from_json(e, json::array({args.at("c1"), args.at("c2")}));
    NonTouchingReport report = verify_non_touching(e, cs[0], cs[1], opts.budget);
    if (!report.all_matched) {
        return std::to_string(report.unmatched.size()) + " region(s) matched by no witness cycle";
    }
    return std::nullopt;
}

// ---- property: nest_recovery ----------------------------------------------------

void run_nest(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::Onion;
    cfg.rings = 3 + trial % 4;
    cfg.ring_size = 3 + trial % 4;
    GenResult r = gen(cfg);
    if (!rec.load_instance(r.document, {})) return;

    std::vector<std::vector<VertexId>> family = r.meta.rings;
    Rng rng = Rng::fork(seed, 6000101ULL * static_cast<std::uint64_t>(trial));
    for (size_t i = family.size(); i > 1; --i) {
        std::swap(family[i - 1], family[static_cast<size_t>(rng.below(i))]);
    }
    rec.check(json{{"family", family}, {"rings", r.meta.rings}});
}

std::optional<std::string> check_nest(const Embedding& e, const json& args,
                                      const VerifyOptions&) {
    std::vector<CycleTuple> family = cycles_from_json(e, args.at("family"));
    std::vector<CycleTuple> rings = cycles_from_json(e, args.at("rings"));
    CageOrNest ordered = order_family(e, family); // validates the nest axioms
    const Nest& nest = std::get<Nest>(ordered);

    auto sequence = [](const std::vector<CycleTuple>& cs) {
        std::vector<std::vector<VertexId>> out;
        for (const auto& c : cs) out.push_back(c.canonical);
        return out;
    };
    auto got = sequence(nest.cycles);
    auto want = sequence(rings);
    auto reversed = want;
    std::reverse(reversed.begin(), reversed.end());
    if (got != want && got != reversed) return "recovered nest order is not the planted order";
    return std::nullopt;
}

// ---- property: nod_recovery -------------------------------------------------------

void run_nod(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::Grapes;
    cfg.lobes = 3 + trial % 6;
    GenResult r = gen(cfg);
    if (!rec.load_instance(r.document, {})) return;
    (void)seed;
    rec.check(json{{"seq", r.meta.marks}, {"hub", *r.meta.hub}, {"max_len", 4}});
}

std::optional<std::string> check_nod(const Embedding& e, const json& args,
                                     const VerifyOptions& opts) {
    MarkedSequence m{args.at("seq").get<std::vector<VertexId>>(), args.at("max_len").get<int>()};
    EnvelopeData data = build_envelope(e, m, opts.budget);
    VertexId hub = args.at("hub").get<VertexId>();
    if (!data.nod) return "nod is absent (ambiguous=" + std::to_string(data.nod_ambiguous) + ")";
    if (*data.nod != hub) {
        return "nod = " + std::to_string(*data.nod) + ", planted hub = " + std::to_string(hub);
    }
    return std::nullopt;
}

// ---- property: fit_recovery --------------------------------------------------------

void run_fit(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::PlantedCage;
    cfg.cage_paths = 6 + trial % 4;
    cfg.path_len = 1 + trial % 3;
    cfg.spread = 2;
    GenResult r = gen(cfg);
    if (!rec.load_instance(r.document, {})) return;
    (void)seed;
    rec.check(json{{"paths", r.meta.cage_paths}, {"marks", r.meta.marks}});
}

std::optional<std::string> check_fit(const Embedding& e, const json& args,
                                     const VerifyOptions&) {
    std::vector<PathTuple> paths;
    for (const auto& p : args.at("paths")) {
        paths.push_back(make_path(e, p.get<std::vector<VertexId>>()));
    }
    std::vector<VertexId> marks = args.at("marks").get<std::vector<VertexId>>();
    CageOrNest ordered = order_family(e, paths);
    const Cage& cage = std::get<Cage>(ordered);

    // Sort the marks along the cage by the consecutive region holding each.
    std::vector<std::pair<int, VertexId>> placed;
    for (VertexId mark : marks) {
        int where = -1;
        for (int t = 0; t + 1 < cage.size(); ++t) {
            Region reg = cage_region(e, cage, t, t + 1);
            if (std::binary_search(reg.vertices.begin(), reg.vertices.end(), mark)) {
                where = t;
                break;
            }
        }
        if (where < 0) return "mark " + std::to_string(mark) + " is in no consecutive region";
        placed.emplace_back(where, mark);
    }
    std::sort(placed.begin(), placed.end());
    std::vector<VertexId> seq;
    for (auto& [idx, mark] : placed) seq.push_back(mark);

    FitResult fit = fits_into(e, seq, ordered);
    if (!fit.fits) return "planted marks do not fit into the recovered cage";
    if (fit.witness.size() != seq.size() + 1) return "witness chain has the wrong length";
    for (size_t i = 1; i < fit.witness.size(); ++i) {
        if (fit.witness[i] <= fit.witness[i - 1]) return "witness chain is not increasing";
    }
    return std::nullopt;
}

// ---- property: envelope_crosscheck ---------------------------------------------------

void run_envelope_cross(std::uint64_t seed, int trial, const VerifyOptions&, Recorder& rec) {
    GeneratorConfig cfg;
    cfg.kind = GenKind::Grapes;
    cfg.lobes = 3 + trial % 10;
    GenResult r = gen(cfg);
    if (!rec.load_instance(r.document, {})) return;
    (void)seed;
    rec.check(json{{"seq", r.meta.marks}, {"max_len", 4 + 2 * (trial % 2)}});
}

std::optional<std::string> check_envelope_cross(const Embedding& e, const json& args,
                                                const VerifyOptions& opts) {
    MarkedSequence m{args.at("seq").get<std::vector<VertexId>>(), args.at("max_len").get<int>()};
    validate_marked_sequence(e, m);

    // Independent route: full enumeration filtered through the predicate.
    std::vector<CycleTuple> all = enumerate_cycles(e, m.max_len, {}, opts.budget);
    for (int j = 0; j < static_cast<int>(m.seq.size()); ++j) {
        VertexId aj = m.seq[static_cast<size_t>(j)];
        std::set<std::vector<VertexId>> expected;
        for (const auto& c : all) {
            bool touches = false;
            for (VertexId v : m.seq) {
                if (c.contains(v)) {
                    touches = true;
                    break;
                }
            }
            if (touches) continue;
            bool separates = true;
            for (VertexId other : m.seq) {
                if (other == aj) continue;
                if (r_predicate(e, aj, other, c.canonical)) {
                    separates = false;
                    break;
                }
            }
            if (separates) expected.insert(c.canonical);
        }
        std::set<std::vector<VertexId>> produced;
        for (const auto& c : separators_of(e, m, j, opts.budget)) produced.insert(c.canonical);
        if (produced != expected) {
            return "separator family at index " + std::to_string(j) +
                   " differs from the predicate filter (" + std::to_string(produced.size()) +
                   " vs " + std::to_string(expected.size()) + ")";
        }
    }

    EnvelopeData data = build_envelope(e, m, opts.budget);
    if (data.env_depends_on_aux) return "env depends on the auxiliary index choice";
    return std::nullopt;
}

// ---- registry -------------------------------------------------------------------------

const std::vector<PropertyDef>& registry() {
    static const std::vector<PropertyDef> props = {
        {"euler_genus", run_euler, check_euler},
        {"jordan_split", run_jordan, check_jordan},
        {"oracle_agreement", run_oracle, check_oracle},
        {"prop_a_subpath", run_prop_a, check_prop_a},
        {"prop_b_symmetry",
         [](std::uint64_t s, int t, const VerifyOptions& o, Recorder& r) {
             run_cycle_pairs(s, t, o, r, false);
         },
         check_prop_b},
        {"prop_c_classes",
         [](std::uint64_t s, int t, const VerifyOptions& o, Recorder& r) {
             run_cycle_pairs(s, t, o, r, false);
         },
         check_prop_c},
        {"remark_single_path",
         [](std::uint64_t s, int t, const VerifyOptions& o, Recorder& r) {
             run_cycle_pairs(s, t, o, r, true);
         },
         check_remark},
        {"order_property", run_order, check_order},
        {"non_touching", run_non_touching, check_non_touching},
        {"nest_recovery", run_nest, check_nest},
        {"nod_recovery", run_nod, check_nod},
        {"fit_recovery", run_fit, check_fit},
        {"envelope_crosscheck", run_envelope_cross, check_envelope_cross},
    };
    return props;
}

const PropertyDef& find_property(const std::string& id) {
    for (const auto& p : registry()) {
        if (p.id == id) return p;
    }
    throw Error(ErrorKind::UnknownProperty, "no property named " + id);
}

} // namespace

std::vector<std::string> property_ids() {
    std::vector<std::string> out;
    for (const auto& p : registry()) out.push_back(p.id);
    return out;
}

nlohmann::json PropertyReport::to_json(bool corrupt_sides) const {
    json fails = json::array();
    for (const auto& f : failures) {
        fails.push_back(json{{"trial", f.trial},
                             {"property", property},
                             {"document", f.document},
                             {"args", f.args},
                             {"message", f.message},
                             {"options", json{{"corrupt_sides", corrupt_sides}}}});
    }
    return json{{"property", property}, {"trials", trials}, {"checks", checks}, {"failures", fails}};
}

PropertyReport verify(const std::string& property, int trials, std::uint64_t seed,
                      const VerifyOptions& options) {
    const PropertyDef& def = find_property(property);
    PropertyReport report;
    report.property = property;
    report.trials = trials;

    auto start = std::chrono::steady_clock::now();
    Recorder rec;
    rec.def = &def;
    rec.opts = &options;
    rec.report = &report;
    for (int t = 0; t < trials; ++t) {
        rec.trial = t;
        def.run(seed, t, options, rec);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::string> replay(const nlohmann::json& witness_or_report) {
    std::vector<nlohmann::json> witnesses;
    if (witness_or_report.contains("failures")) {
        for (const auto& w : witness_or_report["failures"]) witnesses.push_back(w);
    } else {
        witnesses.push_back(witness_or_report);
    }
    std::vector<std::string> still_failing;
    for (const auto& w : witnesses) {
        const PropertyDef& def = find_property(w.at("property").get<std::string>());
        VerifyOptions opts;
        if (w.contains("options") && w["options"].contains("corrupt_sides")) {
            opts.corrupt_sides = w["options"]["corrupt_sides"].get<bool>();
        }
        try {
            Embedding e = Embedding::from_json(w.at("document"));
            auto msg = def.check(e, w.at("args"), opts);
            if (msg) still_failing.push_back(*msg);
        } catch (const Error& err) {
            still_failing.push_back(err.what());
        }
    }
    return still_failing;
}

} // namespace cyclesep
