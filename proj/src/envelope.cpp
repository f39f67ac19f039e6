#include "cyclesep/envelope.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cyclesep/cycle_enum.hpp"

namespace cyclesep {

namespace {

std::vector<VertexId> sorted_vec(const std::set<VertexId>& s) { return {s.begin(), s.end()}; }

// Vertices reachable from `sources` in G minus `banned` (sources already
// exclude banned).
std::set<VertexId> reachable(const Embedding& e, const std::set<VertexId>& sources,
                             std::optional<VertexId> banned) {
    std::set<VertexId> seen = sources;
    std::queue<int> q;
    for (VertexId v : sources) q.push(e.index_of(v));
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : e.rotation(u)) {
            VertexId wid = e.id_of(w);
            if (banned && wid == *banned) continue;
            if (seen.insert(wid).second) q.push(w);
        }
    }
    return seen;
}

} // namespace

void validate_marked_sequence(const Embedding& e, const MarkedSequence& m) {
    if (m.seq.size() < 3) {
        throw Error(ErrorKind::UsageError, "marked sequence needs at least 3 vertices");
    }
    std::set<VertexId> distinct(m.seq.begin(), m.seq.end());
    if (distinct.size() != m.seq.size()) {
        throw Error(ErrorKind::UsageError, "marked sequence vertices must be distinct");
    }
    for (VertexId v : m.seq) e.index_of(v);
    if (m.max_len < 3) throw Error(ErrorKind::UsageError, "max_len must be at least 3");
}

std::vector<CycleTuple> separators_of(const Embedding& e, const MarkedSequence& m, int j,
                                      const Budget& budget) {
    validate_marked_sequence(e, m);
    if (j < 0 || j >= static_cast<int>(m.seq.size())) {
        throw Error(ErrorKind::IndexOutOfRange, "marked index out of range");
    }
    VertexId aj = m.seq[static_cast<size_t>(j)];

    // Separators cannot touch any marked vertex, so the search runs in the
    // subgraph without them.
    std::vector<char> allowed(static_cast<size_t>(e.vertex_count()), 1);
    for (VertexId v : m.seq) allowed[static_cast<size_t>(e.index_of(v))] = 0;

    std::vector<CycleTuple> out;
    for_each_cycle(
        e, m.max_len,
        [&](const CycleTuple& c) {
            auto sa = side_assignment(e, c);
            Side mine = sa->side_of(e, aj);
            for (size_t i = 0; i < m.seq.size(); ++i) {
                if (static_cast<int>(i) == j) continue;
                if (sa->side_of(e, m.seq[i]) == mine) return true;
            }
            out.push_back(c);
            return true;
        },
        budget, &allowed);
    return out;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>>
x_set_from(const Embedding& e, const MarkedSequence& m, int j,
           const std::vector<CycleTuple>& separators) {
    VertexId aj = m.seq[static_cast<size_t>(j)];
    std::set<VertexId> x;
    std::set<VertexId> in_positive;
    for (const auto& c : separators) {
        auto sa = side_assignment(e, c);
        Side mine = sa->side_of(e, aj);
        for (VertexId v : sa->vertices_on(e, mine)) {
            x.insert(v);
            in_positive.insert(v);
        }
        for (VertexId v : c.canonical) x.insert(v);
    }
    std::vector<VertexId> external;
    for (VertexId v : x) {
        if (!in_positive.count(v)) external.push_back(v);
    }
    return {sorted_vec(x), external};
}

std::pair<std::vector<VertexId>, std::vector<VertexId>>
x_set(const Embedding& e, const MarkedSequence& m, int j, const Budget& budget) {
    return x_set_from(e, m, j, separators_of(e, m, j, budget));
}

std::optional<VertexId> nod_vertex(const Embedding& e,
                                   const std::vector<std::vector<VertexId>>& x_sets,
                                   bool* ambiguous) {
    if (ambiguous) *ambiguous = false;
    std::vector<int> nonempty;
    for (size_t j = 0; j < x_sets.size(); ++j) {
        if (!x_sets[j].empty()) nonempty.push_back(static_cast<int>(j));
    }
    if (nonempty.size() < 2) return std::nullopt;

    // Candidates that lie on every path between a pair of X-sets.
    auto waypoints = [&](const std::vector<VertexId>& xa, const std::vector<VertexId>& xb) {
        std::set<VertexId> a(xa.begin(), xa.end()), b(xb.begin(), xb.end());
        std::vector<VertexId> shared;
        for (VertexId v : a) {
            if (b.count(v)) shared.push_back(v);
        }
        std::set<VertexId> result;
        if (shared.size() >= 2) return result; // two trivial paths, no single waypoint
        std::vector<VertexId> candidates;
        if (shared.size() == 1) {
            candidates = {shared.front()};
        } else {
            candidates.assign(e.vertex_ids().begin(), e.vertex_ids().end());
        }
        for (VertexId u : candidates) {
            std::set<VertexId> src;
            for (VertexId v : a) {
                if (v != u) src.insert(v);
            }
            if (src.empty()) { // X_a = {u}: every path starts at u
                result.insert(u);
                continue;
            }
            auto reach = reachable(e, src, u);
            bool hits = false;
            for (VertexId v : b) {
                if (v != u && reach.count(v)) {
                    hits = true;
                    break;
                }
            }
            if (!hits) result.insert(u);
        }
        return result;
    };

    std::optional<std::set<VertexId>> common;
    for (size_t x = 0; x < nonempty.size(); ++x) {
        for (size_t y = x + 1; y < nonempty.size(); ++y) {
            auto w = waypoints(x_sets[static_cast<size_t>(nonempty[x])],
                               x_sets[static_cast<size_t>(nonempty[y])]);
            if (!common) {
                common = std::move(w);
            } else {
                std::set<VertexId> next;
                for (VertexId v : *common) {
                    if (w.count(v)) next.insert(v);
                }
                common = std::move(next);
            }
            if (common->empty()) {
                if (ambiguous) *ambiguous = true;
                return std::nullopt;
            }
        }
    }
    return *common->begin(); // unique when the grapes property holds; least id otherwise
}

std::vector<VertexId> h_set(const Embedding& e, const std::vector<VertexId>& x_set_j,
                            std::optional<VertexId> nod) {
    if (x_set_j.empty()) return {};
    std::set<VertexId> src;
    for (VertexId v : x_set_j) {
        if (!nod || v != *nod) src.insert(v);
    }
    if (src.empty()) return {};
    return sorted_vec(reachable(e, src, nod));
}

std::vector<VertexId> env_of(const Embedding& e, const MarkedSequence& m, int j,
                             const EnvelopeData& staged, int aux_j, bool* depends_on_aux,
                             const Budget& budget) {
    if (depends_on_aux) *depends_on_aux = false;
    const auto& h = staged.h_sets[static_cast<size_t>(j)];
    if (h.empty()) return {};

    std::vector<char> allowed(static_cast<size_t>(e.vertex_count()), 0);
    for (VertexId v : h) allowed[static_cast<size_t>(e.index_of(v))] = 1;
    if (staged.nod) allowed[static_cast<size_t>(e.index_of(*staged.nod))] = 1;

    std::vector<CycleTuple> pocket_cycles;
    for_each_cycle(
        e, m.max_len,
        [&](const CycleTuple& c) {
            pocket_cycles.push_back(c);
            return true;
        },
        budget, &allowed);

    auto env_with_aux = [&](int aux) {
        VertexId a_aux = m.seq[static_cast<size_t>(aux)];
        std::set<VertexId> env(h.begin(), h.end());
        for (const auto& c : pocket_cycles) {
            if (c.contains(a_aux)) continue;
            auto sa = side_assignment(e, c);
            Side far = opposite(sa->side_of(e, a_aux));
            for (VertexId v : sa->vertices_on(e, far)) env.insert(v);
        }
        return sorted_vec(env);
    };

    std::vector<int> aux_choices;
    if (aux_j >= 0) {
        aux_choices = {aux_j};
    } else {
        for (int i = 0; i < static_cast<int>(m.seq.size()) && aux_choices.size() < 2; ++i) {
            if (i != j) aux_choices.push_back(i);
        }
    }
    std::vector<VertexId> result = env_with_aux(aux_choices.front());
    for (size_t i = 1; i < aux_choices.size(); ++i) {
        if (env_with_aux(aux_choices[i]) != result && depends_on_aux) {
            *depends_on_aux = true;
        }
    }
    return result;
}

EnvelopeData build_envelope(const Embedding& e, const MarkedSequence& m, const Budget& budget) {
    validate_marked_sequence(e, m);
    EnvelopeData data;
    size_t n = m.seq.size();
    data.separators.resize(n);
    data.x_sets.resize(n);
    data.externals.resize(n);
    data.h_sets.resize(n);
    data.envs.resize(n);

    for (size_t j = 0; j < n; ++j) {
        data.separators[j] = separators_of(e, m, static_cast<int>(j), budget);
        auto [x, external] = x_set_from(e, m, static_cast<int>(j), data.separators[j]);
        data.x_sets[j] = std::move(x);
        data.externals[j] = std::move(external);
    }
    data.nod = nod_vertex(e, data.x_sets, &data.nod_ambiguous);
    for (size_t j = 0; j < n; ++j) {
        data.h_sets[j] = h_set(e, data.x_sets[j], data.nod);
    }
    for (size_t j = 0; j < n; ++j) {
        bool depends = false;
        data.envs[j] = env_of(e, m, static_cast<int>(j), data, -1, &depends, budget);
        data.env_depends_on_aux = data.env_depends_on_aux || depends;
    }
    return data;
}

NestingBranch verify_cycle_nesting(const Embedding& e, const CycleTuple& c, const CycleTuple& c2,
                                   const CycleTuple& d, VertexId a, VertexId a2, VertexId b,
                                   VertexId v) {
    e.index_of(a);
    e.index_of(a2);
    e.index_of(b);
    e.index_of(v);
    if (c.contains(a) || c2.contains(a) || c.contains(a2) || c2.contains(a2)) {
        throw Error(ErrorKind::HypothesisNotMet, "a and a2 must avoid both cycles");
    }
    if (d.contains(b)) {
        throw Error(ErrorKind::HypothesisNotMet, "b must avoid the cycle d");
    }

    auto closure = [&](const CycleTuple& cyc, VertexId anchor) {
        auto [pos, neg] = side_sets(e, cyc, anchor);
        std::set<VertexId> out(pos.begin(), pos.end());
        out.insert(cyc.canonical.begin(), cyc.canonical.end());
        return out;
    };

    std::set<VertexId> ka = closure(c, a);
    std::set<VertexId> ka2 = closure(c2, a2);
    for (VertexId w : ka) {
        if (w != v && ka2.count(w)) {
            throw Error(ErrorKind::HypothesisNotMet,
                        "side closures of c and c2 meet outside {v}");
        }
    }
    for (VertexId w : d.canonical) {
        if (w != v && c.contains(w)) {
            throw Error(ErrorKind::HypothesisNotMet, "c and d meet outside {v}");
        }
    }
    {
        // The connecting path must stay clear of v and of c, which is what
        // pins d's cycle to the far side of c.
        std::set<VertexId> banned(c.canonical.begin(), c.canonical.end());
        banned.insert(v);
        std::set<VertexId> src;
        for (VertexId w : d.canonical) {
            if (!banned.count(w)) src.insert(w);
        }
        std::set<VertexId> seen = src;
        std::queue<int> q;
        for (VertexId w : src) q.push(e.index_of(w));
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int nb : e.rotation(u)) {
                VertexId wid = e.id_of(nb);
                if (banned.count(wid)) continue;
                if (seen.insert(wid).second) q.push(nb);
            }
        }
        bool connected = false;
        for (VertexId w : c2.canonical) {
            if (!banned.count(w) && seen.count(w)) {
                connected = true;
                break;
            }
        }
        if (!connected) {
            throw Error(ErrorKind::HypothesisNotMet,
                        "d is not connected to c2 by a path avoiding v and c");
        }
    }

    std::set<VertexId> kd = closure(d, b);
    bool contained = true;
    for (VertexId w : ka) {
        if (!kd.count(w)) {
            contained = false;
            break;
        }
    }
    if (contained) return NestingBranch::Containment;

    bool almost_disjoint = true;
    for (VertexId w : ka) {
        if (w != v && kd.count(w)) {
            almost_disjoint = false;
            break;
        }
    }
    if (almost_disjoint) return NestingBranch::AlmostDisjoint;
    throw Error(ErrorKind::AxiomViolation, "cycle nesting observation failed");
}

} // namespace cyclesep
