#include "cyclesep/separation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

#include "cyclesep/cycle_enum.hpp"

namespace cyclesep {

bool CycleTuple::contains(VertexId v) const {
    return std::find(canonical.begin(), canonical.end(), v) != canonical.end();
}

Side SideAssignment::side_of(const Embedding& e, VertexId v) const {
    return vertex_side[static_cast<size_t>(e.index_of(v))];
}

std::vector<VertexId> SideAssignment::vertices_on(const Embedding& e, Side s) const {
    std::vector<VertexId> out;
    for (size_t i = 0; i < vertex_side.size(); ++i) {
        if (vertex_side[i] == s) out.push_back(e.id_of(static_cast<int>(i)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> canonical_cycle_form(const std::vector<VertexId>& cycle) {
    size_t n = cycle.size();
    std::vector<VertexId> best;
    std::vector<VertexId> candidate(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t start = 0; start < n; ++start) {
            for (size_t i = 0; i < n; ++i) {
                size_t pos = dir == 0 ? (start + i) % n : (start + n - i) % n;
                candidate[i] = cycle[pos];
            }
            if (best.empty() || candidate < best) best = candidate;
        }
    }
    return best;
}

CycleTuple canonicalize_cycle(const Embedding& e, const std::vector<VertexId>& raw) {
    if (raw.empty()) throw Error(ErrorKind::NotACycle, "empty vertex sequence");
    for (VertexId v : raw) e.index_of(v); // UnknownVertex on bad ids

    // Collapse cyclically contiguous repetitions.
    std::vector<VertexId> collapsed;
    for (VertexId v : raw) {
        if (collapsed.empty() || collapsed.back() != v) collapsed.push_back(v);
    }
    while (collapsed.size() > 1 && collapsed.front() == collapsed.back()) collapsed.pop_back();

    if (collapsed.size() < 3) {
        throw Error(ErrorKind::NotACycle, "fewer than 3 distinct vertices after collapsing");
    }
    std::set<VertexId> distinct(collapsed.begin(), collapsed.end());
    if (distinct.size() != collapsed.size()) {
        throw Error(ErrorKind::NotACycle, "a vertex repeats non-contiguously");
    }
    for (size_t i = 0; i < collapsed.size(); ++i) {
        VertexId a = collapsed[i];
        VertexId b = collapsed[(i + 1) % collapsed.size()];
        if (!e.adjacent(e.index_of(a), e.index_of(b))) {
            throw Error(ErrorKind::NotACycle,
                        "consecutive vertices " + std::to_string(a) + "," + std::to_string(b) +
                            " are not adjacent");
        }
    }

    CycleTuple c;
    c.raw = raw;
    c.canonical = canonical_cycle_form(collapsed);
    for (size_t i = 0; i < c.canonical.size(); ++i) {
        VertexId a = c.canonical[i];
        VertexId b = c.canonical[(i + 1) % c.canonical.size()];
        c.edge_set.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(c.edge_set.begin(), c.edge_set.end());
    return c;
}

namespace {

// Dual components after removing the cycle's dual edges, via union-find.
// face_comp labels components in order of least face id, so the component of
// face 0 gets label 0.
int split_dual(const Embedding& e, const CycleTuple& c, std::vector<int>& face_comp) {
    std::vector<char> removed(static_cast<size_t>(e.edge_count()), 0);
    for (const auto& [a, b] : c.edge_set) {
        int eidx = e.edge_index(e.index_of(a), e.index_of(b));
        removed[static_cast<size_t>(eidx)] = 1;
    }
    std::vector<int> parent(static_cast<size_t>(e.dual().node_count));
    for (size_t f = 0; f < parent.size(); ++f) parent[f] = static_cast<int>(f);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& de : e.dual().edges) {
        if (removed[static_cast<size_t>(de.primal_edge)]) continue;
        int ra = find(de.face_a), rb = find(de.face_b);
        if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    face_comp.assign(parent.size(), -1);
    int comps = 0;
    for (size_t f = 0; f < parent.size(); ++f) {
        int root = find(static_cast<int>(f));
        if (face_comp[static_cast<size_t>(root)] < 0) face_comp[static_cast<size_t>(root)] = comps++;
        face_comp[f] = face_comp[static_cast<size_t>(root)];
    }
    return comps;
}

} // namespace

int dual_split_count(const Embedding& e, const CycleTuple& c) {
    std::vector<int> face_comp;
    return split_dual(e, c, face_comp);
}

std::shared_ptr<const SideAssignment> side_assignment(const Embedding& e, const CycleTuple& c) {
    if (auto cached = e.side_cache_find(c.canonical)) return cached;

    std::vector<int> face_comp;
    int comps = split_dual(e, c, face_comp);
    if (comps != 2) {
        throw Error(ErrorKind::AxiomViolation,
                    "cycle split the dual into " + std::to_string(comps) + " components");
    }

    auto sa = std::make_shared<SideAssignment>();
    sa->cycle = c;
    sa->face_side = face_comp; // component 0 holds face 0, the least face id
    sa->vertex_side.assign(static_cast<size_t>(e.vertex_count()), Side::Side0);

    std::vector<char> on_cycle(static_cast<size_t>(e.vertex_count()), 0);
    for (VertexId v : c.canonical) on_cycle[static_cast<size_t>(e.index_of(v))] = 1;

    for (int idx = 0; idx < e.vertex_count(); ++idx) {
        if (on_cycle[static_cast<size_t>(idx)]) {
            sa->vertex_side[static_cast<size_t>(idx)] = Side::OnCycle;
            continue;
        }
        const auto& fs = e.faces_at(idx);
        int label = face_comp[static_cast<size_t>(fs.front())];
        for (int f : fs) {
            if (face_comp[static_cast<size_t>(f)] != label) {
                throw Error(ErrorKind::AxiomViolation,
                            "off-cycle vertex " + std::to_string(e.id_of(idx)) +
                                " touches both sides");
            }
        }
        sa->vertex_side[static_cast<size_t>(idx)] = label == 0 ? Side::Side0 : Side::Side1;
    }

    e.side_cache_store(c.canonical, sa);
    return sa;
}

bool r_predicate(const Embedding& e, VertexId a, VertexId b, const std::vector<VertexId>& raw) {
    e.index_of(a);
    e.index_of(b);
    for (VertexId v : raw) e.index_of(v);

    CycleTuple c;
    try {
        c = canonicalize_cycle(e, raw);
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::NotACycle) return false;
        throw;
    }
    if (c.contains(a) || c.contains(b)) return false;
    auto sa = side_assignment(e, c);
    return sa->side_of(e, a) == sa->side_of(e, b);
}

std::pair<std::vector<VertexId>, std::vector<VertexId>>
side_sets(const Embedding& e, const CycleTuple& c, VertexId a) {
    if (c.contains(a)) {
        throw Error(ErrorKind::VertexOnCycle, "vertex " + std::to_string(a) + " lies on the cycle");
    }
    auto sa = side_assignment(e, c);
    Side pos = sa->side_of(e, a);
    return {sa->vertices_on(e, pos), sa->vertices_on(e, opposite(pos))};
}

bool crosses_directed(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2) {
    // The curve of c1 minus the shared points decomposes into fragments; a
    // fragment's side is carried by its edges. An edge not shared with c2
    // (including a chord between two c2 vertices) lies strictly inside one
    // region, the one holding its two incident faces.
    auto sa = side_assignment(e, c2);
    std::set<std::pair<VertexId, VertexId>> shared(c2.edge_set.begin(), c2.edge_set.end());
    bool seen0 = false, seen1 = false;
    for (const auto& [a, b] : c1.edge_set) {
        if (shared.count({a, b})) continue;
        int a_idx = e.index_of(a), b_idx = e.index_of(b);
        int side = sa->face_side[static_cast<size_t>(e.face_of_dart(a_idx, b_idx))];
        int other = sa->face_side[static_cast<size_t>(e.face_of_dart(b_idx, a_idx))];
        if (side != other) {
            throw Error(ErrorKind::AxiomViolation, "off-cycle edge borders both sides");
        }
        if (side == 0) seen0 = true;
        if (side == 1) seen1 = true;
    }
    return seen0 && seen1;
}

bool crosses(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2) {
    if (c1 == c2) throw Error(ErrorKind::UsageError, "crosses requires two distinct cycles");
    bool forward = crosses_directed(e, c1, c2);
    assert(forward == crosses_directed(e, c2, c1));
    return forward;
}

namespace {

std::vector<VertexId> sorted_union(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::set<VertexId> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

RegionPartition group_by_signature(const Embedding& e, const std::vector<VertexId>& support,
                                   const std::vector<std::vector<Side>>& signatures,
                                   const std::vector<char>& in_support) {
    std::map<std::vector<Side>, std::vector<VertexId>> groups;
    for (int idx = 0; idx < e.vertex_count(); ++idx) {
        if (in_support[static_cast<size_t>(idx)]) continue;
        std::vector<Side> sig;
        sig.reserve(signatures.size());
        for (const auto& per_cycle : signatures) sig.push_back(per_cycle[static_cast<size_t>(idx)]);
        groups[sig].push_back(e.id_of(idx));
    }
    RegionPartition part;
    part.support = support;
    for (auto& [sig, members] : groups) {
        std::sort(members.begin(), members.end());
        part.classes.push_back(std::move(members));
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return part;
}

} // namespace

RegionPartition joint_classes(const Embedding& e, const CycleTuple& c1, const CycleTuple& c2) {
    if (c1 == c2) throw Error(ErrorKind::UsageError, "joint_classes requires two distinct cycles");
    auto sa1 = side_assignment(e, c1);
    auto sa2 = side_assignment(e, c2);
    std::vector<VertexId> support = sorted_union(c1.canonical, c2.canonical);
    std::vector<char> in_support(static_cast<size_t>(e.vertex_count()), 0);
    for (VertexId v : support) in_support[static_cast<size_t>(e.index_of(v))] = 1;
    return group_by_signature(e, support, {sa1->vertex_side, sa2->vertex_side}, in_support);
}

RegionPartition complementary_regions(const Embedding& e, const std::vector<VertexId>& support,
                                      int max_len, const Budget& budget) {
    std::set<VertexId> support_set(support.begin(), support.end());
    std::vector<VertexId> sorted_support(support_set.begin(), support_set.end());
    std::vector<char> allowed(static_cast<size_t>(e.vertex_count()), 0);
    std::vector<char> in_support(static_cast<size_t>(e.vertex_count()), 0);
    for (VertexId v : sorted_support) {
        int idx = e.index_of(v);
        allowed[static_cast<size_t>(idx)] = 1;
        in_support[static_cast<size_t>(idx)] = 1;
    }

    std::vector<std::vector<Side>> signatures;
    if (sorted_support.size() >= 3 && max_len >= 3) {
        int len = std::min<int>(max_len, static_cast<int>(sorted_support.size()));
        try {
            for_each_cycle(
                e, len,
                [&](const CycleTuple& d) {
                    signatures.push_back(side_assignment(e, d)->vertex_side);
                    return true;
                },
                budget, &allowed);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::BudgetExceeded) {
                throw Error(ErrorKind::SupportTooLarge,
                            "cycle enumeration over the support exceeded the budget");
            }
            throw;
        }
    }
    return group_by_signature(e, sorted_support, signatures, in_support);
}

bool intersection_is_single_path(const CycleTuple& c1, const CycleTuple& c2) {
    std::vector<VertexId> common;
    for (VertexId v : c1.canonical) {
        if (c2.contains(v)) common.push_back(v);
    }
    if (common.empty()) return false;
    std::set<std::pair<VertexId, VertexId>> edges1(c1.edge_set.begin(), c1.edge_set.end());
    std::vector<std::pair<VertexId, VertexId>> shared_edges;
    for (const auto& ed : c2.edge_set) {
        if (edges1.count(ed)) shared_edges.push_back(ed);
    }
    if (shared_edges.size() + 1 != common.size()) return false;

    // Path check: degrees <= 2 and connected.
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : common) adj[v] = {};
    for (const auto& [a, b] : shared_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        if (adj[a].size() > 2 || adj[b].size() > 2) return false;
    }
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(common.front());
    seen.insert(common.front());
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : adj[x]) {
            if (seen.insert(y).second) q.push(y);
        }
    }
    return seen.size() == common.size();
}

NonTouchingReport verify_non_touching(const Embedding& e, const CycleTuple& c1,
                                      const CycleTuple& c2, const Budget& budget) {
    int common = 0;
    for (VertexId v : c1.canonical) {
        if (c2.contains(v)) ++common;
    }
    if (common < 2) {
        throw Error(ErrorKind::HypothesisNotMet, "cycles share fewer than 2 vertices");
    }

    std::vector<VertexId> support = sorted_union(c1.canonical, c2.canonical);
    RegionPartition regions =
        complementary_regions(e, support, static_cast<int>(support.size()), budget);

    std::vector<char> allowed(static_cast<size_t>(e.vertex_count()), 0);
    for (VertexId v : support) allowed[static_cast<size_t>(e.index_of(v))] = 1;
    std::vector<CycleTuple> candidates;
    for_each_cycle(
        e, static_cast<int>(support.size()),
        [&](const CycleTuple& d) {
            candidates.push_back(d);
            return true;
        },
        budget, &allowed);

    NonTouchingReport report;
    for (const auto& region : regions.classes) {
        VertexId b = region.front();
        bool found = false;
        for (const auto& d : candidates) {
            auto sa = side_assignment(e, d);
            if (sa->vertices_on(e, sa->side_of(e, b)) == region) {
                report.matched.push_back({region, d.canonical, b});
                found = true;
                break;
            }
        }
        if (!found) {
            report.all_matched = false;
            report.unmatched.push_back(region);
        }
    }
    return report;
}

} // namespace cyclesep
