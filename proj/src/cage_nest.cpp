#include "cyclesep/cage_nest.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclesep {

namespace {

std::set<VertexId> vertex_set(const PathTuple& p) {
    return {p.vertices.begin(), p.vertices.end()};
}

std::set<VertexId> vertex_set(const CycleTuple& c) {
    return {c.canonical.begin(), c.canonical.end()};
}

// Side of each family member's off-cycle part w.r.t. `sa`; all member
// vertices off the cycle must agree.
Side member_side(const Embedding& e, const SideAssignment& sa,
                 const std::vector<VertexId>& member_vertices, const char* what) {
    std::optional<Side> side;
    for (VertexId v : member_vertices) {
        if (sa.cycle.contains(v)) continue;
        Side s = sa.side_of(e, v);
        if (!side) {
            side = s;
        } else if (*side != s) {
            throw Error(ErrorKind::AxiomViolation,
                        std::string(what) + " straddles both sides of a member cycle");
        }
    }
    if (!side) {
        throw Error(ErrorKind::AxiomViolation, std::string(what) + " lies entirely on a member cycle");
    }
    return *side;
}

} // namespace

CycleTuple cage_pair_cycle(const Embedding& e, const Cage& cage, int j, int k) {
    if (j < 0 || k < 0 || j >= cage.size() || k >= cage.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "cage path index out of range");
    }
    if (j == k) throw Error(ErrorKind::UsageError, "pair cycle needs two distinct paths");
    const auto& pj = cage.paths[static_cast<size_t>(j)].vertices;
    const auto& pk = cage.paths[static_cast<size_t>(k)].vertices;
    std::vector<VertexId> seq(pj.begin(), pj.end());
    for (size_t i = pk.size() - 1; i >= 2; --i) seq.push_back(pk[i - 1]); // k's interior, v back to u
    return canonicalize_cycle(e, seq);
}

void validate_cage(const Embedding& e, const Cage& cage) {
    int m = cage.size();
    if (m < 3) throw Error(ErrorKind::AxiomViolation, "cage needs at least 3 paths");
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            CycleTuple pair = cage_pair_cycle(e, cage, i, k);
            auto sa = side_assignment(e, pair);
            std::map<int, Side> sides;
            for (int l = 0; l < m; ++l) {
                if (l == i || l == k) continue;
                sides[l] = member_side(e, *sa, cage.paths[static_cast<size_t>(l)].vertices,
                                       "cage path interior");
            }
            for (int jj = 0; jj < m; ++jj) {
                if (jj == i || jj == k) continue;
                for (int ll = jj + 1; ll < m; ++ll) {
                    if (ll == i || ll == k) continue;
                    bool separated = sides[jj] != sides[ll];
                    bool jj_between = i < jj && jj < k;
                    bool ll_between = i < ll && ll < k;
                    if (separated != (jj_between != ll_between)) {
                        throw Error(ErrorKind::AxiomViolation,
                                    "cage separation axiom fails for pair (" + std::to_string(i) +
                                        "," + std::to_string(k) + ")");
                    }
                }
            }
        }
    }
}

CageOrNest order_family(const Embedding& e, const std::vector<PathTuple>& paths) {
    if (paths.size() < 3) throw Error(ErrorKind::NotAFamily, "need at least 3 paths");
    VertexId a = paths[0].first(), b = paths[0].last();
    if (a == b) throw Error(ErrorKind::NotAFamily, "path endpoints must be distinct");
    VertexId pole_u = std::min(a, b), pole_v = std::max(a, b);

    std::vector<PathTuple> oriented;
    for (const auto& p : paths) {
        std::set<VertexId> ends = {p.first(), p.last()};
        if (ends != std::set<VertexId>{pole_u, pole_v}) {
            throw Error(ErrorKind::NotAFamily, "paths do not share the same endpoint pair");
        }
        PathTuple q = p;
        if (q.first() != pole_u) std::reverse(q.vertices.begin(), q.vertices.end());
        if (q.vertices.size() < 3) {
            throw Error(ErrorKind::NotAFamily, "a cage path needs a nonempty interior");
        }
        oriented.push_back(std::move(q));
    }
    for (size_t i = 0; i < oriented.size(); ++i) {
        auto si = vertex_set(oriented[i]);
        for (size_t j = i + 1; j < oriented.size(); ++j) {
            std::vector<VertexId> common;
            for (VertexId v : vertex_set(oriented[j])) {
                if (si.count(v)) common.push_back(v);
            }
            if (common != std::vector<VertexId>{pole_u, pole_v}) {
                throw Error(ErrorKind::NotAFamily,
                            "paths must intersect exactly in the two poles");
            }
        }
    }

    // Cyclic order at pole u, read from the rotation over the first darts.
    std::map<VertexId, int> head_to_path;
    for (size_t i = 0; i < oriented.size(); ++i) {
        head_to_path[oriented[i].vertices[1]] = static_cast<int>(i);
    }
    std::vector<int> cyclic;
    for (VertexId w : e.rotation_ids(pole_u)) {
        auto it = head_to_path.find(w);
        if (it != head_to_path.end()) cyclic.push_back(it->second);
    }
    if (cyclic.size() != oriented.size()) {
        throw Error(ErrorKind::AxiomViolation, "rotation at the pole lost a path head");
    }

    // Cut right after the path whose first dart has the least head id.
    size_t cut = 0;
    for (size_t i = 1; i < cyclic.size(); ++i) {
        if (oriented[static_cast<size_t>(cyclic[i])].vertices[1] <
            oriented[static_cast<size_t>(cyclic[cut])].vertices[1]) {
            cut = i;
        }
    }
    Cage cage;
    cage.pole_u = pole_u;
    cage.pole_v = pole_v;
    for (size_t i = 1; i <= cyclic.size(); ++i) {
        cage.paths.push_back(oriented[static_cast<size_t>(cyclic[(cut + i) % cyclic.size()])]);
    }
    validate_cage(e, cage);
    return cage;
}

void validate_nest(const Embedding& e, const Nest& nest) {
    int m = nest.size();
    if (m < 3) throw Error(ErrorKind::AxiomViolation, "nest needs at least 3 cycles");
    // Chain of chosen sides, strictly increasing.
    std::vector<std::vector<VertexId>> chain;
    for (int j = 0; j < m; ++j) {
        auto sa = side_assignment(e, nest.cycles[static_cast<size_t>(j)]);
        chain.push_back(sa->vertices_on(e, nest.chosen_side[static_cast<size_t>(j)]));
    }
    for (int j = 0; j + 1 < m; ++j) {
        if (!std::includes(chain[static_cast<size_t>(j + 1)].begin(),
                           chain[static_cast<size_t>(j + 1)].end(),
                           chain[static_cast<size_t>(j)].begin(),
                           chain[static_cast<size_t>(j)].end()) ||
            chain[static_cast<size_t>(j)].size() >= chain[static_cast<size_t>(j + 1)].size()) {
            throw Error(ErrorKind::AxiomViolation, "nest sides are not strictly nested");
        }
    }
    for (int j = 1; j + 1 < m; ++j) {
        auto sa = side_assignment(e, nest.cycles[static_cast<size_t>(j)]);
        for (int i = 0; i < j; ++i) {
            for (int k = j + 1; k < m; ++k) {
                Side si = member_side(e, *sa, nest.cycles[static_cast<size_t>(i)].canonical,
                                      "nest cycle");
                Side sk = member_side(e, *sa, nest.cycles[static_cast<size_t>(k)].canonical,
                                      "nest cycle");
                if (si == sk) {
                    throw Error(ErrorKind::AxiomViolation,
                                "middle cycle fails to separate its neighbors");
                }
            }
        }
    }
}

CageOrNest order_family(const Embedding& e, const std::vector<CycleTuple>& cycles) {
    int m = static_cast<int>(cycles.size());
    if (m < 3) throw Error(ErrorKind::NotAFamily, "need at least 3 cycles");
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (cycles[static_cast<size_t>(i)] == cycles[static_cast<size_t>(j)]) {
                throw Error(ErrorKind::NotAFamily, "family cycles must be distinct");
            }
        }
    }

    std::optional<VertexId> pole;
    bool first_pair = true;
    for (int i = 0; i < m; ++i) {
        auto si = vertex_set(cycles[static_cast<size_t>(i)]);
        for (int j = i + 1; j < m; ++j) {
            std::vector<VertexId> common;
            for (VertexId v : cycles[static_cast<size_t>(j)].canonical) {
                if (si.count(v)) common.push_back(v);
            }
            std::optional<VertexId> here;
            if (common.size() == 1) here = common.front();
            else if (!common.empty()) {
                throw Error(ErrorKind::NotAFamily, "cycles share more than one vertex");
            }
            if (first_pair) {
                pole = here;
                first_pair = false;
            } else if (pole != here) {
                throw Error(ErrorKind::NotAFamily,
                            "cycles must be pairwise disjoint or all share one pole vertex");
            }
        }
    }

    // side_mat[i][j]: the side of cycle j holding cycle i's off-j vertices.
    std::vector<std::vector<Side>> side_mat(static_cast<size_t>(m),
                                            std::vector<Side>(static_cast<size_t>(m), Side::Side0));
    for (int j = 0; j < m; ++j) {
        auto sa = side_assignment(e, cycles[static_cast<size_t>(j)]);
        for (int i = 0; i < m; ++i) {
            if (i == j) continue;
            side_mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                member_side(e, *sa, cycles[static_cast<size_t>(i)].canonical, "nest cycle");
        }
    }

    // An end of the order sees every other cycle on a single side.
    std::vector<int> extremal;
    for (int i = 0; i < m; ++i) {
        std::set<Side> seen;
        for (int j = 0; j < m; ++j) {
            if (j != i) seen.insert(side_mat[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        }
        if (seen.size() == 1) extremal.push_back(i);
    }
    if (extremal.empty()) {
        throw Error(ErrorKind::AxiomViolation, "family admits no nest order");
    }
    int eps = extremal.front();
    for (int c : extremal) {
        if (cycles[static_cast<size_t>(c)].canonical < cycles[static_cast<size_t>(eps)].canonical) {
            eps = c;
        }
    }

    // Everything else ordered by the size of the side facing the end.
    std::vector<std::pair<size_t, int>> ranked;
    for (int j = 0; j < m; ++j) {
        if (j == eps) continue;
        auto sa = side_assignment(e, cycles[static_cast<size_t>(j)]);
        Side toward_eps = side_mat[static_cast<size_t>(eps)][static_cast<size_t>(j)];
        ranked.emplace_back(sa->vertices_on(e, toward_eps).size(), j);
    }
    std::sort(ranked.begin(), ranked.end());

    Nest nest;
    nest.pole = pole;
    nest.cycles.push_back(cycles[static_cast<size_t>(eps)]);
    Side others_of_eps = side_mat[static_cast<size_t>(ranked.front().second)][static_cast<size_t>(eps)];
    nest.chosen_side.push_back(opposite(others_of_eps));
    for (const auto& [sz, j] : ranked) {
        nest.cycles.push_back(cycles[static_cast<size_t>(j)]);
        nest.chosen_side.push_back(side_mat[static_cast<size_t>(eps)][static_cast<size_t>(j)]);
    }

    if (nest.cycles.back().canonical < nest.cycles.front().canonical) {
        std::reverse(nest.cycles.begin(), nest.cycles.end());
        std::reverse(nest.chosen_side.begin(), nest.chosen_side.end());
        for (auto& s : nest.chosen_side) s = opposite(s);
    }
    validate_nest(e, nest);
    return nest;
}

Region cage_region(const Embedding& e, const Cage& cage, int j, int k) {
    int m = cage.size();
    if (j < 0 || k < 0 || j >= m || k >= m) {
        throw Error(ErrorKind::IndexOutOfRange, "cage region indices out of range");
    }
    if (j == k) throw Error(ErrorKind::UsageError, "cage region needs distinct indices");
    int lo = std::min(j, k), hi = std::max(j, k);

    CycleTuple pair = cage_pair_cycle(e, cage, lo, hi);
    auto sa = side_assignment(e, pair);

    std::optional<Side> between_side, outside_side;
    for (int l = 0; l < m; ++l) {
        if (l == lo || l == hi) continue;
        Side s = member_side(e, *sa, cage.paths[static_cast<size_t>(l)].vertices, "cage path");
        auto& slot = (lo < l && l < hi) ? between_side : outside_side;
        if (slot && *slot != s) {
            throw Error(ErrorKind::AxiomViolation, "cage region witnesses disagree");
        }
        slot = s;
    }
    Side region_side;
    if (between_side) {
        region_side = *between_side;
        if (outside_side && *outside_side == *between_side) {
            throw Error(ErrorKind::AxiomViolation, "cage region witnesses disagree");
        }
    } else {
        region_side = opposite(*outside_side);
    }

    Region r;
    r.kind = Region::Kind::CageRegion;
    r.j = lo;
    r.k = hi;
    r.vertices = sa->vertices_on(e, region_side);
    return r;
}

Region nest_region(const Embedding& e, const Nest& nest, int j, int k) {
    int m = nest.size();
    if (j < 0 || k < 0 || j >= m || k >= m) {
        throw Error(ErrorKind::IndexOutOfRange, "nest region indices out of range");
    }
    if (j >= k) throw Error(ErrorKind::UsageError, "nest region needs j < k");
    auto sa_k = side_assignment(e, nest.cycles[static_cast<size_t>(k)]);
    auto sa_j = side_assignment(e, nest.cycles[static_cast<size_t>(j)]);
    std::vector<VertexId> big = sa_k->vertices_on(e, nest.chosen_side[static_cast<size_t>(k)]);
    std::set<VertexId> small;
    for (VertexId v : sa_j->vertices_on(e, nest.chosen_side[static_cast<size_t>(j)])) small.insert(v);
    for (VertexId v : nest.cycles[static_cast<size_t>(j)].canonical) small.insert(v);

    Region r;
    r.kind = Region::Kind::NestRegion;
    r.j = j;
    r.k = k;
    for (VertexId v : big) {
        if (!small.count(v)) r.vertices.push_back(v);
    }
    return r;
}

Region region_of(const Embedding& e, const CageOrNest& d, int j, int k) {
    if (std::holds_alternative<Cage>(d)) return cage_region(e, std::get<Cage>(d), j, k);
    return nest_region(e, std::get<Nest>(d), std::min(j, k), std::max(j, k));
}

std::vector<VertexId> poles_of(const CageOrNest& d) {
    if (std::holds_alternative<Cage>(d)) {
        const auto& c = std::get<Cage>(d);
        return {c.pole_u, c.pole_v};
    }
    const auto& n = std::get<Nest>(d);
    if (n.pole) return {*n.pole};
    return {};
}

InteriorSets interior(const Embedding& e, const CageOrNest& d) {
    int m = std::holds_alternative<Cage>(d) ? std::get<Cage>(d).size() : std::get<Nest>(d).size();
    std::set<VertexId> inside;
    for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
            Region r = region_of(e, d, j, k);
            inside.insert(r.vertices.begin(), r.vertices.end());
        }
    }
    InteriorSets sets;
    sets.interior.assign(inside.begin(), inside.end());
    for (VertexId v : e.vertex_ids()) {
        if (!inside.count(v)) sets.exterior.push_back(v);
    }
    std::sort(sets.exterior.begin(), sets.exterior.end());
    std::set<VertexId> clint = inside;
    for (VertexId p : poles_of(d)) clint.insert(p);
    sets.closed_interior.assign(clint.begin(), clint.end());
    return sets;
}

FitResult fits_into(const Embedding& e, const std::vector<VertexId>& seq, const CageOrNest& d) {
    if (seq.size() < 3) throw Error(ErrorKind::UsageError, "sequence needs at least 3 elements");
    std::set<VertexId> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) {
        throw Error(ErrorKind::UsageError, "sequence elements must be distinct");
    }
    for (VertexId v : seq) e.index_of(v);

    // Condition (i): the sequence avoids every family member.
    std::set<VertexId> member_vertices;
    if (std::holds_alternative<Cage>(d)) {
        for (const auto& p : std::get<Cage>(d).paths) {
            member_vertices.insert(p.vertices.begin(), p.vertices.end());
        }
    } else {
        for (const auto& c : std::get<Nest>(d).cycles) {
            member_vertices.insert(c.canonical.begin(), c.canonical.end());
        }
    }
    for (VertexId v : seq) {
        if (member_vertices.count(v)) return {};
    }

    int m = static_cast<int>(seq.size());
    int members =
        std::holds_alternative<Cage>(d) ? std::get<Cage>(d).size() : std::get<Nest>(d).size();
    if (members < m + 1) return {};

    // capture[j][k]: bitmask of sequence elements inside D_{j,k}.
    std::vector<std::vector<unsigned>> capture(static_cast<size_t>(members),
                                               std::vector<unsigned>(static_cast<size_t>(members), 0));
    for (int j = 0; j < members; ++j) {
        for (int k = j + 1; k < members; ++k) {
            Region r = region_of(e, d, j, k);
            std::set<VertexId> rv(r.vertices.begin(), r.vertices.end());
            unsigned mask = 0;
            for (int l = 0; l < m; ++l) {
                if (rv.count(seq[static_cast<size_t>(l)])) mask |= 1u << l;
            }
            capture[static_cast<size_t>(j)][static_cast<size_t>(k)] = mask;
        }
    }

    std::vector<int> chain;
    std::function<bool(int, int)> search = [&](int prev, int next_element) {
        if (next_element == m) return true;
        for (int jn = prev + 1; jn < members; ++jn) {
            if (capture[static_cast<size_t>(prev)][static_cast<size_t>(jn)] !=
                (1u << next_element)) {
                continue;
            }
            chain.push_back(jn);
            if (search(jn, next_element + 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    for (int j0 = 0; j0 + m < members; ++j0) {
        chain = {j0};
        if (search(j0, 0)) {
            return {true, chain};
        }
    }
    return {};
}

CageOrNest trim(const Embedding& e, const CageOrNest& d, const std::vector<int>& keep) {
    std::vector<int> idx = keep;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.size() < 3) throw Error(ErrorKind::TooFewMembers, "trim needs at least 3 members");
    int m = std::holds_alternative<Cage>(d) ? std::get<Cage>(d).size() : std::get<Nest>(d).size();
    if (idx.front() < 0 || idx.back() >= m) {
        throw Error(ErrorKind::IndexOutOfRange, "trim index out of range");
    }
    if (std::holds_alternative<Cage>(d)) {
        const auto& cage = std::get<Cage>(d);
        Cage out;
        out.pole_u = cage.pole_u;
        out.pole_v = cage.pole_v;
        for (int i : idx) out.paths.push_back(cage.paths[static_cast<size_t>(i)]);
        validate_cage(e, out);
        return out;
    }
    const auto& nest = std::get<Nest>(d);
    Nest out;
    out.pole = nest.pole;
    for (int i : idx) {
        out.cycles.push_back(nest.cycles[static_cast<size_t>(i)]);
        out.chosen_side.push_back(nest.chosen_side[static_cast<size_t>(i)]);
    }
    validate_nest(e, out);
    return out;
}

} // namespace cyclesep
