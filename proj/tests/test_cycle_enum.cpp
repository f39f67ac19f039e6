#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/generators.hpp"
#include "fixtures.hpp"

using namespace cyclesep;
using json = nlohmann::json;

namespace {

// Independent oracle: all simple cycles up to max_len by brute force over
// vertex subsets and their cyclic arrangements.
std::set<std::vector<VertexId>> brute_force_cycles(const Embedding& e, int max_len) {
    std::set<std::vector<VertexId>> out;
    int n = e.vertex_count();
    std::vector<VertexId> ids = e.vertex_ids();
    std::sort(ids.begin(), ids.end());

    std::function<void(size_t, std::vector<VertexId>&)> subsets = [&](size_t start,
                                                                      std::vector<VertexId>& cur) {
        if (cur.size() >= 3) {
            // All arrangements fixing the first element (kills rotations);
            // reflections collapse via the canonical form.
            std::vector<VertexId> rest(cur.begin() + 1, cur.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<VertexId> cyc = {cur[0]};
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                bool ok = true;
                for (size_t i = 0; i < cyc.size() && ok; ++i) {
                    if (!e.adjacent(e.index_of(cyc[i]), e.index_of(cyc[(i + 1) % cyc.size()]))) {
                        ok = false;
                    }
                }
                if (ok) out.insert(canonical_cycle_form(cyc));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (size_t i = start; i < ids.size(); ++i) {
            cur.push_back(ids[i]);
            subsets(i + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<VertexId> cur;
    subsets(0, cur);
    return out;
}

// Second path enumerator with different pruning and ordering.
std::set<std::vector<VertexId>> brute_force_paths(const Embedding& e, VertexId u, VertexId v,
                                                  int max_edges) {
    std::set<std::vector<VertexId>> out;
    std::vector<VertexId> path = {u};
    std::set<VertexId> used = {u};
    std::function<void(VertexId)> walk = [&](VertexId cur) {
        if (cur == v) {
            out.insert(path);
            return;
        }
        if (static_cast<int>(path.size()) > max_edges) return;
        std::vector<VertexId> nbrs = e.rotation_ids(cur);
        std::sort(nbrs.rbegin(), nbrs.rend());
        for (VertexId nb : nbrs) {
            if (used.count(nb)) continue;
            used.insert(nb);
            path.push_back(nb);
            walk(nb);
            path.pop_back();
            used.erase(nb);
        }
    };
    walk(u);
    return out;
}

} // namespace

TEST_CASE("triangle has exactly one cycle") {
    Embedding e = Embedding::from_json(fixtures::k3());
    auto cycles = enumerate_cycles(e, 3);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].canonical == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("octahedron cycle counts") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    CHECK(enumerate_cycles(e, 3).size() == 8);

    auto le4 = enumerate_cycles(e, 4);
    CHECK(le4.size() == brute_force_cycles(e, 4).size());
    CHECK(le4.size() == 23); // 8 triangles + 15 quadrilaterals

    auto all = enumerate_cycles(e, 6);
    CHECK(all.size() == 63); // the octahedron's full cycle count
    CHECK(all.size() == brute_force_cycles(e, 6).size());
}

TEST_CASE("enumeration matches brute force on small instances") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        GeneratorConfig cfg;
        cfg.kind = GenKind::StackedTriangulation;
        cfg.seed = seed;
        cfg.n = 9;
        Embedding e = Embedding::from_json(gen(cfg).document);
        auto got = enumerate_cycles(e, 6);
        std::set<std::vector<VertexId>> got_set;
        for (const auto& c : got) got_set.insert(c.canonical);
        CHECK(got_set.size() == got.size()); // no duplicates
        CHECK(got_set == brute_force_cycles(e, 6));
    }
}

TEST_CASE("through filter") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    auto through0 = enumerate_cycles(e, 6, {0});
    for (const auto& c : through0) CHECK(c.contains(0));

    auto all = enumerate_cycles(e, 6);
    size_t expected = 0;
    for (const auto& c : all) {
        if (c.contains(0)) ++expected;
    }
    CHECK(through0.size() == expected);

    auto both_poles = enumerate_cycles(e, 6, {0, 1});
    for (const auto& c : both_poles) {
        CHECK(c.contains(0));
        CHECK(c.contains(1));
    }
}

TEST_CASE("budget cap raises BudgetExceeded") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    Budget tiny{5};
    CHECK_THROWS_AS(enumerate_cycles(e, 6, {}, tiny), Error);
    try {
        enumerate_cycles(e, 6, {}, tiny);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("length bound preconditions") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    CHECK_THROWS_AS(enumerate_cycles(e, 2), Error);
    // A bound beyond |V| is clamped, not an error.
    CHECK(enumerate_cycles(e, 100).size() == 63);
}

TEST_CASE("path enumeration") {
    Embedding k3 = Embedding::from_json(fixtures::k3());
    auto paths = enumerate_paths(k3, 1, 2, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].vertices == std::vector<VertexId>{1, 2});
    CHECK(paths[1].vertices == std::vector<VertexId>{1, 3, 2});

    Embedding o = Embedding::from_json(fixtures::octahedron());
    auto pole_paths = enumerate_paths(o, 0, 1, 2);
    CHECK(pole_paths.size() == 4);
    for (const auto& p : pole_paths) {
        CHECK(p.first() == 0);
        CHECK(p.last() == 1);
        CHECK(p.edge_length() == 2);
    }

    CHECK_THROWS_AS(enumerate_paths(o, 0, 0, 3), Error);
}

TEST_CASE("path enumeration matches an independent walker") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.seed = 7;
    cfg.n = 10;
    Embedding e = Embedding::from_json(gen(cfg).document);
    auto got = enumerate_paths(e, 0, 1, 5);
    std::set<std::vector<VertexId>> got_set;
    for (const auto& p : got) got_set.insert(p.vertices);
    CHECK(got_set.size() == got.size());
    CHECK(got_set == brute_force_paths(e, 0, 1, 5));
}

TEST_CASE("enumeration order is deterministic") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    auto a = enumerate_cycles(e, 5);
    auto b = enumerate_cycles(e, 5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
