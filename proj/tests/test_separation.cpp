#include <doctest.h>

#include <atomic>
#include <set>
#include <thread>

#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/generators.hpp"
#include "cyclesep/separation.hpp"
#include "fixtures.hpp"

using namespace cyclesep;
using json = nlohmann::json;

namespace {

Embedding oct() { return Embedding::from_json(fixtures::octahedron()); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::UsageError;
}

} // namespace

TEST_CASE("cycle canonicalization") {
    Embedding e = Embedding::from_json(fixtures::k3());

    CycleTuple c = canonicalize_cycle(e, {1, 1, 2, 3, 3});
    CHECK(c.canonical == std::vector<VertexId>{1, 2, 3});

    CHECK(canonicalize_cycle(e, {1, 2, 3}) == canonicalize_cycle(e, {3, 2, 1}));
    CHECK(canonicalize_cycle(e, {1, 2, 3}) == canonicalize_cycle(e, {2, 3, 1}));
    CHECK(canonicalize_cycle(e, {3, 1, 2, 3}).canonical == std::vector<VertexId>{1, 2, 3});

    // Idempotent on its own output.
    CHECK(canonicalize_cycle(e, c.canonical) == c);

    CHECK(kind_of([&] { canonicalize_cycle(e, {1, 2, 1, 3}); }) == ErrorKind::NotACycle);
    CHECK(kind_of([&] { canonicalize_cycle(e, {1, 2}); }) == ErrorKind::NotACycle);
    CHECK(kind_of([&] { canonicalize_cycle(e, {}); }) == ErrorKind::NotACycle);
    CHECK(kind_of([&] { canonicalize_cycle(e, {1, 2, 9}); }) == ErrorKind::UnknownVertex);

    Embedding o = oct();
    CHECK(kind_of([&] { canonicalize_cycle(o, {2, 3, 5}); }) == ErrorKind::NotACycle);
}

TEST_CASE("octahedron side assignments") {
    Embedding e = oct();
    CycleTuple equator = canonicalize_cycle(e, {2, 3, 4, 5});
    auto sa = side_assignment(e, equator);
    CHECK(sa->side_of(e, 0) != sa->side_of(e, 1));
    CHECK(sa->side_of(e, 2) == Side::OnCycle);

    // Memo table returns the same object.
    CHECK(side_assignment(e, equator).get() == sa.get());

    CycleTuple face = canonicalize_cycle(e, {0, 2, 3});
    auto sf = side_assignment(e, face);
    CHECK(sf->side_of(e, 1) == sf->side_of(e, 4));
    CHECK(sf->side_of(e, 1) == sf->side_of(e, 5));
}

TEST_CASE("jordan split counts two dual components") {
    Embedding e = oct();
    for (const auto& c : enumerate_cycles(e, 6)) {
        CHECK(dual_split_count(e, c) == 2);
    }
}

TEST_CASE("separation predicate on the octahedron") {
    Embedding e = oct();
    CHECK_FALSE(r_predicate(e, 0, 1, {2, 3, 4, 5})); // poles split by the equator
    CHECK(r_predicate(e, 1, 4, {0, 2, 3}));          // both outside a face
    CHECK_FALSE(r_predicate(e, 2, 1, {2, 3, 4, 5})); // a lies on the cycle
    CHECK_FALSE(r_predicate(e, 0, 1, {2, 3, 5}));    // not a cycle: false, not an error
    CHECK_FALSE(r_predicate(e, 0, 1, {2, 3}));
    CHECK(kind_of([&] { r_predicate(e, 0, 99, {2, 3, 4, 5}); }) == ErrorKind::UnknownVertex);
    // Reflexive when off the cycle.
    CHECK(r_predicate(e, 0, 0, {2, 3, 4, 5}));
}

TEST_CASE("side sets") {
    Embedding e = oct();
    CycleTuple equator = canonicalize_cycle(e, {2, 3, 4, 5});
    auto [pos, neg] = side_sets(e, equator, 0);
    CHECK(pos == std::vector<VertexId>{0});
    CHECK(neg == std::vector<VertexId>{1});

    CycleTuple face = canonicalize_cycle(e, {0, 2, 3});
    auto [pos2, neg2] = side_sets(e, face, 1);
    CHECK(pos2 == std::vector<VertexId>{1, 4, 5});
    CHECK(neg2.empty());

    CHECK(kind_of([&] { side_sets(e, equator, 2); }) == ErrorKind::VertexOnCycle);

    // Partition: positive u negative u cycle = V, disjointly.
    std::set<VertexId> all(pos.begin(), pos.end());
    all.insert(neg.begin(), neg.end());
    all.insert(equator.canonical.begin(), equator.canonical.end());
    CHECK(all.size() == 6);
}

TEST_CASE("crossing of cycles") {
    Embedding e = oct();
    CycleTuple equator = canonicalize_cycle(e, {2, 3, 4, 5});
    CycleTuple face = canonicalize_cycle(e, {0, 2, 3});
    CHECK_FALSE(crosses(e, equator, face));

    CycleTuple m1 = canonicalize_cycle(e, {0, 2, 1, 4});
    CycleTuple m2 = canonicalize_cycle(e, {0, 3, 1, 5});
    CHECK(crosses(e, m1, m2));
    CHECK(crosses(e, m2, m1));

    CHECK(kind_of([&] { crosses(e, equator, canonicalize_cycle(e, {3, 4, 5, 2})); }) ==
          ErrorKind::UsageError);
}

TEST_CASE("joint classes") {
    Embedding e = oct();
    CycleTuple equator = canonicalize_cycle(e, {2, 3, 4, 5});
    CycleTuple face = canonicalize_cycle(e, {0, 2, 3});
    RegionPartition part = joint_classes(e, equator, face);
    CHECK(part.support == std::vector<VertexId>{0, 2, 3, 4, 5});
    CHECK(part.classes == std::vector<std::vector<VertexId>>{{1}});

    // Two disjoint nested rings with material on all three levels.
    GeneratorConfig cfg;
    cfg.kind = GenKind::Onion;
    cfg.rings = 5;
    cfg.ring_size = 4;
    GenResult onion = gen(cfg);
    Embedding o = Embedding::from_json(onion.document);
    CycleTuple r2 = canonicalize_cycle(o, onion.meta.rings[1]);
    CycleTuple r4 = canonicalize_cycle(o, onion.meta.rings[3]);
    CHECK_FALSE(crosses(o, r2, r4));
    RegionPartition rings = joint_classes(o, r2, r4);
    CHECK(rings.classes.size() == 3);
}

TEST_CASE("complementary regions") {
    Embedding e = oct();

    RegionPartition face_region = complementary_regions(e, {0, 2, 3}, 3);
    CHECK(face_region.classes == std::vector<std::vector<VertexId>>{{1, 4, 5}});

    RegionPartition empty_support = complementary_regions(e, {}, 3);
    CHECK(empty_support.classes.size() == 1);
    CHECK(empty_support.classes[0] == std::vector<VertexId>{0, 1, 2, 3, 4, 5});

    Budget tiny{2};
    CHECK(kind_of([&] {
        complementary_regions(e, {0, 1, 2, 3, 4, 5}, 6, tiny);
    }) == ErrorKind::SupportTooLarge);
}

TEST_CASE("joint classes equal complementary regions over the union support") {
    // Cube, two face cycles sharing an edge.
    Embedding e = Embedding::from_json(fixtures::cube());
    CycleTuple inner = canonicalize_cycle(e, {0, 1, 2, 3});
    CycleTuple side = canonicalize_cycle(e, {0, 1, 5, 4});
    RegionPartition joint = joint_classes(e, inner, side);
    RegionPartition comp = complementary_regions(e, joint.support, 6);
    // The complementary relation refines the two-cycle relation; on this
    // support they coincide.
    CHECK(joint.classes == comp.classes);
}

TEST_CASE("non-touching witnesses") {
    Embedding cube = Embedding::from_json(fixtures::cube());
    CycleTuple inner = canonicalize_cycle(cube, {0, 1, 2, 3});
    CycleTuple side = canonicalize_cycle(cube, {0, 1, 5, 4});
    NonTouchingReport rep = verify_non_touching(cube, inner, side);
    CHECK(rep.all_matched);
    CHECK(rep.matched.size() == 1);
    CHECK(rep.matched[0].region == std::vector<VertexId>{6, 7});

    Embedding o = oct();
    CycleTuple m1 = canonicalize_cycle(o, {0, 2, 1, 4});
    CycleTuple m2 = canonicalize_cycle(o, {0, 3, 1, 5});
    NonTouchingReport rep2 = verify_non_touching(o, m1, m2);
    CHECK(rep2.all_matched); // no off-union vertices: vacuous
    CHECK(rep2.matched.empty());

    CycleTuple f1 = canonicalize_cycle(o, {0, 2, 3});
    CycleTuple f2 = canonicalize_cycle(o, {1, 3, 4});
    CHECK(kind_of([&] { verify_non_touching(o, f1, f2); }) == ErrorKind::HypothesisNotMet);
}

TEST_CASE("sparse vertex ids flow through unchanged") {
    json doc = {{"vertices", {42, 7, 900}},
                {"rotation", {{"42", {7, 900}}, {"7", {42, 900}}, {"900", {42, 7}}}}};
    Embedding e = Embedding::from_json(doc);
    CHECK(e.face_count() == 2);
    CycleTuple c = canonicalize_cycle(e, {900, 42, 7});
    CHECK(c.canonical == std::vector<VertexId>{7, 42, 900});
    CHECK(r_predicate(e, 7, 7, {42, 900, 7}) == false); // 7 lies on the cycle
}

TEST_CASE("cycles sharing exactly one vertex do not cross") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::Grapes;
    cfg.lobes = 3;
    GenResult r = gen(cfg);
    Embedding e = Embedding::from_json(r.document);
    CycleTuple p1 = canonicalize_cycle(e, {0, r.meta.lobes[0][0], r.meta.lobes[0][1]});
    CycleTuple p2 = canonicalize_cycle(e, {0, r.meta.lobes[1][0], r.meta.lobes[1][1]});
    CHECK(intersection_is_single_path(p1, p2)); // the hub alone
    CHECK_FALSE(crosses(e, p1, p2));
}

TEST_CASE("side assignments are safe to compute from several threads") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.seed = 17;
    cfg.n = 20;
    Embedding e = Embedding::from_json(gen(cfg).document);
    auto cycles = enumerate_cycles(e, 6);

    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&] {
            for (const auto& c : cycles) {
                auto sa = side_assignment(e, c);
                if (sa->cycle.canonical != c.canonical) ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("single-path intersections never cross") {
    Embedding e = oct();
    CycleTuple f1 = canonicalize_cycle(e, {0, 2, 3});
    CycleTuple f2 = canonicalize_cycle(e, {1, 2, 3});
    CHECK(intersection_is_single_path(f1, f2)); // shared edge 2-3
    CHECK_FALSE(crosses(e, f1, f2));

    CycleTuple m1 = canonicalize_cycle(e, {0, 2, 1, 4});
    CycleTuple m2 = canonicalize_cycle(e, {0, 3, 1, 5});
    CHECK_FALSE(intersection_is_single_path(m1, m2)); // two isolated shared vertices

    CycleTuple equator = canonicalize_cycle(e, {2, 3, 4, 5});
    CycleTuple face = canonicalize_cycle(e, {0, 2, 3});
    CHECK(intersection_is_single_path(equator, face)); // shared edge (2,3)
}
