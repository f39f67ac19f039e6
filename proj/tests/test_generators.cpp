#include <doctest.h>

#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/generators.hpp"
#include "cyclesep/oracle.hpp"
#include "cyclesep/rng.hpp"
#include "cyclesep/separation.hpp"
#include "fixtures.hpp"

using namespace cyclesep;
using json = nlohmann::json;

TEST_CASE("generators are byte-deterministic") {
    for (GenKind kind : {GenKind::StackedTriangulation, GenKind::Onion, GenKind::Grapes,
                         GenKind::PlantedCage}) {
        GeneratorConfig cfg;
        cfg.kind = kind;
        cfg.seed = 42;
        cfg.n = 25;
        CHECK(gen(cfg).document.dump() == gen(cfg).document.dump());
    }

    GeneratorConfig a, b;
    a.kind = b.kind = GenKind::StackedTriangulation;
    a.n = b.n = 30;
    a.seed = 1;
    b.seed = 2;
    CHECK(gen(a).document.dump() != gen(b).document.dump());
}

TEST_CASE("every generator kind loads and satisfies Euler") {
    std::vector<GeneratorConfig> configs(4);
    configs[0].kind = GenKind::StackedTriangulation;
    configs[0].n = 40;
    configs[0].seed = 9;
    configs[1].kind = GenKind::Onion;
    configs[1].rings = 4;
    configs[1].ring_size = 5;
    configs[2].kind = GenKind::Grapes;
    configs[2].lobes = 5;
    configs[3].kind = GenKind::PlantedCage;
    configs[3].cage_paths = 6;
    configs[3].path_len = 2;
    configs[3].spread = 2;
    for (const auto& cfg : configs) {
        Embedding e = Embedding::from_json(gen(cfg).document);
        CHECK(e.vertex_count() - e.edge_count() + e.face_count() == 2);
        CHECK(e.has_coords());
    }
}

TEST_CASE("generator metadata matches the instance") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::PlantedCage;
    cfg.cage_paths = 6;
    cfg.path_len = 2;
    cfg.spread = 2;
    GenResult r = gen(cfg);
    CHECK(r.meta.marks.size() == 3);
    CHECK(r.meta.cage_paths.size() == 6);
    CHECK(r.meta.poles.has_value());

    GeneratorConfig onion;
    onion.kind = GenKind::Onion;
    onion.rings = 5;
    onion.ring_size = 3;
    GenResult o = gen(onion);
    CHECK(o.meta.rings.size() == 5);
    Embedding e = Embedding::from_json(o.document);
    for (const auto& ring : o.meta.rings) {
        CHECK(canonicalize_cycle(e, ring).length() == 3);
    }
}

TEST_CASE("bad generator configs are rejected") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.n = 2;
    CHECK_THROWS_AS(gen(cfg), Error);

    GeneratorConfig onion;
    onion.kind = GenKind::Onion;
    onion.rings = 2;
    CHECK_THROWS_AS(gen(onion), Error);

    CHECK_THROWS_AS(gen_kind_from_string("nope"), Error);
    CHECK(gen_kind_from_string("stacked") == GenKind::StackedTriangulation);
    CHECK(gen_kind_from_string("planted_cage") == GenKind::PlantedCage);
}

TEST_CASE("removing the last stacked vertex keeps the document valid") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.seed = 3;
    cfg.n = 12;
    GenResult r = gen(cfg);
    json doc = r.document;
    for (auto it = r.meta.insertion_order.rbegin(); it != r.meta.insertion_order.rend(); ++it) {
        doc = remove_vertex_from_document(doc, *it);
        Embedding e = Embedding::from_json(doc);
        CHECK(e.vertex_count() - e.edge_count() + e.face_count() == 2);
    }
    CHECK(Embedding::from_json(doc).vertex_count() == 3);
}

TEST_CASE("ray casting oracle on a unit square") {
    std::vector<std::array<double, 2>> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(point_in_polygon(square, {0.5, 0.5}) == GeoSide::Inside);
    CHECK(point_in_polygon(square, {10.0, 10.0}) == GeoSide::Outside);
    CHECK(point_in_polygon(square, {-0.5, 0.5}) == GeoSide::Outside);
    CHECK_THROWS_AS(point_in_polygon(square, {0.5, 0.0}), Error);
    CHECK_THROWS_AS(point_in_polygon(square, {1.0, 1.0}), Error);
}

TEST_CASE("combinatorial sides agree with the geometric oracle") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::StackedTriangulation;
    cfg.seed = 21;
    cfg.n = 24;
    Embedding e = Embedding::from_json(gen(cfg).document);

    Rng rng(99);
    std::vector<CycleTuple> cycles = enumerate_cycles(e, 7);
    for (int q = 0; q < 300; ++q) {
        const CycleTuple& c = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        std::vector<VertexId> off;
        for (VertexId v : e.vertex_ids()) {
            if (!c.contains(v)) off.push_back(v);
        }
        if (off.size() < 2) continue;
        VertexId v = off[static_cast<size_t>(rng.below(off.size()))];
        VertexId w = off[static_cast<size_t>(rng.below(off.size()))];
        auto sa = side_assignment(e, c);
        bool side_equal = sa->side_of(e, v) == sa->side_of(e, w);
        bool geo_equal = geometric_oracle(e, c, v) == geometric_oracle(e, c, w);
        CHECK(side_equal == geo_equal);
    }
}

TEST_CASE("rng is stable across runs") {
    Rng a(7), b(7);
    for (int i = 0; i < 8; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(7);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t x = c.below(10);
        CHECK(x < 10);
    }
}
