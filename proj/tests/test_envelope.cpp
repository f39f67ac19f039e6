#include <doctest.h>

#include <queue>
#include <set>

#include "cyclesep/envelope.hpp"
#include "cyclesep/generators.hpp"
#include "fixtures.hpp"

using namespace cyclesep;
using json = nlohmann::json;

namespace {

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

TEST_CASE("octahedron marked sequences have no separators") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    MarkedSequence m{{0, 1, 2}, 6};
    for (int j = 0; j < 3; ++j) {
        CHECK(separators_of(e, m, j).empty());
        auto [x, external] = x_set(e, m, j);
        CHECK(x.empty());
        CHECK(external.empty());
    }
    EnvelopeData data = build_envelope(e, m);
    CHECK_FALSE(data.nod.has_value());
    CHECK_FALSE(data.nod_ambiguous);
    for (int j = 0; j < 3; ++j) {
        CHECK(data.h_sets[static_cast<size_t>(j)].empty());
        CHECK(data.envs[static_cast<size_t>(j)].empty());
    }
}

TEST_CASE("a face triple of K4 has empty separator families") {
    Embedding e = Embedding::from_json(fixtures::k4());
    MarkedSequence m{{0, 1, 2}, 4};
    for (int j = 0; j < 3; ++j) CHECK(separators_of(e, m, j).empty());
}

TEST_CASE("grapes envelopes") {
    GeneratorConfig cfg;
    cfg.kind = GenKind::Grapes;
    cfg.lobes = 3;
    GenResult r = gen(cfg);
    Embedding e = Embedding::from_json(r.document);
    MarkedSequence m{r.meta.marks, 4};
    EnvelopeData data = build_envelope(e, m);

    for (size_t j = 0; j < 3; ++j) {
        auto [p, q, a] = r.meta.lobes[j];
        REQUIRE(data.separators[j].size() == 1);
        CHECK(data.separators[j][0] == canonicalize_cycle(e, {0, p, q}));

        std::vector<VertexId> expected_x = {0, p, q, a};
        std::sort(expected_x.begin(), expected_x.end());
        CHECK(data.x_sets[j] == expected_x);

        std::vector<VertexId> expected_ext = {0, p, q};
        std::sort(expected_ext.begin(), expected_ext.end());
        CHECK(data.externals[j] == expected_ext);

        std::vector<VertexId> lobe = {p, q, a};
        std::sort(lobe.begin(), lobe.end());
        CHECK(data.h_sets[j] == lobe);
        CHECK(data.envs[j] == lobe); // the lobe minus the hub
    }
    REQUIRE(data.nod.has_value());
    CHECK(*data.nod == 0);
    CHECK_FALSE(data.nod_ambiguous);
    CHECK_FALSE(data.env_depends_on_aux);

    // env is closed under reachability avoiding nod.
    for (size_t j = 0; j < 3; ++j) {
        std::set<VertexId> env(data.envs[j].begin(), data.envs[j].end());
        for (VertexId v : data.envs[j]) {
            for (VertexId w : e.rotation_ids(v)) {
                if (w == *data.nod) continue;
                CHECK(env.count(w));
            }
        }
    }

    // The auxiliary index does not matter here.
    auto env_a1 = env_of(e, m, 0, data, 1);
    auto env_a2 = env_of(e, m, 0, data, 2);
    CHECK(env_a1 == env_a2);
}

TEST_CASE("external vertices of nested separators are the outermost cycle") {
    Embedding e = Embedding::from_json(fixtures::nested_separators());
    MarkedSequence m{{0, 7, 8}, 6};
    auto seps = separators_of(e, m, 0);
    std::set<std::vector<VertexId>> got;
    for (const auto& c : seps) got.insert(c.canonical);
    // Both rings separate; longer ring-weaving cycles join them at this bound.
    CHECK(got.count(canonicalize_cycle(e, {1, 2, 3}).canonical) == 1);
    CHECK(got.count(canonicalize_cycle(e, {4, 5, 6}).canonical) == 1);

    auto [x, external] = x_set_from(e, m, 0, seps);
    CHECK(x == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6});
    CHECK(external == std::vector<VertexId>{4, 5, 6});
}

TEST_CASE("double-hub X-sets leave nod ambiguous") {
    Embedding e = Embedding::from_json(fixtures::double_hub());
    MarkedSequence m{{3, 5, 7}, 4};
    EnvelopeData data = build_envelope(e, m);
    for (size_t j = 0; j < 3; ++j) CHECK_FALSE(data.x_sets[j].empty());
    CHECK_FALSE(data.nod.has_value());
    CHECK(data.nod_ambiguous);
}

TEST_CASE("nod is absent without a diagnostic when every X-set is empty") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    bool ambiguous = true;
    auto nod = nod_vertex(e, {{}, {}, {}}, &ambiguous);
    CHECK_FALSE(nod.has_value());
    CHECK_FALSE(ambiguous);
}

TEST_CASE("marked sequence validation") {
    Embedding e = Embedding::from_json(fixtures::octahedron());
    CHECK(kind_of([&] { validate_marked_sequence(e, {{0, 1}, 6}); }) == ErrorKind::UsageError);
    CHECK(kind_of([&] { validate_marked_sequence(e, {{0, 1, 1}, 6}); }) == ErrorKind::UsageError);
    CHECK(kind_of([&] { validate_marked_sequence(e, {{0, 1, 99}, 6}); }) ==
          ErrorKind::UnknownVertex);
    CHECK(kind_of([&] { separators_of(e, {{0, 1, 2}, 6}, 5); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("cycle nesting observation branches") {
    Embedding e = Embedding::from_json(fixtures::nesting_fixture());
    CycleTuple c = canonicalize_cycle(e, {0, 3, 4});  // inner lobe boundary
    CycleTuple c2 = canonicalize_cycle(e, {0, 6, 7}); // right lobe boundary
    CycleTuple d = canonicalize_cycle(e, {0, 1, 2});  // enclosing triangle

    CHECK(verify_cycle_nesting(e, c, c2, d, 5, 8, 5, 0) == NestingBranch::Containment);
    CHECK(verify_cycle_nesting(e, c, c2, d, 5, 8, 8, 0) == NestingBranch::AlmostDisjoint);

    // c and d sharing more than v violates hypothesis (3).
    CycleTuple overlapping = canonicalize_cycle(e, {0, 3, 1, 2});
    CHECK(kind_of([&] { verify_cycle_nesting(e, c, c2, overlapping, 5, 8, 5, 0); }) ==
          ErrorKind::HypothesisNotMet);

    // b on d.
    CHECK(kind_of([&] { verify_cycle_nesting(e, c, c2, d, 5, 8, 1, 0); }) ==
          ErrorKind::HypothesisNotMet);

    // a on one of the cycles.
    CHECK(kind_of([&] { verify_cycle_nesting(e, c, c2, d, 3, 8, 5, 0); }) ==
          ErrorKind::HypothesisNotMet);

    // Closures meeting beyond {v}: the enclosing triangle's closure around 5
    // swallows the inner lobe, so hypothesis (1) fails with c and d swapped.
    CHECK(kind_of([&] { verify_cycle_nesting(e, d, c2, c, 5, 8, 5, 0); }) ==
          ErrorKind::HypothesisNotMet);
}

TEST_CASE("separators respect the length bound") {
    Embedding e = Embedding::from_json(fixtures::nested_separators());
    MarkedSequence m{{0, 7, 8}, 3};
    auto seps = separators_of(e, m, 0);
    // At length 3 only the two rings qualify.
    REQUIRE(seps.size() == 2);
    std::set<std::vector<VertexId>> got;
    for (const auto& c : seps) got.insert(c.canonical);
    CHECK(got.count(canonicalize_cycle(e, {1, 2, 3}).canonical) == 1);
    CHECK(got.count(canonicalize_cycle(e, {4, 5, 6}).canonical) == 1);
}
