#include <doctest.h>

#include <algorithm>

#include "cyclesep/error.hpp"
#include "cyclesep/verify.hpp"

using namespace cyclesep;
using json = nlohmann::json;

TEST_CASE("property registry") {
    auto ids = property_ids();
    for (const char* want : {"euler_genus", "jordan_split", "oracle_agreement", "prop_a_subpath",
                             "prop_b_symmetry", "prop_c_classes", "remark_single_path",
                             "order_property", "non_touching", "nest_recovery", "nod_recovery",
                             "fit_recovery", "envelope_crosscheck"}) {
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
    }
    CHECK_THROWS_AS(verify("no_such_property", 1, 0), Error);
}

TEST_CASE("theorem-backed properties pass on fresh instances") {
    CHECK(verify("euler_genus", 8, 1).passed());
    CHECK(verify("jordan_split", 2, 7).passed());
    CHECK(verify("oracle_agreement", 1, 7).passed());
    CHECK(verify("prop_a_subpath", 1, 3).passed());
    CHECK(verify("prop_b_symmetry", 1, 3).passed());
    CHECK(verify("prop_c_classes", 1, 3).passed());
    CHECK(verify("remark_single_path", 1, 3).passed());
    CHECK(verify("order_property", 3, 5).passed());
    CHECK(verify("non_touching", 3, 5).passed());
    CHECK(verify("nest_recovery", 3, 5).passed());
    CHECK(verify("nod_recovery", 3, 5).passed());
    CHECK(verify("fit_recovery", 2, 5).passed());
    CHECK(verify("envelope_crosscheck", 2, 5).passed());
}

TEST_CASE("checks are counted") {
    PropertyReport report = verify("prop_b_symmetry", 1, 3);
    CHECK(report.checks >= 50);
    CHECK(report.trials == 1);
}

TEST_CASE("a corrupted side function is caught, shrunk, and replayable") {
    VerifyOptions opts;
    opts.corrupt_sides = true;
    PropertyReport report = verify("oracle_agreement", 1, 11, opts);
    REQUIRE_FALSE(report.passed());

    // The witness shrank to fewer vertices than the generated instance.
    const FailureWitness& w = report.failures.front();
    CHECK(w.document["vertices"].size() < 16);

    // Replaying under the recorded options still fails.
    json report_json = report.to_json(true);
    auto still_failing = replay(report_json);
    CHECK(still_failing.size() == report.failures.size());

    // The same witness replayed without the corruption passes.
    json clean = report_json["failures"][0];
    clean["options"]["corrupt_sides"] = false;
    CHECK(replay(clean).empty());
}

TEST_CASE("reports serialize deterministically") {
    PropertyReport a = verify("euler_genus", 4, 2);
    PropertyReport b = verify("euler_genus", 4, 2);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_json()["failures"].empty());
    CHECK(a.to_json()["property"] == "euler_genus");
}
