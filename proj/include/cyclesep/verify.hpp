#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclesep/budget.hpp"

namespace cyclesep {

struct VerifyOptions {
    Budget budget;
    // Test fixture: deliberately misreads one combinatorial side label per
    // oracle-agreement query, to prove the harness catches injected bugs.
    bool corrupt_sides = false;
};

struct FailureWitness {
    int trial = 0;
    nlohmann::json document; // shrunk instance
    nlohmann::json args;     // the failing query, enough to replay
    std::string message;
};

struct PropertyReport {
    std::string property;
    int trials = 0;
    int checks = 0; // individual query checks executed
    std::vector<FailureWitness> failures;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json(bool corrupt_sides = false) const; // deterministic (no timing)
};

std::vector<std::string> property_ids();

// Runs `trials` generated instances of the property and shrinks any failure.
PropertyReport verify(const std::string& property, int trials, std::uint64_t seed,
                      const VerifyOptions& options = {});

// Re-runs one recorded witness (or every failure of a report document).
// Returns the messages of checks that still fail.
std::vector<std::string> replay(const nlohmann::json& witness_or_report);

} // namespace cyclesep
