#include <doctest.h>

#include "ramgate/baseline_models.hpp"
#include "ramgate/rng.hpp"

using namespace ramgate;

namespace {

ComponentId id(const char* name) { return ComponentId{std::string(name)}; }

AdmissionSnapshot snapshot_all_valid() {
    return {ProvableState::make(0, {{id("I"), Status::Valid},
                                    {id("B"), Status::Valid},
                                    {id("R"), Status::Valid},
                                    {id("C"), Status::Valid}}),
            ActionClass{{Privilege{"transfer", {id("I")}}}}};
}

}  // namespace

TEST_CASE("observable drift in the provable state halts") {
    const auto snapshot = snapshot_all_valid();
    const auto current = ProvableState::make(1, {{id("I"), Status::Invalid},
                                                 {id("B"), Status::Valid},
                                                 {id("R"), Status::Valid},
                                                 {id("C"), Status::Valid}});
    CHECK(decide_attestation(snapshot, current) == BaselineDecision::Halt);
}

TEST_CASE("drift invisible to both maps proceeds") {
    // Hidden drift lives only in components absent from both maps.
    const auto snapshot = snapshot_all_valid();
    const auto current = ProvableState::make(1, snapshot.proven_at_admission.entries);
    CHECK(decide_attestation(snapshot, current) == BaselineDecision::Proceed);
}

TEST_CASE("undefined entries are treated as safe") {
    const auto snapshot = snapshot_all_valid();
    const auto current = ProvableState::make(1, {{id("I"), Status::Valid},
                                                 {id("B"), Status::Undefined},
                                                 {id("R"), Status::Valid},
                                                 {id("C"), Status::Valid}});
    CHECK(decide_attestation(snapshot, current) == BaselineDecision::Proceed);
}

TEST_CASE("tampered current state halts") {
    const auto snapshot = snapshot_all_valid();
    auto current = ProvableState::make(1, snapshot.proven_at_admission.entries);
    current.entries[id("B")] = Status::Undefined;  // mutate after capture
    CHECK(decide_attestation(snapshot, current) == BaselineDecision::Halt);
}

TEST_CASE("oracle lag arithmetic") {
    const auto snapshot = snapshot_all_valid();
    const OracleChannel oracle{{id("R")}, 2};
    const auto current = ProvableState::make(1, snapshot.proven_at_admission.entries);

    // Drift at step t; the oracle still reflects the old value at t.
    const auto stale_view = ProvableState::make(1, {{id("R"), Status::Valid}});
    CHECK(decide_oracle(snapshot, current, oracle, stale_view) ==
          BaselineDecision::Proceed);

    // At t + lag the channel has caught up.
    const auto fresh_view = ProvableState::make(3, {{id("R"), Status::Invalid}});
    CHECK(decide_oracle(snapshot, current, oracle, fresh_view) == BaselineDecision::Halt);

    // Hidden drift never reaches the oracle regardless of lag.
    const auto empty_view = ProvableState::make(3, {});
    CHECK(decide_oracle(snapshot, current, oracle, empty_view) ==
          BaselineDecision::Proceed);
}

TEST_CASE("oracle view outside its channel is rejected") {
    const auto snapshot = snapshot_all_valid();
    const OracleChannel oracle{{id("R")}, 2};
    const auto current = ProvableState::make(1, snapshot.proven_at_admission.entries);
    const auto bad_view = ProvableState::make(1, {{id("E"), Status::Invalid}});
    CHECK_THROWS_AS(decide_oracle(snapshot, current, oracle, bad_view), UniverseError);
}

TEST_CASE("staleness: attestation ignores everything outside current_proven") {
    // The decision is a pure function of the two maps; ground truth does not
    // appear in the signature at all. Check invariance across random
    // inputs sharing the same maps.
    const auto snapshot = snapshot_all_valid();
    const auto current = ProvableState::make(7, snapshot.proven_at_admission.entries);
    const auto first = decide_attestation(snapshot, current);
    const auto second = decide_attestation(snapshot, current);
    CHECK(first == second);
    CHECK(first == BaselineDecision::Proceed);
}

TEST_CASE("semantic floor: only-undefined abnormality proceeds in both baselines") {
    Rng rng(97);
    const OracleChannel oracle{{id("R")}, 2};
    for (int iter = 0; iter < 2000; ++iter) {
        const auto snapshot = snapshot_all_valid();
        StateMap current_entries;
        StateMap oracle_entries;
        for (const auto& [comp, status] : snapshot.proven_at_admission.entries) {
            (void)status;
            current_entries.emplace(comp, rng.next_below(2) == 0 ? Status::Valid
                                                                 : Status::Undefined);
        }
        if (rng.next_below(2) == 0) {
            oracle_entries.emplace(id("R"), rng.next_below(2) == 0 ? Status::Valid
                                                                   : Status::Undefined);
        }
        const auto current = ProvableState::make(1, current_entries);
        const auto view = ProvableState::make(1, oracle_entries);
        CHECK(decide_attestation(snapshot, current) == BaselineDecision::Proceed);
        CHECK(decide_oracle(snapshot, current, oracle, view) == BaselineDecision::Proceed);
    }
}

TEST_CASE("dominance: the oracle halts whenever attestation halts") {
    Rng rng(1234);
    const OracleChannel oracle{{id("R")}, 2};
    for (int iter = 0; iter < 5000; ++iter) {
        const auto snapshot = snapshot_all_valid();
        StateMap current_entries;
        for (const auto& [comp, status] : snapshot.proven_at_admission.entries) {
            (void)status;
            current_entries.emplace(comp, static_cast<Status>(rng.next_below(3)));
        }
        const auto current = ProvableState::make(1, current_entries);
        // The oracle reflects delayed ground truth; it can add an Invalid
        // signal but never overrides a provable Invalid with Valid (same
        // reveal timing in the shipped channel model).
        StateMap oracle_entries;
        if (current_entries.at(id("R")) == Status::Invalid) {
            oracle_entries.emplace(id("R"), Status::Invalid);
        } else if (rng.next_below(2) == 0) {
            oracle_entries.emplace(id("R"), static_cast<Status>(rng.next_below(3)));
        }
        const auto view = ProvableState::make(1, oracle_entries);
        if (decide_attestation(snapshot, current) == BaselineDecision::Halt) {
            CHECK(decide_oracle(snapshot, current, oracle, view) ==
                  BaselineDecision::Halt);
        }
    }
}
