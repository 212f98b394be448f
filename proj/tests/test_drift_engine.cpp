#include <doctest.h>

#include <cmath>

#include "ramgate/drift_engine.hpp"

using namespace ramgate;

TEST_CASE("p_drift zero yields only None events") {
    DriftConfig config;
    config.p_drift = 0.0;
    Rng rng(config.seed);
    for (long step = 0; step < 1000; ++step) {
        CHECK(sample_step(config, rng, step).kind == DriftKind::None);
    }
}

TEST_CASE("kind frequencies match the mix within one percent") {
    DriftConfig config;
    config.p_drift = 1.0;  // every step drifts, so all draws count
    Rng rng(config.seed);
    std::map<DriftKind, long> counts;
    constexpr long kSteps = 100000;
    for (long step = 0; step < kSteps; ++step) {
        ++counts[sample_step(config, rng, step).kind];
    }
    CHECK(counts[DriftKind::None] == 0);
    const auto frequency = [&](DriftKind kind) {
        return static_cast<double>(counts[kind]) / kSteps;
    };
    CHECK(std::abs(frequency(DriftKind::Observable) - 0.30) < 0.01);
    CHECK(std::abs(frequency(DriftKind::Delayed) - 0.25) < 0.01);
    CHECK(std::abs(frequency(DriftKind::Hidden) - 0.25) < 0.01);
    CHECK(std::abs(frequency(DriftKind::Ambiguous) - 0.20) < 0.01);
}

TEST_CASE("fixed seed reproduces the event sequence") {
    DriftConfig config;
    for (int run = 0; run < 2; ++run) {
        Rng a(config.seed);
        Rng b(config.seed);
        for (long step = 0; step < 5000; ++step) {
            const auto ea = sample_step(config, a, step);
            const auto eb = sample_step(config, b, step);
            CHECK(ea.kind == eb.kind);
            CHECK(ea.target == eb.target);
        }
    }
}

TEST_CASE("targets are fixed per kind") {
    DriftConfig config;
    config.p_drift = 1.0;
    Rng rng(7);
    for (long step = 0; step < 5000; ++step) {
        const auto event = sample_step(config, rng, step);
        switch (event.kind) {
            case DriftKind::Observable:
                CHECK((event.target == comp_I() || event.target == comp_C()));
                break;
            case DriftKind::Delayed: CHECK(event.target == comp_R()); break;
            case DriftKind::Hidden: CHECK(event.target == comp_E()); break;
            case DriftKind::Ambiguous: CHECK(event.target == comp_B()); break;
            case DriftKind::None: break;
        }
    }
}

TEST_CASE("mix must sum to one") {
    DriftConfig config;
    config.mix = {0.5, 0.5, 0.1, 0.1};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("hidden drift changes reality but never any provable entry") {
    DriftConfig config;
    config.coverage = 1.0;
    Rng rng(1);
    EpisodeChannels channels(config, {comp_R()});
    channels.apply_drift({DriftKind::Hidden, comp_E(), 0}, rng);

    CHECK(channels.real().status_of(comp_E()) == Status::Invalid);
    for (long step = 0; step < 50; ++step) {
        CHECK_FALSE(channels.provable_view(step).entries.contains(comp_E()));
        CHECK_FALSE(channels.oracle_view(step).entries.contains(comp_E()));
    }
    // The fresh observation reports it as unresolvable.
    CHECK(channels.ram_observe(0).at(comp_E()) == Status::Undefined);
}

TEST_CASE("ambiguous drift degrades reality and every view to undefined") {
    DriftConfig config;
    config.coverage = 1.0;
    Rng rng(1);
    EpisodeChannels channels(config, {comp_R()});
    channels.apply_drift({DriftKind::Ambiguous, comp_B(), 0}, rng);

    CHECK(channels.real().status_of(comp_B()) == Status::Undefined);
    CHECK(channels.provable_view(0).status_of(comp_B()) == Status::Undefined);
    CHECK(channels.ram_observe(0).at(comp_B()) == Status::Undefined);
}

TEST_CASE("observable drift at full coverage lands in the provable channel") {
    DriftConfig config;
    config.coverage = 1.0;
    Rng rng(1);
    EpisodeChannels channels(config, {comp_R()});
    channels.apply_drift({DriftKind::Observable, comp_I(), 0}, rng);
    CHECK(channels.provable_view(0).status_of(comp_I()) == Status::Invalid);
    CHECK(channels.real().status_of(comp_I()) == Status::Invalid);
}

TEST_CASE("delayed drift is stale in channels but fresh for the gate") {
    DriftConfig config;
    config.coverage = 1.0;
    config.oracle_lag = 2;
    Rng rng(1);
    EpisodeChannels channels(config, {comp_R()});
    channels.apply_drift({DriftKind::Delayed, comp_R(), 0}, rng);

    // Channels carry the stale value until the lag expires.
    CHECK(channels.provable_view(0).status_of(comp_R()) == Status::Valid);
    CHECK(channels.provable_view(1).status_of(comp_R()) == Status::Valid);
    CHECK(channels.provable_view(2).status_of(comp_R()) == Status::Invalid);
    CHECK(channels.oracle_view(1).status_of(comp_R()) == Status::Valid);
    CHECK(channels.oracle_view(2).status_of(comp_R()) == Status::Invalid);

    // A fresh re-observation defeats staleness.
    CHECK(channels.ram_observe(0).at(comp_R()) == Status::Invalid);
}

TEST_CASE("no drift: the fresh observation equals ground truth") {
    DriftConfig config;
    Rng rng(1);
    EpisodeChannels channels(config, {comp_R()});
    const auto observed = channels.ram_observe(0);
    for (const auto& [comp, status] : channels.real().components) {
        CHECK(observed.at(comp) == status);
    }
}

TEST_CASE("coverage zero excludes every event from the provable channel") {
    DriftConfig config;
    config.coverage = 0.0;
    Rng rng(3);
    EpisodeChannels channels(config, {comp_R()});
    channels.apply_drift({DriftKind::Observable, comp_I(), 0}, rng);
    channels.apply_drift({DriftKind::Ambiguous, comp_B(), 0}, rng);
    // Channel keeps reporting the stale pre-drift values.
    CHECK(channels.provable_view(5).status_of(comp_I()) == Status::Valid);
    CHECK(channels.provable_view(5).status_of(comp_B()) == Status::Valid);
    // The oracle still reflects delayed ground truth for its components.
    channels.apply_drift({DriftKind::Delayed, comp_R(), 0}, rng);
    CHECK(channels.oracle_view(2).status_of(comp_R()) == Status::Invalid);
}

TEST_CASE("oracle channel cannot cover the hidden component") {
    DriftConfig config;
    CHECK_THROWS_AS(EpisodeChannels(config, {comp_E()}), UniverseError);
}

TEST_CASE("full trace is a pure function of config and seed") {
    DriftConfig config;
    config.coverage = 0.6;
    for (int run = 0; run < 2; ++run) {
        Rng a(config.seed), b(config.seed);
        EpisodeChannels ca(config, {comp_R()}), cb(config, {comp_R()});
        for (long step = 0; step < 2000; ++step) {
            ca.advance_to(step);
            cb.advance_to(step);
            const auto ea = sample_step(config, a, step);
            const auto eb = sample_step(config, b, step);
            ca.apply_drift(ea, a);
            cb.apply_drift(eb, b);
            CHECK(ca.provable_view(step).integrity_tag ==
                  cb.provable_view(step).integrity_tag);
            CHECK(ca.oracle_view(step).integrity_tag == cb.oracle_view(step).integrity_tag);
            CHECK(ca.ram_observe(step) == cb.ram_observe(step));
        }
    }
}
