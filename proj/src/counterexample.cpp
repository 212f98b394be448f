#include "ramgate/counterexample.hpp"

#include <cmath>

namespace ramgate {

namespace {

constexpr std::size_t kMaxUniverse = 12;
constexpr Status kStatusOrder[3] = {Status::Valid, Status::Invalid, Status::Undefined};

std::uint64_t pow3(std::size_t n) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < n; ++i) result *= 3;
    return result;
}

// Decodes assignment `index` (base-3, most significant digit = first
// registered component) into a total state map.
StateMap decode_assignment(const Universe& universe, std::uint64_t index) {
    const auto& components = universe.components();
    const std::size_t n = components.size();
    StateMap total;
    for (std::size_t i = 0; i < n; ++i) {
        const auto digit = (index / pow3(n - 1 - i)) % 3;
        total.emplace(components[i], kStatusOrder[digit]);
    }
    return total;
}

StateMap restrict_to(const StateMap& total, const ComponentSet& keep) {
    StateMap slice;
    for (const auto& [id, status] : total) {
        if (keep.contains(id)) slice.emplace(id, status);
    }
    return slice;
}

}  // namespace

void FiniteInstance::validate() const {
    if (universe.size() == 0) {
        throw UniverseError("instance universe is empty");
    }
    if (universe.size() > kMaxUniverse) {
        throw SizeError("universe too large to enumerate (limit 12 components)");
    }
    for (const auto& id : visible) universe.require(id);
    for (const auto& id : authority_requirements) universe.require(id);
    for (const auto& id : admission_monitors) universe.require(id);
    if (authority_requirements.empty()) {
        throw UniverseError("authority requirements must be non-empty");
    }
}

bool eval_f(const FiniteInstance& instance, const StateMap& total) {
    for (const auto& id : instance.authority_requirements) {
        auto it = total.find(id);
        if (it == total.end() || it->second != Status::Valid) return false;
    }
    return true;
}

bool eval_f_over_proven(const FiniteInstance& instance, const StateMap& proven) {
    for (const auto& id : instance.authority_requirements) {
        auto it = proven.find(id);
        if (it != proven.end() && it->second != Status::Valid) return false;
    }
    return true;
}

bool eval_g(const FiniteInstance& instance, const StateMap& proven) {
    // Admission approves unless a monitored visible component is provably
    // Invalid. Undefined entries pass: "not provably false".
    for (const auto& id : instance.admission_monitors) {
        auto it = proven.find(id);
        if (it != proven.end() && it->second == Status::Invalid) return false;
    }
    return true;
}

std::optional<Witness> find_witness(const FiniteInstance& instance) {
    instance.validate();
    const std::uint64_t total_count = pow3(instance.universe.size());

    for (std::uint64_t index = 0; index < total_count; ++index) {
        const StateMap total = decode_assignment(instance.universe, index);
        const StateMap proven = restrict_to(total, instance.visible);

        if (!eval_g(instance, proven)) continue;
        if (!eval_f_over_proven(instance, proven)) continue;
        if (eval_f(instance, total)) continue;

        // First invisible required component whose status invalidates F, in
        // registration order; the lexicographic-first rule fixes the
        // nondeterminism the construction leaves open.
        for (const auto& id : instance.universe.components()) {
            if (instance.visible.contains(id)) continue;
            if (!instance.authority_requirements.contains(id)) continue;
            if (total.at(id) == Status::Valid) continue;
            Witness witness;
            witness.s_p = ProvableState::make(0, proven);
            witness.s_r_star = RealState::make(instance.universe, 0, total);
            witness.delta_star = id;
            return witness;
        }
    }
    return std::nullopt;
}

WitnessCheck verify_witness(const FiniteInstance& instance, const Witness& witness) {
    instance.validate();
    WitnessCheck check;
    check.admission_approves = eval_g(instance, witness.s_p.entries);
    check.real_authority_false = !eval_f(instance, witness.s_r_star.components);
    check.proven_slice_benign = eval_f_over_proven(instance, witness.s_p.entries);
    check.delta_outside_visible = !instance.visible.contains(witness.delta_star);
    const auto divergence = gap(instance.universe, witness.s_r_star, witness.s_p);
    check.delta_in_gap = divergence.contains(witness.delta_star);
    return check;
}

NecessityReport necessity_scan(const FiniteInstance& instance) {
    instance.validate();
    const ActionClass requested{{Privilege{"act", instance.authority_requirements}}};
    NecessityReport report;
    const std::uint64_t total_count = pow3(instance.universe.size());

    for (std::uint64_t index = 0; index < total_count; ++index) {
        const StateMap total = decode_assignment(instance.universe, index);
        const bool f_true = eval_f(instance, total);
        ++report.assignments;
        if (f_true) {
            ++report.f_true;
        } else {
            ++report.f_false;
        }

        // The gate sees only the visible projection; invisible components
        // land in the residual and block as undetermined.
        const auto proven = ProvableState::make(0, restrict_to(total, instance.visible));
        const auto envelope = build_envelope(instance.universe, proven);
        const auto outcome = evaluate_gate(instance.universe, envelope, requested);

        if (outcome.executes()) {
            ++report.ram_executes;
            if (!f_true) ++report.ram_invalid_executions;
        } else if (f_true) {
            ++report.ram_halts_on_f_true;
        }
    }
    return report;
}

}  // namespace ramgate
