#pragma once

#include <optional>
#include <string>

#include "ramgate/authority_gate.hpp"
#include "ramgate/state_model.hpp"

namespace ramgate {

struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Small enumerable setting for witness construction: a real authority
// function F requiring a fixed component set all-Valid, and an admission
// function G that halts only on a definitively Invalid monitored visible
// component.
struct FiniteInstance {
    Universe universe;  // size <= 12 (3^12 assignments)
    ComponentSet visible;
    ComponentSet authority_requirements;  // F true iff all of these Valid
    ComponentSet admission_monitors;      // G false iff one of these is visibly Invalid

    void validate() const;  // throws UniverseError / SizeError
};

// Real authority over a total assignment.
bool eval_f(const FiniteInstance& instance, const StateMap& total);

// F restricted to the provable slice, absent components assumed benign;
// true means the invalidating condition lies entirely in the gap.
bool eval_f_over_proven(const FiniteInstance& instance, const StateMap& proven);

// Admission decision over the visible slice.
bool eval_g(const FiniteInstance& instance, const StateMap& proven);

// A concrete attestation-insufficiency counterexample: admission approves,
// real authority is false, and the invalidating component is invisible.
struct Witness {
    ProvableState s_p;
    RealState s_r_star;
    ComponentId delta_star;
};

struct WitnessCheck {
    bool admission_approves = false;      // (a) G(s_p) = true
    bool real_authority_false = false;    // (b) F(s_r*) = false
    bool proven_slice_benign = false;     // (c) F over s_p alone = true
    bool delta_outside_visible = false;   // delta* not in the visible set
    bool delta_in_gap = false;            // delta* in gap(s_r*, s_p)

    bool all() const {
        return admission_approves && real_authority_false && proven_slice_benign &&
               delta_outside_visible && delta_in_gap;
    }
};

// Exhaustively enumerates total status assignments (3^n, component order =
// registration order, status order Valid < Invalid < Undefined) and returns
// the lexicographically first witness, or nullopt when no assignment
// qualifies.
std::optional<Witness> find_witness(const FiniteInstance& instance);

// Independent re-evaluation of every witness condition.
WitnessCheck verify_witness(const FiniteInstance& instance, const Witness& witness);

// Enumeration-level check of the necessity theorem: over every total
// assignment, the reconstruction gate (seeing only the visible projection)
// never executes where F over full ground truth is false.
struct NecessityReport {
    std::uint64_t assignments = 0;
    std::uint64_t f_true = 0;
    std::uint64_t f_false = 0;
    std::uint64_t ram_executes = 0;
    std::uint64_t ram_invalid_executions = 0;  // executes with F false; must be 0
    std::uint64_t ram_halts_on_f_true = 0;     // enumeration-level over-conservatism
};

NecessityReport necessity_scan(const FiniteInstance& instance);

}  // namespace ramgate
