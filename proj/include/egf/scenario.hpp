#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egf/core.hpp"

namespace egf {

// Per-field sampling intervals for synthesizing a perceiver population.
struct SamplingRanges {
    std::array<double, 2> valence_baseline{0.0, 0.0};
    std::array<double, 2> arousal_baseline{0.0, 0.0};
    std::array<double, 2> expectation{0.5, 0.5};
    std::array<double, 2> memory_decay{0.0, 0.0};
    std::array<double, 2> salience{0.0, 0.0};
    std::array<double, 2> dyadic_sensitivity{0.0, 0.0};
    std::array<double, 2> alpha_harm{0.0, 0.0};
    std::array<double, 2> alpha_norm{0.0, 0.0};
    std::array<double, 2> alpha_affect{0.0, 0.0};
    std::array<double, 2> judgement_threshold{0.0, 0.0};
    std::array<double, 2> harm_perception{0.5, 0.5};
    std::array<double, 2> wellbeing{0.5, 0.5};
};

struct PopulationSpec {
    int count = 1;
    std::uint64_t seed = 0;
    // One [lo,hi] interval per cluster; draws are normalized to sum 1.
    std::vector<std::array<double, 2>> weight_ranges;
    std::vector<FormFunction> form_pool;  // per-cluster form drawn uniformly
    SamplingRanges ranges;
    // When present, used verbatim instead of sampling.
    std::optional<std::vector<PerceiverProfile>> profiles;
};

struct Thresholds {
    double tau_surrogate = 0.25;  // classification band for surrogate values
    double tau_ground = 0.25;     // classification band for oracle means
    double ordering_delta = 0.05; // required oracle gap for an ordering witness
};

struct LoopSettings {
    double influence = 0.0;  // lambda in [0,1]
    double gain = 0.0;       // gamma >= 0
    int steps = 0;
    StateVector topic_state;
    int topic_action = 0;
    std::optional<StateVector> topic_state_after;  // default: transition model
};

struct FeedbackSettings {
    int epochs = 1;
    int period = 1;
    double learning_rate = 0.1;  // eta in (0,1]
};

struct AdversarialSettings {
    int training_size = 2000;
    int eval_size = 500;
    long budget = 10000;
};

struct Scenario {
    std::string name;
    std::vector<ParameterSpec> parameters;
    std::vector<ParameterCluster> clusters;
    std::vector<Action> actions;
    std::vector<std::string> norms;
    std::vector<std::string> constraints;
    PopulationSpec population;
    Thresholds thresholds;
    std::vector<StateVector> probe_states;
    AggregationMode mode = AggregationMode::Sum;
    LoopSettings loop;
    FeedbackSettings feedback;
    AdversarialSettings adversarial;

    int param_count() const { return static_cast<int>(parameters.size()); }
    const Action& action_by_id(int id) const;
    const Action* find_action(int id) const;
};

struct ParseOutcome {
    std::optional<Scenario> scenario;
    std::vector<std::string> errors;  // every violation, field-path named
    bool ok() const { return errors.empty() && scenario.has_value(); }
};

ParseOutcome parse_scenario_file(const std::string& path);
ParseOutcome parse_scenario_text(const std::string& text);

// Canonical serialization (sorted keys, round-trip exact numbers).
std::string serialize_scenario(const Scenario& scenario);

// FNV-1a content hash of the canonical serialization, as 16 hex digits.
std::string scenario_digest(const Scenario& scenario);

// Deterministic additive transition model: s' = clamp(s + effect, bounds).
Transition apply_action(const Scenario& scenario, const StateVector& s, int action_id);

// The loop topic as a concrete transition.
Transition loop_topic(const Scenario& scenario);

// Draws the scenario population (or returns the explicit profiles).
// Field draw order is fixed; perceiver n uses child seed mix_seed(seed, n).
std::vector<PerceiverProfile> sample_population(const Scenario& scenario);

// Goal function over the scenario's clusters, constraints and population.
GoalFunction goal_function_of(const Scenario& scenario);

// First parameter index carrying the given source channel, if any.
std::optional<int> channel_index(const Scenario& scenario, ParamSource source);

}  // namespace egf
