#pragma once

#include <span>
#include <string>
#include <vector>

#include "egf/core.hpp"

namespace egf {

struct Scenario;

struct PersonalTerm {
    int perceiver_id = 0;
    double value = 0.0;  // in [0,1]
};

// Every violated constraint, named; empty means the profile is valid.
// param_count < 0 skips the length checks that need |O|.
std::vector<std::string> validate_profile(const PerceiverProfile& x, int cluster_count,
                                          int param_count = -1);

// Weighted form-function terms of one perceiver over the shared clusters.
PersonalTerm personal_term(const PerceiverProfile& x, std::span<const double> phi,
                           const std::vector<ParameterCluster>& clusters);

// Societal aggregation of personal terms; Sum is the raw total, Mean
// divides by the population size.
double societal_utility_phi(const GoalFunction& g, std::span<const double> phi);
double societal_utility(const GoalFunction& g, const Scenario& scenario, const Transition& t);

// Action ids whose violated norms are disjoint from the constraints.
// Throws when no action remains.
std::vector<int> admissible_actions(const GoalFunction& g, const Scenario& scenario);

// Admissible action maximizing societal utility from state s under the
// scenario transition model; ties resolve to the lowest id.
int argmax_action(const GoalFunction& g, const StateVector& s, const Scenario& scenario);

struct ExpertAggregate {
    GoalFunction expert;      // restricted to the expert subset, Mean mode
    double emulation_error;   // max |U_expert - U_total(Mean)| on the probe grid
};

// Expert emulation of the societal goal function, evaluated on every
// (probe state, action) transition of the scenario.
ExpertAggregate aggregate_expert(const GoalFunction& g, const std::vector<int>& expert_ids,
                                 const Scenario& scenario);

}  // namespace egf
