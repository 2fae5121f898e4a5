#pragma once

#include <vector>

#include "egf/core.hpp"

namespace egf {

struct Scenario;

// Low-dimensional affective readout of a transition as experienced by
// one perceiver: core-affect valence/arousal plus the appraisal that
// produced them.
struct MentalState {
    double valence = 0.0;  // in [-1,1]
    double arousal = 0.0;  // in [0,1]
    std::vector<double> appraisal;
};

struct JudgementStats {
    double mean = 0.0;
    double variance = 0.0;  // population variance
    int count = 0;
};

enum class Verdict { Ethical, Unethical, Contested };

double logistic(double z);

// Valence: baseline plus salience-weighted deviation of the appraisal
// from expectation. Arousal: baseline plus mean absolute deviation.
MentalState mental_state(const PerceiverProfile& x, const std::vector<double>& phi);

// Dyadic immorality score in (0,1): logistic blend of the
// intent*damage*vulnerability product (scaled by perceived harm), norm
// violation, and negative affect, against the perceiver's threshold.
// Throws when the scenario superset lacks a required dyadic channel.
double dyadic_immorality(const PerceiverProfile& x, const Scenario& scenario,
                         const std::vector<double>& phi, const MentalState& ms);

// Ground-truth utility in [-1,1]: affect blended with the dyadic
// verdict. dyadic_sensitivity = 0 perceivers never touch the dyadic
// channels, so outcome-only supersets stay evaluable.
double perceiver_utility(const PerceiverProfile& x, const Scenario& scenario,
                         const Transition& t);
double perceiver_utility_phi(const PerceiverProfile& x, const Scenario& scenario,
                             const std::vector<double>& phi);

JudgementStats population_stats(const std::vector<PerceiverProfile>& population,
                                const Scenario& scenario, const Transition& t);

Verdict classify_value(double mean, double tau);
Verdict classify(const std::vector<PerceiverProfile>& population, const Scenario& scenario,
                 const Transition& t, double tau);

const char* verdict_name(Verdict v);

}  // namespace egf
