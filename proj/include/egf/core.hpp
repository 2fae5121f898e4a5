#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace egf {

struct Scenario;

// Measurement channel a parameter draws its value from.
enum class ParamSource {
    Outcome,              // normalized s' coordinate
    Delta,                // normalized s' - s difference, centered at 0.5
    ActionAttr,           // named attribute of the action, already in [0,1]
    DyadicIntent,         // the action's perceived intentionality
    DyadicDamage,         // mean welfare drop across welfare-flagged coords
    DyadicVulnerability,  // mean welfare deficit of the starting state
    NormViolation,        // violated-norm fraction of the action
};

// One element of the agreed superset of measurable parameters. Parameter
// index k owns state coordinate k; derived channels (delta, action,
// dyadic) are views on the transition, not extra state dimensions.
struct ParameterSpec {
    int index = 0;
    std::string name;
    ParamSource source = ParamSource::Outcome;
    std::string attribute;  // only for ActionAttr
    double lower = 0.0;
    double upper = 1.0;
    bool welfare = false;  // participates in damage/vulnerability means
};

using StateVector = std::vector<double>;

struct Action {
    int id = 0;
    std::string label;
    double intent = 0.0;  // perceived intentionality, in [0,1]
    std::set<std::string> violated_norms;
    std::map<std::string, double> attributes;  // values in [0,1]
    std::vector<double> effect;  // additive state effect, length |O|
};

struct Transition {
    StateVector s;
    int action_id = 0;
    StateVector s_prime;
    int epoch = 0;
};

struct ParameterCluster {
    int id = 0;
    std::vector<int> members;          // parameter indices, m >= 1
    std::vector<double> intra_weights;  // nonnegative, sum to 1
};

// Monotone nondecreasing preference transform on [0,1] with f(0)=0, f(1)=1.
struct FormFunction {
    enum class Kind { Linear, Concave, Convex, Threshold };
    Kind kind = Kind::Linear;
    double param = 0.0;  // curvature for Concave/Convex, cutoff for Threshold

    static FormFunction linear() { return {Kind::Linear, 0.0}; }
    static FormFunction concave(double curvature);
    static FormFunction convex(double curvature);
    static FormFunction threshold(double cutoff);

    // Text forms: "linear", "concave:2", "convex:0.5", "threshold:0.5".
    static FormFunction parse(const std::string& text);
    std::string str() const;
};

struct PerceiverProfile {
    int id = 0;
    std::vector<double> weights;       // one per cluster, sums to 1
    std::vector<FormFunction> forms;   // one per cluster
    double valence_baseline = 0.0;     // in [-1,1]
    double arousal_baseline = 0.0;     // in [0,1]
    std::vector<double> expectation;   // in [0,1]^|O|
    double memory_decay = 0.0;         // in [0,1]
    std::vector<double> salience;      // in [0,1]^|O|
    double dyadic_sensitivity = 0.0;   // in [0,1); 1 is rejected
    double alpha_harm = 0.0;           // >= 0
    double alpha_norm = 0.0;           // >= 0
    double alpha_affect = 0.0;         // >= 0
    double judgement_threshold = 0.0;
    double harm_perception = 0.0;      // in [0,1]
    double wellbeing = 0.0;            // in [0,1]
};

enum class AggregationMode { Sum, Mean };

struct GoalFunction {
    std::vector<ParameterCluster> clusters;
    std::vector<PerceiverProfile> profiles;
    AggregationMode mode = AggregationMode::Sum;
    std::vector<std::string> constraints;  // norm names barred from the action space
    int version = 0;
};

// Linear map of a raw measurement onto [0,1]; out-of-range values clamp.
double normalize_parameter(double raw, const ParameterSpec& spec);

// Per-parameter measurement of a transition, one value in [0,1] per
// element of the superset. Throws std::invalid_argument when a dyadic
// damage/vulnerability parameter exists but nothing is welfare-flagged.
std::vector<double> feature_vector(const Transition& t, const Scenario& scenario);

// Intra-weighted mean of the cluster's member features.
double cluster_value(std::span<const double> phi, const ParameterCluster& cluster);

// Evaluates a form function at x in [0,1]; tolerates 1e-12 of slack
// outside the domain and rejects anything beyond it.
double eval_form(const FormFunction& f, double x);

}  // namespace egf
