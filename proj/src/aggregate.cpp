#include "egf/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "egf/scenario.hpp"

namespace egf {

namespace {

constexpr double kWeightSumTol = 1e-9;

void check_range(std::vector<std::string>& errs, const std::string& field, double v, double lo,
                 double hi) {
    if (!(v >= lo && v <= hi)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: value %.17g outside [%g, %g]", field.c_str(), v, lo,
                      hi);
        errs.emplace_back(buf);
    }
}

// Compensated (Kahan) sum so the reduction order cannot move the result
// past the 1e-12 contract.
class KahanSum {
public:
    void add(double v) {
        const double y = v - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace

std::vector<std::string> validate_profile(const PerceiverProfile& x, int cluster_count,
                                          int param_count) {
    std::vector<std::string> errs;
    const std::string who = "profile " + std::to_string(x.id);

    if (static_cast<int>(x.weights.size()) != cluster_count) {
        errs.push_back(who + ": weights length " + std::to_string(x.weights.size()) +
                       " != cluster count " + std::to_string(cluster_count));
    } else {
        double sum = 0.0;
        bool negative = false;
        for (double w : x.weights) {
            if (w < 0.0) negative = true;
            sum += w;
        }
        if (negative) errs.push_back(who + ": weights must be nonnegative");
        if (std::abs(sum - 1.0) > kWeightSumTol) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%s: weights sum %.17g != 1", who.c_str(), sum);
            errs.emplace_back(buf);
        }
    }
    if (static_cast<int>(x.forms.size()) != cluster_count)
        errs.push_back(who + ": forms length " + std::to_string(x.forms.size()) +
                       " != cluster count " + std::to_string(cluster_count));

    if (!(x.dyadic_sensitivity >= 0.0 && x.dyadic_sensitivity < 1.0))
        errs.push_back(who + ": dyadic sensitivity must be < 1 (affect can never be weighted out)");

    check_range(errs, who + ".valence_baseline", x.valence_baseline, -1.0, 1.0);
    check_range(errs, who + ".arousal_baseline", x.arousal_baseline, 0.0, 1.0);
    check_range(errs, who + ".memory_decay", x.memory_decay, 0.0, 1.0);
    check_range(errs, who + ".harm_perception", x.harm_perception, 0.0, 1.0);
    check_range(errs, who + ".wellbeing", x.wellbeing, 0.0, 1.0);
    if (x.alpha_harm < 0.0) errs.push_back(who + ".alpha_harm: must be >= 0");
    if (x.alpha_norm < 0.0) errs.push_back(who + ".alpha_norm: must be >= 0");
    if (x.alpha_affect < 0.0) errs.push_back(who + ".alpha_affect: must be >= 0");
    if (!std::isfinite(x.judgement_threshold))
        errs.push_back(who + ".judgement_threshold: must be finite");

    if (param_count >= 0) {
        if (static_cast<int>(x.expectation.size()) != param_count)
            errs.push_back(who + ": expectation length " + std::to_string(x.expectation.size()) +
                           " != parameter count " + std::to_string(param_count));
        if (static_cast<int>(x.salience.size()) != param_count)
            errs.push_back(who + ": salience length " + std::to_string(x.salience.size()) +
                           " != parameter count " + std::to_string(param_count));
    }
    for (std::size_t k = 0; k < x.expectation.size(); ++k)
        check_range(errs, who + ".expectation[" + std::to_string(k) + "]", x.expectation[k], 0.0,
                    1.0);
    for (std::size_t k = 0; k < x.salience.size(); ++k)
        check_range(errs, who + ".salience[" + std::to_string(k) + "]", x.salience[k], 0.0, 1.0);

    return errs;
}

PersonalTerm personal_term(const PerceiverProfile& x, std::span<const double> phi,
                           const std::vector<ParameterCluster>& clusters) {
    if (x.weights.size() != clusters.size() || x.forms.size() != clusters.size())
        throw std::invalid_argument("profile " + std::to_string(x.id) +
                                    " does not match the cluster partition");
    double term = 0.0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
        term += x.weights[i] * eval_form(x.forms[i], cluster_value(phi, clusters[i]));
    return {x.id, term};
}

double societal_utility_phi(const GoalFunction& g, std::span<const double> phi) {
    if (g.profiles.empty()) throw std::invalid_argument("goal function has no perceivers");
    KahanSum sum;
    for (const PerceiverProfile& x : g.profiles)
        sum.add(personal_term(x, phi, g.clusters).value);
    if (g.mode == AggregationMode::Mean)
        return sum.value() / static_cast<double>(g.profiles.size());
    return sum.value();
}

double societal_utility(const GoalFunction& g, const Scenario& scenario, const Transition& t) {
    return societal_utility_phi(g, feature_vector(t, scenario));
}

std::vector<int> admissible_actions(const GoalFunction& g, const Scenario& scenario) {
    std::set<std::string> barred(g.constraints.begin(), g.constraints.end());
    std::vector<int> ids;
    for (const Action& a : scenario.actions) {
        bool violates = false;
        for (const std::string& n : a.violated_norms)
            if (barred.count(n)) { violates = true; break; }
        if (!violates) ids.push_back(a.id);
    }
    if (ids.empty()) throw std::invalid_argument("no admissible action under the constraints");
    std::sort(ids.begin(), ids.end());
    return ids;
}

int argmax_action(const GoalFunction& g, const StateVector& s, const Scenario& scenario) {
    const std::vector<int> ids = admissible_actions(g, scenario);
    int best_id = ids.front();
    double best_value = -std::numeric_limits<double>::infinity();
    for (int id : ids) {  // ascending id, strict improvement: lowest id wins ties
        const Transition t = apply_action(scenario, s, id);
        const double value = societal_utility(g, scenario, t);
        if (value > best_value) {
            best_value = value;
            best_id = id;
        }
    }
    return best_id;
}

ExpertAggregate aggregate_expert(const GoalFunction& g, const std::vector<int>& expert_ids,
                                 const Scenario& scenario) {
    if (expert_ids.empty()) throw std::invalid_argument("expert subset is empty");

    GoalFunction expert = g;
    expert.mode = AggregationMode::Mean;
    expert.profiles.clear();
    for (int id : expert_ids) {
        auto it = std::find_if(g.profiles.begin(), g.profiles.end(),
                               [id](const PerceiverProfile& x) { return x.id == id; });
        if (it == g.profiles.end())
            throw std::invalid_argument("unknown expert perceiver id " + std::to_string(id));
        expert.profiles.push_back(*it);
    }

    GoalFunction full_mean = g;
    full_mean.mode = AggregationMode::Mean;

    double worst = 0.0;
    for (const StateVector& s : scenario.probe_states) {
        for (const Action& a : scenario.actions) {
            const Transition t = apply_action(scenario, s, a.id);
            const std::vector<double> phi = feature_vector(t, scenario);
            const double gap = std::abs(societal_utility_phi(expert, phi) -
                                        societal_utility_phi(full_mean, phi));
            worst = std::max(worst, gap);
        }
    }
    return {std::move(expert), worst};
}

}  // namespace egf
