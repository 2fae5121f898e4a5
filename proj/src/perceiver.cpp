#include "egf/perceiver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "egf/scenario.hpp"

namespace egf {

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

MentalState mental_state(const PerceiverProfile& x, const std::vector<double>& phi) {
    const std::size_t o = phi.size();
    if (x.expectation.size() != o || x.salience.size() != o)
        throw std::invalid_argument("profile expectation/salience length mismatch");

    double weighted_dev = 0.0;
    double abs_dev = 0.0;
    for (std::size_t k = 0; k < o; ++k) {
        const double dev = phi[k] - x.expectation[k];
        weighted_dev += x.salience[k] * dev;
        abs_dev += std::abs(dev);
    }
    const double n = static_cast<double>(o);

    MentalState ms;
    ms.valence = std::clamp(x.valence_baseline + (2.0 / n) * weighted_dev, -1.0, 1.0);
    ms.arousal = std::clamp(x.arousal_baseline + abs_dev / n, 0.0, 1.0);
    ms.appraisal = phi;
    return ms;
}

namespace {

double channel(const Scenario& scenario, const std::vector<double>& phi, ParamSource source,
               const char* what) {
    auto idx = channel_index(scenario, source);
    if (!idx)
        throw std::invalid_argument(std::string("scenario superset lacks a ") + what +
                                    " channel");
    return phi[static_cast<std::size_t>(*idx)];
}

}  // namespace

double dyadic_immorality(const PerceiverProfile& x, const Scenario& scenario,
                         const std::vector<double>& phi, const MentalState& ms) {
    const double intent = channel(scenario, phi, ParamSource::DyadicIntent, "dyadic intent");
    const double damage = channel(scenario, phi, ParamSource::DyadicDamage, "dyadic damage");
    const double vulnerability =
        channel(scenario, phi, ParamSource::DyadicVulnerability, "dyadic vulnerability");
    const double norm_violation =
        channel(scenario, phi, ParamSource::NormViolation, "norm violation");
    const double negative_affect = std::max(0.0, -ms.valence);

    const double z = x.alpha_harm * x.harm_perception * intent * damage * vulnerability +
                     x.alpha_norm * norm_violation + x.alpha_affect * negative_affect -
                     x.judgement_threshold;
    return logistic(z);
}

double perceiver_utility_phi(const PerceiverProfile& x, const Scenario& scenario,
                             const std::vector<double>& phi) {
    const MentalState ms = mental_state(x, phi);
    double u = (1.0 - x.dyadic_sensitivity) * ms.valence;
    if (x.dyadic_sensitivity > 0.0) {
        const double d = dyadic_immorality(x, scenario, phi, ms);
        u += x.dyadic_sensitivity * (1.0 - 2.0 * d);
    }
    return std::clamp(u, -1.0, 1.0);
}

double perceiver_utility(const PerceiverProfile& x, const Scenario& scenario,
                         const Transition& t) {
    return perceiver_utility_phi(x, scenario, feature_vector(t, scenario));
}

JudgementStats population_stats(const std::vector<PerceiverProfile>& population,
                                const Scenario& scenario, const Transition& t) {
    if (population.empty()) throw std::invalid_argument("population is empty");
    const std::vector<double> phi = feature_vector(t, scenario);

    std::vector<double> values;
    values.reserve(population.size());
    for (const PerceiverProfile& x : population)
        values.push_back(perceiver_utility_phi(x, scenario, phi));

    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= n;

    return {mean, variance, static_cast<int>(values.size())};
}

Verdict classify_value(double mean, double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("classification threshold must lie in (0,1)");
    if (mean >= tau) return Verdict::Ethical;
    if (mean <= -tau) return Verdict::Unethical;
    return Verdict::Contested;
}

Verdict classify(const std::vector<PerceiverProfile>& population, const Scenario& scenario,
                 const Transition& t, double tau) {
    return classify_value(population_stats(population, scenario, t).mean, tau);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Ethical: return "ethical";
        case Verdict::Unethical: return "unethical";
        case Verdict::Contested: return "contested";
    }
    return "contested";
}

}  // namespace egf
