#include "egf/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "egf/scenario.hpp"

namespace egf {

namespace {

constexpr double kDomainTol = 1e-12;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

FormFunction FormFunction::concave(double curvature) {
    if (!(curvature > 0.0)) fail("concave form requires curvature > 0");
    return {Kind::Concave, curvature};
}

FormFunction FormFunction::convex(double curvature) {
    if (!(curvature > 0.0)) fail("convex form requires curvature > 0");
    return {Kind::Convex, curvature};
}

FormFunction FormFunction::threshold(double cutoff) {
    if (!(cutoff > 0.0 && cutoff < 1.0)) fail("threshold form requires cutoff in (0,1)");
    return {Kind::Threshold, cutoff};
}

FormFunction FormFunction::parse(const std::string& text) {
    if (text == "linear") return linear();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        double value = 0.0;
        try {
            size_t used = 0;
            value = std::stod(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1) fail("trailing characters in form '" + text + "'");
        } catch (const std::invalid_argument&) {
            fail("malformed form parameter in '" + text + "'");
        } catch (const std::out_of_range&) {
            fail("form parameter out of range in '" + text + "'");
        }
        if (head == "concave") return concave(value);
        if (head == "convex") return convex(value);
        if (head == "threshold") return threshold(value);
    }
    fail("unknown form function '" + text + "'");
}

std::string FormFunction::str() const {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    switch (kind) {
        case Kind::Linear: return "linear";
        case Kind::Concave: return "concave:" + num(param);
        case Kind::Convex: return "convex:" + num(param);
        case Kind::Threshold: return "threshold:" + num(param);
    }
    return "linear";
}

double normalize_parameter(double raw, const ParameterSpec& spec) {
    if (!std::isfinite(raw)) fail("non-finite measurement for parameter '" + spec.name + "'");
    const double u = (raw - spec.lower) / (spec.upper - spec.lower);
    return std::clamp(u, 0.0, 1.0);
}

std::vector<double> feature_vector(const Transition& t, const Scenario& scenario) {
    const int o = scenario.param_count();
    if (static_cast<int>(t.s.size()) != o || static_cast<int>(t.s_prime.size()) != o)
        fail("transition state length does not match parameter count");
    const Action& act = scenario.action_by_id(t.action_id);

    std::vector<int> welfare;
    for (const ParameterSpec& p : scenario.parameters)
        if (p.welfare) welfare.push_back(p.index);

    // Welfare drop and welfare deficit, averaged over the flagged coords.
    auto welfare_mean = [&](auto&& per_coord) {
        double sum = 0.0;
        for (int k : welfare) sum += per_coord(scenario.parameters[k]);
        return sum / static_cast<double>(welfare.size());
    };

    std::vector<double> phi(o, 0.0);
    for (const ParameterSpec& p : scenario.parameters) {
        double value = 0.0;
        switch (p.source) {
            case ParamSource::Outcome:
                value = normalize_parameter(t.s_prime[p.index], p);
                break;
            case ParamSource::Delta:
                value = std::clamp(
                    0.5 + (t.s_prime[p.index] - t.s[p.index]) / (2.0 * (p.upper - p.lower)),
                    0.0, 1.0);
                break;
            case ParamSource::ActionAttr: {
                auto it = act.attributes.find(p.attribute);
                if (it == act.attributes.end())
                    fail("action '" + act.label + "' lacks attribute '" + p.attribute + "'");
                value = it->second;
                break;
            }
            case ParamSource::DyadicIntent:
                value = act.intent;
                break;
            case ParamSource::DyadicDamage:
                if (welfare.empty())
                    fail("damage parameter '" + p.name + "' requires a welfare-flagged parameter");
                value = welfare_mean([&](const ParameterSpec& w) {
                    return std::max(0.0, normalize_parameter(t.s[w.index], w) -
                                             normalize_parameter(t.s_prime[w.index], w));
                });
                break;
            case ParamSource::DyadicVulnerability:
                if (welfare.empty())
                    fail("vulnerability parameter '" + p.name +
                         "' requires a welfare-flagged parameter");
                value = welfare_mean([&](const ParameterSpec& w) {
                    return 1.0 - normalize_parameter(t.s[w.index], w);
                });
                break;
            case ParamSource::NormViolation: {
                int hits = 0;
                for (const std::string& n : scenario.norms)
                    if (act.violated_norms.count(n)) ++hits;
                value = static_cast<double>(hits) /
                        static_cast<double>(std::max<std::size_t>(1, scenario.norms.size()));
                break;
            }
        }
        phi[p.index] = value;
    }
    return phi;
}

double cluster_value(std::span<const double> phi, const ParameterCluster& cluster) {
    double sum = 0.0;
    for (std::size_t r = 0; r < cluster.members.size(); ++r) {
        const int k = cluster.members[r];
        if (k < 0 || static_cast<std::size_t>(k) >= phi.size())
            fail("cluster member index out of range");
        sum += cluster.intra_weights[r] * phi[k];
    }
    return sum;
}

double eval_form(const FormFunction& f, double x) {
    if (x < -kDomainTol || x > 1.0 + kDomainTol)
        fail("form function input outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    switch (f.kind) {
        case FormFunction::Kind::Linear:
            return x;
        case FormFunction::Kind::Concave:
            return (1.0 - std::exp(-f.param * x)) / (1.0 - std::exp(-f.param));
        case FormFunction::Kind::Convex:
            return (std::exp(f.param * x) - 1.0) / (std::exp(f.param) - 1.0);
        case FormFunction::Kind::Threshold:
            return x >= f.param ? 1.0 : 0.0;
    }
    return x;
}

}  // namespace egf
