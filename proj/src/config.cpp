#include "cogsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cogsim/rng.hpp"

namespace cogsim {

std::string_view to_string(CoherenceBackend b) {
    return b == CoherenceBackend::Text ? "text" : "parametric";
}

CoherenceBackend backend_from_string(std::string_view s) {
    if (s == "text") return CoherenceBackend::Text;
    if (s == "parametric") return CoherenceBackend::Parametric;
    throw ConfigError("unknown coherence backend: " + std::string(s));
}

void SimConfig::validate() const {
    if (total_users < 1) throw ConfigError("total_users must be >= 1");
    if (total_days < 1) throw ConfigError("total_days must be >= 1");
    if (videos_per_day < 1) throw ConfigError("videos_per_day must be >= 1");
    if (categories_per_day < 1 || categories_per_day > kNumCategories) {
        throw ConfigError("categories_per_day must be in [1, 5]");
    }
    if (videos_per_category < 5) {
        throw ConfigError("videos_per_category must be >= 5");
    }
    if (videos_per_category * categories_per_day < videos_per_day) {
        throw ConfigError("daily category pool too small for videos_per_day");
    }
    if (summary_sentence_min < 1 || summary_sentence_max < summary_sentence_min ||
        summary_sentence_max > 3) {
        throw ConfigError("summary sentence range must satisfy 1 <= min <= max <= 3");
    }
    noise.validate();
    policies.validate();

    const auto mix = effective_mix();
    double sum = 0.0;
    for (const auto& [kind, frac] : mix) {
        if (frac < 0.0) throw ConfigError("profile mix fractions must be >= 0");
        sum += frac;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("profile mix must sum to 1");
    }
    for (const auto& [kind, rate] : effective_confound_rates()) {
        if (rate < 0.0 || rate > 1.0) {
            throw ConfigError("confound rates must be in [0, 1]");
        }
    }
    for (double p : qa.p_correct) {
        if (p < 0.0 || p > 1.0) throw ConfigError("qa accuracy must be in [0, 1]");
    }
}

std::map<ProgressionProfileKind, double> SimConfig::effective_mix() const {
    if (!profile_mix.empty()) return profile_mix;
    std::map<ProgressionProfileKind, double> uniform;
    for (ProgressionProfileKind k : all_profiles()) {
        uniform[k] = 1.0 / kNumProfiles;
    }
    return uniform;
}

std::map<ConfoundKind, double> SimConfig::effective_confound_rates() const {
    if (!confound_rates.empty()) return confound_rates;
    std::map<ConfoundKind, double> rates;
    for (ConfoundKind k : all_confounds()) rates[k] = 0.1;
    return rates;
}

namespace {

nlohmann::ordered_json noise_to_json(const NoiseSpec& n) {
    nlohmann::ordered_json j;
    j["sigma"] = n.sigma;
    j["delta"] = n.delta;
    nlohmann::ordered_json att;
    for (CognitiveLabel l : all_labels()) {
        att[std::string(to_string(l))] = n.attenuation[static_cast<std::size_t>(l)];
    }
    j["attenuation"] = att;
    j["trait_shift_sigma"] = n.trait_shift_sigma;
    j["metric_trait_sigma"] = n.metric_trait_sigma;
    j["coherence_trait_sigma"] = n.coherence_trait_sigma;
    j["disfluency_spread"] = n.disfluency_spread;
    return j;
}

NoiseSpec noise_from_json(const nlohmann::json& j) {
    NoiseSpec n;
    n.sigma = j.value("sigma", n.sigma);
    n.delta = j.value("delta", n.delta);
    if (j.contains("attenuation")) {
        for (CognitiveLabel l : all_labels()) {
            const std::string name(to_string(l));
            if (j["attenuation"].contains(name)) {
                n.attenuation[static_cast<std::size_t>(l)] =
                    j["attenuation"][name].get<double>();
            }
        }
    }
    n.trait_shift_sigma = j.value("trait_shift_sigma", n.trait_shift_sigma);
    n.metric_trait_sigma = j.value("metric_trait_sigma", n.metric_trait_sigma);
    n.coherence_trait_sigma = j.value("coherence_trait_sigma", n.coherence_trait_sigma);
    n.disfluency_spread = j.value("disfluency_spread", n.disfluency_spread);
    return n;
}

nlohmann::ordered_json policies_to_json(const DegradationTable& t) {
    nlohmann::ordered_json j;
    for (CognitiveLabel l : all_labels()) {
        const auto& p = t.for_label(l);
        nlohmann::ordered_json row;
        row["filler_rate"] = p.filler_rate;
        row["vagueness_rate"] = p.vagueness_rate;
        row["offtopic_rate"] = p.offtopic_rate;
        j[std::string(to_string(l))] = row;
    }
    return j;
}

DegradationTable policies_from_json(const nlohmann::json& j) {
    DegradationTable t = DegradationTable::defaults();
    for (CognitiveLabel l : all_labels()) {
        const std::string name(to_string(l));
        if (!j.contains(name)) continue;
        auto& p = t.by_label[static_cast<std::size_t>(l)];
        p.filler_rate = j[name].value("filler_rate", p.filler_rate);
        p.vagueness_rate = j[name].value("vagueness_rate", p.vagueness_rate);
        p.offtopic_rate = j[name].value("offtopic_rate", p.offtopic_rate);
    }
    return t;
}

}  // namespace

std::string SimConfig::to_json() const {
    nlohmann::ordered_json j;
    j["total_users"] = total_users;
    j["total_days"] = total_days;
    j["videos_per_day"] = videos_per_day;
    j["categories_per_day"] = categories_per_day;
    j["summary_sentence_min"] = summary_sentence_min;
    j["summary_sentence_max"] = summary_sentence_max;
    j["videos_per_category"] = videos_per_category;
    j["master_seed"] = master_seed;
    j["backend"] = std::string(to_string(backend));
    j["noise"] = noise_to_json(noise);

    nlohmann::ordered_json mix;
    for (const auto& [kind, frac] : effective_mix()) {
        mix[std::string(to_string(kind))] = frac;
    }
    j["profile_mix"] = mix;

    nlohmann::ordered_json rates;
    for (const auto& [kind, rate] : effective_confound_rates()) {
        rates[std::string(to_string(kind))] = rate;
    }
    j["confound_rates"] = rates;

    j["policies"] = policies_to_json(policies);

    nlohmann::ordered_json qa_json;
    for (CognitiveLabel l : all_labels()) {
        qa_json[std::string(to_string(l))] = qa.p_correct[static_cast<std::size_t>(l)];
    }
    j["qa_p_correct"] = qa_json;
    return j.dump(2);
}

SimConfig SimConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config JSON invalid: ") + e.what());
    }
    SimConfig c;
    c.total_users = j.value("total_users", c.total_users);
    c.total_days = j.value("total_days", c.total_days);
    c.videos_per_day = j.value("videos_per_day", c.videos_per_day);
    c.categories_per_day = j.value("categories_per_day", c.categories_per_day);
    c.summary_sentence_min = j.value("summary_sentence_min", c.summary_sentence_min);
    c.summary_sentence_max = j.value("summary_sentence_max", c.summary_sentence_max);
    c.videos_per_category = j.value("videos_per_category", c.videos_per_category);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("backend")) {
        c.backend = backend_from_string(j["backend"].get<std::string>());
    }
    if (j.contains("noise")) c.noise = noise_from_json(j["noise"]);
    if (j.contains("profile_mix")) {
        for (const auto& [name, frac] : j["profile_mix"].items()) {
            c.profile_mix[profile_from_string(name)] = frac.get<double>();
        }
    }
    if (j.contains("confound_rates")) {
        for (const auto& [name, rate] : j["confound_rates"].items()) {
            c.confound_rates[confound_from_string(name)] = rate.get<double>();
        }
    }
    if (j.contains("policies")) c.policies = policies_from_json(j["policies"]);
    if (j.contains("qa_p_correct")) {
        for (CognitiveLabel l : all_labels()) {
            const std::string name(to_string(l));
            if (j["qa_p_correct"].contains(name)) {
                c.qa.p_correct[static_cast<std::size_t>(l)] =
                    j["qa_p_correct"][name].get<double>();
            }
        }
    }
    c.validate();
    return c;
}

SimConfig SimConfig::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::uint64_t SimConfig::config_hash() const {
    return hash_tag(to_json());
}

}  // namespace cogsim
