#include "cogsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cogsim {

namespace {

std::vector<double> softmax(const std::vector<double>& logits) {
    const double mx = *std::max_element(logits.begin(), logits.end());
    std::vector<double> p(logits.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < logits.size(); ++k) {
        p[k] = std::exp(logits[k] - mx);
        sum += p[k];
    }
    for (double& v : p) v /= sum;
    return p;
}

std::vector<double> logits_of(const std::vector<std::vector<double>>& weights,
                              const std::vector<double>& bias,
                              const std::vector<double>& x) {
    std::vector<double> z(bias);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const auto& wk = weights[k];
        double acc = 0.0;
        for (std::size_t f = 0; f < wk.size(); ++f) acc += wk[f] * x[f];
        z[k] += acc;
    }
    return z;
}

}  // namespace

double Classifier::loss_at(const std::vector<std::vector<double>>& xs,
                           const std::vector<int>& ys,
                           const std::vector<double>& sample_weights,
                           const std::vector<std::vector<double>>& weights,
                           const std::vector<double>& bias, double l2) {
    double total_weight = 0.0;
    double loss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto p = softmax(logits_of(weights, bias, xs[i]));
        const double w = sample_weights[i];
        loss -= w * std::log(std::max(p[static_cast<std::size_t>(ys[i])], 1e-300));
        total_weight += w;
    }
    loss /= total_weight;
    double reg = 0.0;
    for (const auto& wk : weights) {
        for (double v : wk) reg += v * v;
    }
    return loss + 0.5 * l2 * reg;
}

void Classifier::gradient_at(const std::vector<std::vector<double>>& xs,
                             const std::vector<int>& ys,
                             const std::vector<double>& sample_weights,
                             const std::vector<std::vector<double>>& weights,
                             const std::vector<double>& bias, double l2,
                             std::vector<std::vector<double>>& grad_w,
                             std::vector<double>& grad_b) {
    const std::size_t K = weights.size();
    const std::size_t F = weights.front().size();
    grad_w.assign(K, std::vector<double>(F, 0.0));
    grad_b.assign(K, 0.0);
    double total_weight = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto p = softmax(logits_of(weights, bias, xs[i]));
        const double w = sample_weights[i];
        total_weight += w;
        for (std::size_t k = 0; k < K; ++k) {
            const double delta = w * (p[k] - (static_cast<int>(k) == ys[i] ? 1.0 : 0.0));
            grad_b[k] += delta;
            const auto& x = xs[i];
            auto& gk = grad_w[k];
            for (std::size_t f = 0; f < F; ++f) gk[f] += delta * x[f];
        }
    }
    for (std::size_t k = 0; k < K; ++k) {
        grad_b[k] /= total_weight;
        for (std::size_t f = 0; f < F; ++f) {
            grad_w[k][f] = grad_w[k][f] / total_weight + l2 * weights[k][f];
        }
    }
}

Classifier Classifier::train(const std::vector<FeatureVector>& features,
                             const std::vector<CognitiveLabel>& labels,
                             const Hyperparams& hyper) {
    if (features.size() != labels.size()) {
        throw InputError("train: features and labels differ in length");
    }
    if (features.empty()) throw InputError("train: empty training set");

    // class inventory, ascending severity
    std::set<CognitiveLabel> present(labels.begin(), labels.end());
    if (present.size() < 2) {
        throw InputError("train: need at least two classes present");
    }
    Classifier model;
    model.classes_.assign(present.begin(), present.end());

    std::map<CognitiveLabel, long long> support;
    for (CognitiveLabel l : labels) ++support[l];
    for (const auto& [label, count] : support) {
        if (count < 10) {
            throw InputError("train: class " + std::string(to_string(label)) +
                             " has fewer than 10 examples");
        }
    }

    const std::size_t n = features.size();
    const std::size_t F = kNumFeatures;
    const std::size_t K = model.classes_.size();

    // standardization; constant features are dropped with a warning
    model.feature_mean_.assign(F, 0.0);
    model.feature_std_.assign(F, 1.0);
    model.feature_active_.assign(F, true);
    std::vector<std::array<double, kNumFeatures>> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        raw[i] = features[i].to_array();
        for (double v : raw[i]) {
            if (!std::isfinite(v)) {
                throw InputError("train: non-finite feature value at row " +
                                 std::to_string(i));
            }
        }
    }
    for (std::size_t f = 0; f < F; ++f) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m += raw[i][f];
        m /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            var += (raw[i][f] - m) * (raw[i][f] - m);
        }
        var /= static_cast<double>(n);
        model.feature_mean_[f] = m;
        if (var <= 0.0) {
            model.feature_active_[f] = false;
            model.feature_std_[f] = 1.0;
            model.warnings_.push_back("constant feature dropped: " +
                                      std::string(feature_names()[f]));
        } else {
            model.feature_std_[f] = std::sqrt(var);
        }
    }

    std::vector<std::vector<double>> xs(n, std::vector<double>(F, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t f = 0; f < F; ++f) {
            xs[i][f] = model.feature_active_[f]
                           ? (raw[i][f] - model.feature_mean_[f]) / model.feature_std_[f]
                           : 0.0;
        }
    }

    std::map<CognitiveLabel, int> class_index;
    for (std::size_t k = 0; k < K; ++k) class_index[model.classes_[k]] = static_cast<int>(k);
    std::vector<int> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = class_index[labels[i]];

    std::vector<double> sample_weights(n, 1.0);
    if (hyper.class_weights) {
        for (std::size_t i = 0; i < n; ++i) {
            sample_weights[i] = static_cast<double>(n) /
                                (static_cast<double>(K) *
                                 static_cast<double>(support[labels[i]]));
        }
    }

    model.weights_.assign(K, std::vector<double>(F, 0.0));
    model.bias_.assign(K, 0.0);
    model.loss_history_.reserve(static_cast<std::size_t>(hyper.epochs) + 1);
    model.loss_history_.push_back(
        loss_at(xs, ys, sample_weights, model.weights_, model.bias_, hyper.l2));

    std::vector<std::vector<double>> grad_w;
    std::vector<double> grad_b;
    for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
        gradient_at(xs, ys, sample_weights, model.weights_, model.bias_, hyper.l2,
                    grad_w, grad_b);
        for (std::size_t k = 0; k < K; ++k) {
            model.bias_[k] -= hyper.learning_rate * grad_b[k];
            for (std::size_t f = 0; f < F; ++f) {
                model.weights_[k][f] -= hyper.learning_rate * grad_w[k][f];
            }
        }
        model.loss_history_.push_back(
            loss_at(xs, ys, sample_weights, model.weights_, model.bias_, hyper.l2));
    }
    return model;
}

std::vector<double> Classifier::standardized(const FeatureVector& fv) const {
    const auto raw = fv.to_array();
    if (feature_mean_.size() != raw.size()) {
        throw InputError("predict: feature dimension mismatch");
    }
    std::vector<double> x(raw.size(), 0.0);
    for (std::size_t f = 0; f < raw.size(); ++f) {
        if (!std::isfinite(raw[f])) {
            throw InputError("predict: non-finite feature value");
        }
        x[f] = feature_active_[f] ? (raw[f] - feature_mean_[f]) / feature_std_[f] : 0.0;
    }
    return x;
}

std::vector<double> Classifier::probabilities(const std::vector<double>& x) const {
    return softmax(logits_of(weights_, bias_, x));
}

std::pair<CognitiveLabel, std::vector<double>> Classifier::predict(
    const FeatureVector& fv) const {
    if (classes_.empty()) throw InputError("predict: model not trained");
    const auto p = probabilities(standardized(fv));
    // classes_ ascends in severity; strict > keeps the first (least severe)
    // of any tied maximum
    std::size_t best = 0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (p[k] > p[best]) best = k;
    }
    return {classes_[best], p};
}

double Classifier::probability_of(const FeatureVector& fv, CognitiveLabel label) const {
    const auto p = probabilities(standardized(fv));
    for (std::size_t k = 0; k < classes_.size(); ++k) {
        if (classes_[k] == label) return p[k];
    }
    return 0.0;
}

Metrics Classifier::evaluate(const std::vector<FeatureVector>& features,
                             const std::vector<CognitiveLabel>& labels) const {
    if (features.size() != labels.size() || features.empty()) {
        throw InputError("evaluate: dataset empty or misaligned");
    }
    Metrics m;
    m.classes = classes_;
    const std::size_t K = classes_.size();
    m.confusion.assign(K, std::vector<long long>(K, 0));

    std::map<CognitiveLabel, int> class_index;
    for (std::size_t k = 0; k < K; ++k) class_index[classes_[k]] = static_cast<int>(k);

    long long correct = 0;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto [pred, probs] = predict(features[i]);
        const auto it = class_index.find(labels[i]);
        if (it == class_index.end()) {
            throw InputError("evaluate: label absent from model classes: " +
                             std::string(to_string(labels[i])));
        }
        const int t = it->second;
        const int p = class_index[pred];
        ++m.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
        if (t == p) ++correct;
    }
    m.accuracy = static_cast<double>(correct) / static_cast<double>(features.size());

    double f1_sum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        long long tp = m.confusion[k][k];
        long long fp = 0;
        long long fn = 0;
        for (std::size_t j = 0; j < K; ++j) {
            if (j == k) continue;
            fp += m.confusion[j][k];
            fn += m.confusion[k][j];
        }
        const double precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
        const double recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
        const double f1 = precision + recall > 0.0
                              ? 2.0 * precision * recall / (precision + recall)
                              : 0.0;
        m.precision[classes_[k]] = precision;
        m.recall[classes_[k]] = recall;
        m.f1[classes_[k]] = f1;
        f1_sum += f1;
    }
    m.macro_f1 = f1_sum / static_cast<double>(K);
    return m;
}

std::string Classifier::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = "cogsim-model";
    j["format_version"] = 1;
    j["classes"] = nlohmann::json::array();
    for (CognitiveLabel l : classes_) j["classes"].push_back(std::string(to_string(l)));
    j["feature_names"] = nlohmann::json::array();
    for (auto name : feature_names()) j["feature_names"].push_back(std::string(name));
    j["feature_mean"] = feature_mean_;
    j["feature_std"] = feature_std_;
    j["feature_active"] = std::vector<int>(feature_active_.begin(), feature_active_.end());
    j["weights"] = weights_;
    j["bias"] = bias_;
    return j.dump(2);
}

Classifier Classifier::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("model JSON invalid: ") + e.what());
    }
    if (j.value("format", "") != "cogsim-model") {
        throw ParseError("not a cogsim model document");
    }
    Classifier m;
    for (const auto& name : j.at("classes")) {
        m.classes_.push_back(label_from_string(name.get<std::string>()));
    }
    m.feature_mean_ = j.at("feature_mean").get<std::vector<double>>();
    m.feature_std_ = j.at("feature_std").get<std::vector<double>>();
    const auto active = j.at("feature_active").get<std::vector<int>>();
    m.feature_active_.assign(active.size(), true);
    for (std::size_t i = 0; i < active.size(); ++i) m.feature_active_[i] = active[i] != 0;
    m.weights_ = j.at("weights").get<std::vector<std::vector<double>>>();
    m.bias_ = j.at("bias").get<std::vector<double>>();
    if (m.weights_.size() != m.classes_.size() || m.bias_.size() != m.classes_.size()) {
        throw ParseError("model document has inconsistent shapes");
    }
    return m;
}

void Classifier::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write model file: " + path);
    out << to_json() << '\n';
}

Classifier Classifier::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace cogsim
