#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cogsim/features.hpp"
#include "cogsim/stats.hpp"

namespace cogsim {

struct Hyperparams {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 1e-3;
    bool class_weights = true;  // inverse-frequency weights
};

struct Metrics {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    std::map<CognitiveLabel, double> precision;
    std::map<CognitiveLabel, double> recall;
    std::map<CognitiveLabel, double> f1;
    // rows = truth, cols = prediction, indexed by position in `classes`
    std::vector<std::vector<long long>> confusion;
    std::vector<CognitiveLabel> classes;

    double f1_of(CognitiveLabel l) const {
        const auto it = f1.find(l);
        return it == f1.end() ? 0.0 : it->second;
    }
};

// Softmax classifier over standardized fused features, trained with
// full-batch gradient descent and an L2 penalty.
class Classifier {
public:
    Classifier() = default;

    static Classifier train(const std::vector<FeatureVector>& features,
                            const std::vector<CognitiveLabel>& labels,
                            const Hyperparams& hyper = Hyperparams{});

    // Probabilities in class order; argmax with ties resolved toward the
    // lower-severity class.
    std::pair<CognitiveLabel, std::vector<double>> predict(const FeatureVector& fv) const;

    double probability_of(const FeatureVector& fv, CognitiveLabel label) const;

    Metrics evaluate(const std::vector<FeatureVector>& features,
                     const std::vector<CognitiveLabel>& labels) const;

    const std::vector<CognitiveLabel>& classes() const { return classes_; }
    const std::vector<double>& loss_history() const { return loss_history_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Versioned JSON document with weights, bias, standardization and class
    // order; reload is exact.
    std::string to_json() const;
    static Classifier from_json(const std::string& text);
    void save(const std::string& path) const;
    static Classifier load(const std::string& path);

    // Internals used by the gradient check in tests.
    static double loss_at(const std::vector<std::vector<double>>& xs,
                          const std::vector<int>& ys,
                          const std::vector<double>& sample_weights,
                          const std::vector<std::vector<double>>& weights,
                          const std::vector<double>& bias, double l2);
    static void gradient_at(const std::vector<std::vector<double>>& xs,
                            const std::vector<int>& ys,
                            const std::vector<double>& sample_weights,
                            const std::vector<std::vector<double>>& weights,
                            const std::vector<double>& bias, double l2,
                            std::vector<std::vector<double>>& grad_w,
                            std::vector<double>& grad_b);

private:
    std::vector<CognitiveLabel> classes_;       // ascending severity
    std::vector<double> feature_mean_;          // standardization
    std::vector<double> feature_std_;           // 1.0 for dropped features
    std::vector<bool> feature_active_;          // false = constant, dropped
    std::vector<std::vector<double>> weights_;  // K x F
    std::vector<double> bias_;                  // K
    std::vector<double> loss_history_;
    std::vector<std::string> warnings_;

    std::vector<double> standardized(const FeatureVector& fv) const;
    std::vector<double> probabilities(const std::vector<double>& x) const;
};

}  // namespace cogsim
