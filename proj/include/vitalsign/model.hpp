#pragma once

#include <string>

#include "vitalsign/ensemble.hpp"
#include "vitalsign/knn.hpp"
#include "vitalsign/svm.hpp"

namespace vitalsign {

enum class ModelKind {
    decision_tree,
    linear_discriminant,
    logistic_regression,
    linear_svm,
    gaussian_svm,
    random_forest,
    boosted_trees,
    knn,
};

const char* to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);
const std::vector<ModelKind>& all_model_kinds();

struct ModelSpec {
    ModelKind kind = ModelKind::decision_tree;
    TreeParams tree;
    LogisticParams logistic;
    LinearSvmParams linear_svm;
    GaussianSvmParams gaussian_svm;
    ForestParams forest;
    AdaBoostParams boost;
    KnnParams knn;
};

// One trained classifier behind the uniform score/predict contract; only the
// payload matching `kind` is populated.
struct TrainedModel {
    ModelKind kind = ModelKind::decision_tree;
    std::size_t feature_count = 0;

    std::unique_ptr<TreeNode> tree;
    LinearScorer linear;
    GaussianSvmModel gsvm;
    ForestModel forest;
    BoostModel boost;
    KnnModel knn;
};

TrainedModel train_model(const Matrix& X, const std::vector<int>& y, const ModelSpec& spec);

// score in [0,1]; monotone in each variant's native decision value
double score(const TrainedModel& m, const std::vector<double>& x);
int predict(const TrainedModel& m, const std::vector<double>& x, double threshold = 0.5);

// JSON document version "v1"; round-trips scores bit-for-bit.
std::string model_to_json(const TrainedModel& m);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& m, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace vitalsign
