#include "vitalsign/model.hpp"

#include <json.hpp>

#include "vitalsign/record.hpp"

namespace vitalsign {

using json = nlohmann::ordered_json;

const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::decision_tree: return "decision_tree";
        case ModelKind::linear_discriminant: return "linear_discriminant";
        case ModelKind::logistic_regression: return "logistic_regression";
        case ModelKind::linear_svm: return "linear_svm";
        case ModelKind::gaussian_svm: return "gaussian_svm";
        case ModelKind::random_forest: return "random_forest";
        case ModelKind::boosted_trees: return "boosted_trees";
        case ModelKind::knn: return "knn";
    }
    return "?";
}

const std::vector<ModelKind>& all_model_kinds() {
    static const std::vector<ModelKind> kinds = {
        ModelKind::decision_tree, ModelKind::linear_discriminant,
        ModelKind::logistic_regression, ModelKind::linear_svm,
        ModelKind::gaussian_svm, ModelKind::random_forest,
        ModelKind::boosted_trees, ModelKind::knn};
    return kinds;
}

ModelKind model_kind_from_string(const std::string& s) {
    for (ModelKind k : all_model_kinds())
        if (s == to_string(k)) return k;
    raise(ErrorCode::BadModelSpec, "unknown model kind: " + s);
}

TrainedModel train_model(const Matrix& X, const std::vector<int>& y, const ModelSpec& spec) {
    if (X.empty()) raise(ErrorCode::EmptyData, "training needs rows");
    TrainedModel m;
    m.kind = spec.kind;
    m.feature_count = X[0].size();
    switch (spec.kind) {
        case ModelKind::decision_tree:
            m.tree = train_tree(X, y, spec.tree);
            break;
        case ModelKind::linear_discriminant:
            m.linear = train_lda(X, y);
            break;
        case ModelKind::logistic_regression:
            m.linear = train_logistic(X, y, spec.logistic).scorer;
            break;
        case ModelKind::linear_svm:
            m.linear = train_linear_svm(X, y, spec.linear_svm);
            break;
        case ModelKind::gaussian_svm:
            m.gsvm = train_gaussian_svm(X, y, spec.gaussian_svm);
            break;
        case ModelKind::random_forest:
            m.forest = train_random_forest(X, y, spec.forest);
            break;
        case ModelKind::boosted_trees:
            m.boost = train_boosted_trees(X, y, spec.boost);
            break;
        case ModelKind::knn:
            m.knn = train_knn(X, y, spec.knn);
            break;
    }
    return m;
}

double score(const TrainedModel& m, const std::vector<double>& x) {
    if (x.size() != m.feature_count)
        raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(m.feature_count) +
                                                " features, got " + std::to_string(x.size()));
    switch (m.kind) {
        case ModelKind::decision_tree:
            return tree_score(*m.tree, x);
        case ModelKind::linear_discriminant:
        case ModelKind::logistic_regression:
        case ModelKind::linear_svm:
            return sigmoid(linear_margin(m.linear, x));
        case ModelKind::gaussian_svm:
            return sigmoid(gaussian_svm_decision(m.gsvm, x));
        case ModelKind::random_forest:
            return forest_score(m.forest, x);
        case ModelKind::boosted_trees:
            return boost_score(m.boost, x);
        case ModelKind::knn:
            return knn_score(m.knn, x);
    }
    return 0.5;
}

int predict(const TrainedModel& m, const std::vector<double>& x, double threshold) {
    return score(m, x) >= threshold ? 1 : 0;
}

namespace {

json tree_to_json(const TreeNode& n) {
    json j;
    j["kind"] = n.leaf ? "leaf" : "branch";
    j["gdi"] = n.gdi;
    j["probability"] = n.probability;
    if (n.leaf) {
        j["label"] = n.label;
        j["fractions"] = {n.fractions[0], n.fractions[1]};
    } else {
        j["feature"] = n.feature;
        j["threshold"] = n.threshold;
        j["left"] = tree_to_json(*n.left);
        j["right"] = tree_to_json(*n.right);
    }
    return j;
}

std::unique_ptr<TreeNode> tree_from_json(const json& j) {
    auto n = std::make_unique<TreeNode>();
    n->gdi = j.at("gdi").get<double>();
    n->probability = j.at("probability").get<double>();
    if (j.at("kind") == "leaf") {
        n->leaf = true;
        n->label = j.at("label").get<int>();
        n->fractions = {j.at("fractions")[0].get<double>(), j.at("fractions")[1].get<double>()};
    } else {
        n->leaf = false;
        n->feature = j.at("feature").get<std::size_t>();
        n->threshold = j.at("threshold").get<double>();
        n->left = tree_from_json(j.at("left"));
        n->right = tree_from_json(j.at("right"));
        // leaves carry the vote; interior label is reconstructed for completeness
        n->label = n->probability >= 0.0 && j.contains("label") ? j.at("label").get<int>() : 0;
    }
    return n;
}

json linear_to_json(const LinearScorer& m) {
    return json{{"weights", m.weights}, {"bias", m.bias}};
}

LinearScorer linear_from_json(const json& j) {
    LinearScorer m;
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    return m;
}

}  // namespace

std::string model_to_json(const TrainedModel& m) {
    json j;
    j["version"] = "v1";
    j["variant"] = to_string(m.kind);
    j["feature_count"] = m.feature_count;
    switch (m.kind) {
        case ModelKind::decision_tree:
            j["tree"] = tree_to_json(*m.tree);
            break;
        case ModelKind::linear_discriminant:
        case ModelKind::logistic_regression:
        case ModelKind::linear_svm:
            j["linear"] = linear_to_json(m.linear);
            break;
        case ModelKind::gaussian_svm: {
            json g;
            g["support_x"] = m.gsvm.support_x;
            g["labels_pm"] = m.gsvm.labels_pm;
            g["alphas"] = m.gsvm.alphas;
            g["bias"] = m.gsvm.bias;
            g["gamma"] = m.gsvm.gamma;
            g["C"] = m.gsvm.C;
            j["gaussian_svm"] = std::move(g);
            break;
        }
        case ModelKind::random_forest: {
            json f;
            f["trees"] = json::array();
            for (const auto& t : m.forest.trees) f["trees"].push_back(tree_to_json(*t));
            if (std::isfinite(m.forest.oob_accuracy)) f["oob_accuracy"] = m.forest.oob_accuracy;
            j["forest"] = std::move(f);
            break;
        }
        case ModelKind::boosted_trees: {
            json b;
            b["trees"] = json::array();
            for (const auto& t : m.boost.trees) b["trees"].push_back(tree_to_json(*t));
            b["alphas"] = m.boost.alphas;
            b["rounds"] = json::array();
            for (const auto& r : m.boost.rounds)
                b["rounds"].push_back({{"epsilon", r.epsilon}, {"alpha", r.alpha}, {"weight_sum", r.weight_sum}});
            j["boost"] = std::move(b);
            break;
        }
        case ModelKind::knn: {
            json k;
            k["train_x"] = m.knn.train_x;
            k["train_y"] = m.knn.train_y;
            k["k"] = m.knn.k;
            j["knn"] = std::move(k);
            break;
        }
    }
    return j.dump(2) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(ErrorCode::MalformedHeader, "model file is not valid JSON");
    if (!j.contains("version") || j["version"] != "v1")
        raise(ErrorCode::BadModelSpec, "unsupported model document version");

    TrainedModel m;
    m.kind = model_kind_from_string(j.at("variant").get<std::string>());
    m.feature_count = j.at("feature_count").get<std::size_t>();
    switch (m.kind) {
        case ModelKind::decision_tree:
            m.tree = tree_from_json(j.at("tree"));
            break;
        case ModelKind::linear_discriminant:
        case ModelKind::logistic_regression:
        case ModelKind::linear_svm:
            m.linear = linear_from_json(j.at("linear"));
            break;
        case ModelKind::gaussian_svm: {
            const json& g = j.at("gaussian_svm");
            m.gsvm.support_x = g.at("support_x").get<Matrix>();
            m.gsvm.labels_pm = g.at("labels_pm").get<std::vector<int>>();
            m.gsvm.alphas = g.at("alphas").get<std::vector<double>>();
            m.gsvm.bias = g.at("bias").get<double>();
            m.gsvm.gamma = g.at("gamma").get<double>();
            m.gsvm.C = g.at("C").get<double>();
            break;
        }
        case ModelKind::random_forest: {
            const json& f = j.at("forest");
            for (const auto& t : f.at("trees")) m.forest.trees.push_back(tree_from_json(t));
            if (f.contains("oob_accuracy")) m.forest.oob_accuracy = f.at("oob_accuracy").get<double>();
            break;
        }
        case ModelKind::boosted_trees: {
            const json& b = j.at("boost");
            for (const auto& t : b.at("trees")) m.boost.trees.push_back(tree_from_json(t));
            m.boost.alphas = b.at("alphas").get<std::vector<double>>();
            for (const auto& r : b.at("rounds"))
                m.boost.rounds.push_back({r.at("epsilon").get<double>(), r.at("alpha").get<double>(),
                                          r.at("weight_sum").get<double>()});
            break;
        }
        case ModelKind::knn: {
            const json& k = j.at("knn");
            m.knn.train_x = k.at("train_x").get<Matrix>();
            m.knn.train_y = k.at("train_y").get<std::vector<int>>();
            m.knn.k = k.at("k").get<std::size_t>();
            break;
        }
    }
    return m;
}

void save_model(const TrainedModel& m, const std::string& path) {
    write_file(path, model_to_json(m));
}

TrainedModel load_model(const std::string& path) {
    return model_from_json(read_file(path));
}

}  // namespace vitalsign
