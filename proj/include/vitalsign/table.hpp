#pragma once

#include <string>
#include <vector>

#include "vitalsign/features.hpp"
#include "vitalsign/record.hpp"

namespace vitalsign {

// Labeled feature matrix; label 1 marks the positive class (passed away).
struct FeatureTable {
    std::vector<std::string> patient_ids;
    std::vector<int> labels;
    Matrix rows;

    std::size_t size() const { return rows.size(); }
};

FeatureTable parse_feature_csv(const std::string& bytes);
FeatureTable load_feature_csv(const std::string& path);
std::string write_feature_csv(const FeatureTable& t);
void save_feature_csv(const FeatureTable& t, const std::string& path);

inline int label_of(Outcome o) { return o == Outcome::PassedAway ? 1 : 0; }

}  // namespace vitalsign
