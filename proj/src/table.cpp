#include "vitalsign/table.hpp"

#include <cstdlib>
#include <sstream>

namespace vitalsign {

namespace {

std::string feature_csv_header() {
    std::string h = "patient_id,outcome";
    for (std::size_t j = 1; j <= kFeatureCount; ++j) h += ",f" + std::to_string(j);
    return h;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

FeatureTable parse_feature_csv(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::MalformedHeader, "empty feature file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != feature_csv_header())
        raise(ErrorCode::MalformedHeader, "feature CSV header must be: " + feature_csv_header());

    FeatureTable t;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 2 + kFeatureCount)
            raise(ErrorCode::MalformedHeader, "feature row needs " +
                                                  std::to_string(2 + kFeatureCount) +
                                                  " fields: " + line);
        t.patient_ids.push_back(fields[0]);
        t.labels.push_back(label_of(outcome_from_string(fields[1])));
        std::vector<double> row(kFeatureCount);
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            char* end = nullptr;
            row[j] = std::strtod(fields[2 + j].c_str(), &end);
            if (end != fields[2 + j].c_str() + fields[2 + j].size())
                raise(ErrorCode::NonNumericSample, "bad feature value: " + fields[2 + j]);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

FeatureTable load_feature_csv(const std::string& path) {
    return parse_feature_csv(read_file(path));
}

std::string write_feature_csv(const FeatureTable& t) {
    std::string out = feature_csv_header() + "\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += t.patient_ids[i];
        out += ",";
        out += t.labels[i] == 1 ? "passed_away" : "survived";
        for (std::size_t j = 0; j < kFeatureCount; ++j) out += "," + format_double(t.rows[i][j]);
        out += "\n";
    }
    return out;
}

void save_feature_csv(const FeatureTable& t, const std::string& path) {
    write_file(path, write_feature_csv(t));
}

}  // namespace vitalsign
