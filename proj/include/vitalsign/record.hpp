#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "vitalsign/error.hpp"

namespace vitalsign {

// Missing samples are carried as quiet NaN all the way through ingestion;
// filling them in is the preprocessing stage's job.
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double v) { return std::isnan(v); }

struct RawRecord {
    std::string patient_id;
    std::vector<double> samples;  // beats/min, NaN = missing
    double sampling_rate_hz = 1.0;
    double start_offset_s = 0.0;  // seconds from ICU admission
};

bool same_samples(const std::vector<double>& a, const std::vector<double>& b);
bool same_record(const RawRecord& a, const RawRecord& b);

enum class RecordFormat { csv, hrw };

// CSV: header line `rate_hz=<r>,start_s=<s>,patient=<id>`, then one sample per
// line with "NaN" marking a missing value.
// HRW: magic "HRW1", little-endian f64 rate, u64 count, f64 samples (missing as
// quiet NaN). The binary layout carries no patient id or start offset.
RawRecord parse_record(const std::string& bytes, RecordFormat format);
std::string write_record(const RawRecord& r, RecordFormat format);

RecordFormat format_from_path(const std::string& path);
RawRecord read_record_file(const std::string& path);
void write_record_file(const RawRecord& r, const std::string& path);

enum class CareUnit { CCU, CSRU, MICU, NICU, NWARD, SICU, TSICU };
enum class Outcome { PassedAway, Survived };

const char* to_string(CareUnit u);
const char* to_string(Outcome o);
CareUnit care_unit_from_string(const std::string& s);
Outcome outcome_from_string(const std::string& s);
inline const std::vector<CareUnit>& all_care_units() {
    static const std::vector<CareUnit> units = {CareUnit::CCU,  CareUnit::CSRU, CareUnit::MICU,
                                                CareUnit::NICU, CareUnit::NWARD, CareUnit::SICU,
                                                CareUnit::TSICU};
    return units;
}

struct ManifestEntry {
    std::string patient_id;
    std::string record_path;  // relative to the manifest's directory
    CareUnit care_unit = CareUnit::CCU;
    Outcome outcome = Outcome::Survived;
};

struct CohortManifest {
    std::vector<ManifestEntry> entries;
};

CohortManifest parse_manifest(const std::string& bytes);
CohortManifest load_manifest(const std::string& path);
std::string write_manifest(const CohortManifest& m);
void save_manifest(const CohortManifest& m, const std::string& path);
CohortManifest filter_care_unit(const CohortManifest& m, CareUnit unit);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

// 17 significant digits, round-trips any finite double through text exactly.
std::string format_double(double v);

}  // namespace vitalsign
