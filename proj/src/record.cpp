#include "vitalsign/record.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace vitalsign {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

bool parse_full_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

// key=value field of the CSV record header
std::string expect_field(const std::string& field, const std::string& key) {
    if (field.size() < key.size() + 1 || field.compare(0, key.size(), key) != 0 ||
        field[key.size()] != '=') {
        raise(ErrorCode::MalformedHeader, "record header field '" + field + "' should be " + key + "=<value>");
    }
    return field.substr(key.size() + 1);
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64(const std::string& in, std::size_t off) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[off + i])) << (8 * i);
    return v;
}

double get_f64(const std::string& in, std::size_t off) {
    return std::bit_cast<double>(get_u64(in, off));
}

RawRecord parse_record_csv(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::MalformedHeader, "empty record file");
    line = strip_cr(line);

    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) raise(ErrorCode::MalformedHeader, "record header needs 3 fields: " + line);

    RawRecord r;
    std::string rate_str = expect_field(line.substr(0, c1), "rate_hz");
    std::string start_str = expect_field(line.substr(c1 + 1, c2 - c1 - 1), "start_s");
    r.patient_id = expect_field(line.substr(c2 + 1), "patient");

    double rate = 0.0;
    if (!parse_full_double(rate_str, rate)) raise(ErrorCode::MalformedHeader, "bad rate: " + rate_str);
    if (!(rate > 0.0)) raise(ErrorCode::NonPositiveRate, "rate_hz must be > 0, got " + rate_str);
    r.sampling_rate_hz = rate;

    double start = 0.0;
    if (!parse_full_double(start_str, start) || start < 0.0)
        raise(ErrorCode::MalformedHeader, "bad start_s: " + start_str);
    r.start_offset_s = start;

    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        if (to_lower(line) == "nan") {
            r.samples.push_back(missing_value());
            continue;
        }
        double v = 0.0;
        if (!parse_full_double(line, v) || std::isnan(v))
            raise(ErrorCode::NonNumericSample, "bad sample line: " + line);
        r.samples.push_back(v);
    }
    if (r.samples.empty()) raise(ErrorCode::EmptyRecord, "record has no samples");
    return r;
}

constexpr char kHrwMagic[4] = {'H', 'R', 'W', '1'};

RawRecord parse_record_hrw(const std::string& bytes) {
    if (bytes.size() < 20 || std::memcmp(bytes.data(), kHrwMagic, 4) != 0)
        raise(ErrorCode::MalformedHeader, "not an HRW1 stream");
    double rate = get_f64(bytes, 4);
    if (std::isnan(rate) || !(rate > 0.0)) raise(ErrorCode::NonPositiveRate, "HRW rate must be > 0");
    std::uint64_t count = get_u64(bytes, 12);
    if (count == 0) raise(ErrorCode::EmptyRecord, "HRW record has no samples");
    if (bytes.size() != 20 + count * 8)
        raise(ErrorCode::MalformedHeader, "HRW stream length does not match sample count");
    RawRecord r;
    r.sampling_rate_hz = rate;
    r.samples.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) r.samples[i] = get_f64(bytes, 20 + i * 8);
    return r;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool same_samples(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_missing(a[i]) != is_missing(b[i])) return false;
        if (!is_missing(a[i]) && a[i] != b[i]) return false;
    }
    return true;
}

bool same_record(const RawRecord& a, const RawRecord& b) {
    return a.patient_id == b.patient_id && a.sampling_rate_hz == b.sampling_rate_hz &&
           a.start_offset_s == b.start_offset_s && same_samples(a.samples, b.samples);
}

RawRecord parse_record(const std::string& bytes, RecordFormat format) {
    return format == RecordFormat::csv ? parse_record_csv(bytes) : parse_record_hrw(bytes);
}

std::string write_record(const RawRecord& r, RecordFormat format) {
    if (format == RecordFormat::csv) {
        std::string out = "rate_hz=" + format_double(r.sampling_rate_hz) +
                          ",start_s=" + format_double(r.start_offset_s) + ",patient=" + r.patient_id + "\n";
        for (double v : r.samples) {
            if (is_missing(v))
                out += "NaN\n";
            else
                out += format_double(v) + "\n";
        }
        return out;
    }
    std::string out(kHrwMagic, 4);
    put_f64(out, r.sampling_rate_hz);
    put_u64(out, r.samples.size());
    for (double v : r.samples) put_f64(out, is_missing(v) ? missing_value() : v);
    return out;
}

RecordFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : to_lower(path.substr(dot + 1));
    if (ext == "csv") return RecordFormat::csv;
    if (ext == "hrw") return RecordFormat::hrw;
    raise(ErrorCode::IoFailure, "cannot deduce record format from path: " + path);
}

RawRecord read_record_file(const std::string& path) {
    RawRecord r = parse_record(read_file(path), format_from_path(path));
    return r;
}

void write_record_file(const RawRecord& r, const std::string& path) {
    write_file(path, write_record(r, format_from_path(path)));
}

const char* to_string(CareUnit u) {
    switch (u) {
        case CareUnit::CCU: return "CCU";
        case CareUnit::CSRU: return "CSRU";
        case CareUnit::MICU: return "MICU";
        case CareUnit::NICU: return "NICU";
        case CareUnit::NWARD: return "NWARD";
        case CareUnit::SICU: return "SICU";
        case CareUnit::TSICU: return "TSICU";
    }
    return "?";
}

const char* to_string(Outcome o) {
    return o == Outcome::PassedAway ? "passed_away" : "survived";
}

CareUnit care_unit_from_string(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (CareUnit unit : all_care_units())
        if (u == to_string(unit)) return unit;
    raise(ErrorCode::UnknownCareUnit, "unknown care unit: " + s);
}

Outcome outcome_from_string(const std::string& s) {
    std::string o = to_lower(s);
    if (o == "died" || o == "passed_away") return Outcome::PassedAway;
    if (o == "survived" || o == "alive") return Outcome::Survived;
    raise(ErrorCode::UnknownOutcome, "unknown outcome: " + s);
}

constexpr const char* kManifestHeader = "patient_id,record_path,care_unit,outcome";

CohortManifest parse_manifest(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kManifestHeader)
        raise(ErrorCode::MalformedHeader, std::string("manifest header must be: ") + kManifestHeader);

    CohortManifest m;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        std::size_t c3 = c2 == std::string::npos ? std::string::npos : line.find(',', c2 + 1);
        if (c3 == std::string::npos) raise(ErrorCode::MalformedHeader, "manifest row needs 4 fields: " + line);
        ManifestEntry e;
        e.patient_id = line.substr(0, c1);
        e.record_path = line.substr(c1 + 1, c2 - c1 - 1);
        e.care_unit = care_unit_from_string(line.substr(c2 + 1, c3 - c2 - 1));
        e.outcome = outcome_from_string(line.substr(c3 + 1));
        if (!seen.insert(e.patient_id).second)
            raise(ErrorCode::DuplicatePatient, "duplicate patient_id: " + e.patient_id);
        m.entries.push_back(std::move(e));
    }
    return m;
}

CohortManifest load_manifest(const std::string& path) {
    return parse_manifest(read_file(path));
}

std::string write_manifest(const CohortManifest& m) {
    std::string out = std::string(kManifestHeader) + "\n";
    for (const auto& e : m.entries) {
        out += e.patient_id + "," + e.record_path + "," + to_string(e.care_unit) + "," +
               to_string(e.outcome) + "\n";
    }
    return out;
}

void save_manifest(const CohortManifest& m, const std::string& path) {
    write_file(path, write_manifest(m));
}

CohortManifest filter_care_unit(const CohortManifest& m, CareUnit unit) {
    CohortManifest out;
    for (const auto& e : m.entries)
        if (e.care_unit == unit) out.entries.push_back(e);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::IoFailure, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::IoFailure, "cannot write file: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(ErrorCode::IoFailure, "short write: " + path);
}

}  // namespace vitalsign
