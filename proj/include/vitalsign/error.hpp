#pragma once

#include <stdexcept>
#include <string>

namespace vitalsign {

enum class ErrorCode {
    // ingestion
    MalformedHeader,
    NonPositiveRate,
    EmptyRecord,
    NonNumericSample,
    DuplicatePatient,
    UnknownCareUnit,
    UnknownOutcome,
    IoFailure,
    // preprocessing
    AllInvalid,
    LeadingMissing,
    IrrationalRatio,
    // features
    TooShort,
    TooFewRows,
    // imbalance
    DegenerateMinority,
    SingleClass,
    // models
    InvalidDistribution,
    EmptyData,
    NoBranches,
    SingularCovariance,
    KTooLarge,
    DimensionMismatch,
    // evaluation
    TooFewSamples,
    BadModelSpec,
};

// Exit-code buckets used by the CLI: 2 = I/O, 3 = data validation, 4 = numeric.
inline int error_category(ErrorCode c) {
    switch (c) {
        case ErrorCode::IoFailure:
            return 2;
        case ErrorCode::SingularCovariance:
        case ErrorCode::IrrationalRatio:
            return 4;
        default:
            return 3;
    }
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace vitalsign
