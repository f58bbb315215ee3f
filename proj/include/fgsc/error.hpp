#ifndef FGSC_ERROR_HPP
#define FGSC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fgsc {

enum class ErrorCode {
  MissingFile,
  UnsupportedFormat,
  CorruptData,
  InvalidArgument,
  EmptyIntersection,
  ImageTooSmall,
  OutOfBounds,
  DegenerateSystem,
  DimensionMismatch,
  ExhaustedSamples,
  SingleClass,
  NonFiniteInput,
  LayoutMismatch,
  NoEyeVisible,
  EmptyTrainingSet,
  InvalidBox,
  InsufficientSamples,
  UnfittedModel,
  ParseError,
  MissingField,
  NoValidDescriptors,
  InconsistentLayout,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptData: return "CorruptData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ExhaustedSamples: return "ExhaustedSamples";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::NoEyeVisible: return "NoEyeVisible";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::InvalidBox: return "InvalidBox";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::UnfittedModel: return "UnfittedModel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::NoValidDescriptors: return "NoValidDescriptors";
    case ErrorCode::InconsistentLayout: return "InconsistentLayout";
  }
  return "UnknownError";
}

}  // namespace fgsc

#endif
