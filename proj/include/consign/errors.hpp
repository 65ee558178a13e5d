#pragma once

#include <stdexcept>
#include <string>

namespace consign {

enum class errc {
  missing_file,
  bad_npy,
  bad_manifest,
  shape_mismatch,
  bad_label_range,
  non_finite_score,
  invalid_config,
  k_too_large,
  empty_reference,
  infeasible_threshold,
  io_error,
};

// All library failures surface as consign::error; `code()` identifies the
// condition for callers that dispatch (the CLI maps codes to exit codes).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::missing_file: return "MissingFile";
    case errc::bad_npy: return "BadNpy";
    case errc::bad_manifest: return "BadManifest";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::bad_label_range: return "BadLabelRange";
    case errc::non_finite_score: return "NonFiniteScore";
    case errc::invalid_config: return "InvalidConfig";
    case errc::k_too_large: return "KTooLarge";
    case errc::empty_reference: return "EmptyReference";
    case errc::infeasible_threshold: return "InfeasibleThreshold";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace consign
