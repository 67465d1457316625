#pragma once

#include <stdexcept>
#include <string>

namespace latcover {

enum class Errc {
  DimensionMismatch,
  DimensionUnsupported,
  ZeroNormal,
  SingularMatrix,
  DegenerateInput,
  DegenerateLattice,
  Unbounded,
  Empty,
  GammaOutOfRange,
  NotAVertex,
  FacetNotSymmetric,
  NotParallelohedron,
  Unclassified,
  SearchBudgetExceeded,
  CertificateNotFound,
  CenterOutside,
  DegenerateSlice,
  DegenerateHexagon,
  InvalidBaseReport,
  AuditFailure,
  ParseError,
  Inconclusive,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace latcover
