#include "latcover/rational.hpp"

#include <cctype>

namespace latcover {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::ZeroNormal: return "ZeroNormal";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DegenerateLattice: return "DegenerateLattice";
    case Errc::Unbounded: return "Unbounded";
    case Errc::Empty: return "Empty";
    case Errc::GammaOutOfRange: return "GammaOutOfRange";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::FacetNotSymmetric: return "FacetNotSymmetric";
    case Errc::NotParallelohedron: return "NotParallelohedron";
    case Errc::Unclassified: return "Unclassified";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::CertificateNotFound: return "CertificateNotFound";
    case Errc::CenterOutside: return "CenterOutside";
    case Errc::DegenerateSlice: return "DegenerateSlice";
    case Errc::DegenerateHexagon: return "DegenerateHexagon";
    case Errc::InvalidBaseReport: return "InvalidBaseReport";
    case Errc::AuditFailure: return "AuditFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_plain_integer(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view numpart = s.substr(0, slash);
  if (!is_plain_integer(numpart)) return std::nullopt;
  Int num(std::string(numpart), 10);
  if (slash == std::string_view::npos) return Rat(num);
  std::string_view denpart = s.substr(slash + 1);
  if (!is_plain_integer(denpart) || denpart[0] == '-') return std::nullopt;
  Int den(std::string(denpart), 10);
  if (sgn(den) == 0) return std::nullopt;
  return Rat(num, den);
}

Rat rat_from_string(std::string_view s) {
  auto r = Rat::parse(s);
  if (!r) throw Error(Errc::ParseError, "not a rational literal: \"" + std::string(s) + "\"");
  return *r;
}

}  // namespace latcover
