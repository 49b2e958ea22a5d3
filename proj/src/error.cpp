#include "qbilat/error.hpp"

namespace qbilat {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::InvalidBase: return "InvalidBase";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::AmbiguousZeroTimesPole: return "AmbiguousZeroTimesPole";
    case Errc::DegenerateSpecialParameter: return "DegenerateSpecialParameter";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::Divergent: return "Divergent";
    case Errc::PoleInTerm: return "PoleInTerm";
    case Errc::NonDecayingTail: return "NonDecayingTail";
    case Errc::InvalidInverseParams: return "InvalidInverseParams";
    case Errc::PrefactorPole: return "PrefactorPole";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::RegionTooThin: return "RegionTooThin";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qbilat
