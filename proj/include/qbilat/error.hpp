#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbilat {

enum class Errc {
  InvalidBase,
  InvalidArgument,
  AmbiguousZeroTimesPole,
  DegenerateSpecialParameter,
  InvalidSpec,
  Divergent,
  PoleInTerm,
  NonDecayingTail,
  InvalidInverseParams,
  PrefactorPole,
  NotAdmissible,
  UnknownIdentity,
  RegionTooThin,
  ParseError,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qbilat
