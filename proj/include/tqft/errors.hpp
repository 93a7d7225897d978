#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqft {

enum class Errc {
  // groups
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  UnknownName,
  SizeLimit,
  NotClosed,
  // cochains
  ArityTooHigh,
  NotCocycle,
  // dcomplex
  NotInvolution,
  NonOrientable,
  DanglingFace,
  NotOrderRespecting,
  IncompatibleMatching,
  OrientationClash,
  NotASurface,
  // gauge / pathintegral
  NotFlat,
  NotFlatBoundary,
  UnknownLoops,
  TwistedGenusUnsupported,
  UnsupportedSurface,
  SectorMismatch,
  // euler
  NonIntegerTotal,
  NonIntegerRelative,
  NotRelative,
  TorsorMismatch,
  IncompatibleBundle,
  // io
  BadInput,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::UnknownName: return "UnknownName";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ArityTooHigh: return "ArityTooHigh";
    case Errc::NotCocycle: return "NotCocycle";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NonOrientable: return "NonOrientable";
    case Errc::DanglingFace: return "DanglingFace";
    case Errc::NotOrderRespecting: return "NotOrderRespecting";
    case Errc::IncompatibleMatching: return "IncompatibleMatching";
    case Errc::OrientationClash: return "OrientationClash";
    case Errc::NotASurface: return "NotASurface";
    case Errc::NotFlat: return "NotFlat";
    case Errc::NotFlatBoundary: return "NotFlatBoundary";
    case Errc::UnknownLoops: return "UnknownLoops";
    case Errc::TwistedGenusUnsupported: return "TwistedGenusUnsupported";
    case Errc::UnsupportedSurface: return "UnsupportedSurface";
    case Errc::SectorMismatch: return "SectorMismatch";
    case Errc::NonIntegerTotal: return "NonIntegerTotal";
    case Errc::NonIntegerRelative: return "NonIntegerRelative";
    case Errc::NotRelative: return "NotRelative";
    case Errc::TorsorMismatch: return "TorsorMismatch";
    case Errc::IncompatibleBundle: return "IncompatibleBundle";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tqft
