#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

enum class Errc {
  zero_vector,
  equal_points,
  equal_lines,
  component_contained,
  not_squarefree,
  not_monic,
  no_sign_change,
  duplicate_line,
  equal_anchors,
  anchor_out_of_range,
  bad_anchor_shape,
  no_curve,
  not_unique,
  anchor_not_on_curve,
  anchor_not_singular,
  uniqueness_failure,
  duplicate_component,
  root_not_isolated,
  point_not_on_curve,
  shared_component,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_vector: return "ZeroVector";
    case Errc::equal_points: return "EqualPoints";
    case Errc::equal_lines: return "EqualLines";
    case Errc::component_contained: return "ComponentContained";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::not_monic: return "NotMonic";
    case Errc::no_sign_change: return "NoSignChange";
    case Errc::duplicate_line: return "DuplicateLine";
    case Errc::equal_anchors: return "EqualAnchors";
    case Errc::anchor_out_of_range: return "AnchorOutOfRange";
    case Errc::bad_anchor_shape: return "BadAnchorShape";
    case Errc::no_curve: return "NoCurve";
    case Errc::not_unique: return "NotUnique";
    case Errc::anchor_not_on_curve: return "AnchorNotOnCurve";
    case Errc::anchor_not_singular: return "AnchorNotSingular";
    case Errc::uniqueness_failure: return "UniquenessFailure";
    case Errc::duplicate_component: return "DuplicateComponent";
    case Errc::root_not_isolated: return "RootNotIsolated";
    case Errc::point_not_on_curve: return "PointNotOnCurve";
    case Errc::shared_component: return "SharedComponent";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace rigid
