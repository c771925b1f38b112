#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rigid/binform.hpp"
#include "rigid/homform.hpp"
#include "rigid/projective.hpp"

namespace rigid {

enum class ComponentKind : uint8_t { line = 0, curve = 1 };

struct ComponentRef {
  ComponentKind kind;
  uint32_t index;

  friend bool operator==(const ComponentRef& a, const ComponentRef& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator<(const ComponentRef& a, const ComponentRef& b) {
    if (a.kind != b.kind) return a.kind < b.kind;  // lines before curves
    return a.index < b.index;
  }
};

inline ComponentRef line_ref(uint32_t i) { return {ComponentKind::line, i}; }
inline ComponentRef curve_ref(uint32_t i) { return {ComponentKind::curve, i}; }

// A recorded singular point with the components through it as witnesses.
struct SingRecord {
  Point point;
  std::vector<ComponentRef> witnesses;  // sorted, unique
  bool self_singular = false;

  friend bool operator==(const SingRecord& a, const SingRecord& b) {
    return a.point == b.point && a.witnesses == b.witnesses && a.self_singular == b.self_singular;
  }
};

// Per-step delta for one point: the witnesses gained at this step. For a
// point first recorded here that is its full witness set.
struct DerivedRecord {
  Point point;
  std::vector<ComponentRef> witnesses;  // sorted, unique, nonempty
  bool self_singular = false;           // set when this step marks the point self-singular

  friend bool operator==(const DerivedRecord& a, const DerivedRecord& b) {
    return a.point == b.point && a.witnesses == b.witnesses && a.self_singular == b.self_singular;
  }
};

struct InitStep {
  friend bool operator==(const InitStep&, const InitStep&) { return true; }
};

struct AddLineStep {
  uint32_t anchor_i = 0;
  uint32_t anchor_j = 0;
  Line line;
  std::vector<DerivedRecord> derived;  // sorted by point

  friend bool operator==(const AddLineStep& a, const AddLineStep& b) {
    return a.anchor_i == b.anchor_i && a.anchor_j == b.anchor_j && a.line == b.line &&
           a.derived == b.derived;
  }
};

struct NonRationalIntersection {
  uint32_t line = 0;    // line index in the configuration
  BinForm factor;       // squarefree primitive factor of the restriction
  friend bool operator==(const NonRationalIntersection& a, const NonRationalIntersection& b) {
    return a.line == b.line && a.factor == b.factor;
  }
};

struct AddCurveStep {
  int degree = 0;
  std::vector<uint32_t> anchors;  // n^2+1 singular-record indices
  HomForm form;
  std::vector<DerivedRecord> derived;                  // sorted by point
  std::vector<NonRationalIntersection> nonrational;    // by line index, then factor

  friend bool operator==(const AddCurveStep& a, const AddCurveStep& b) {
    return a.degree == b.degree && a.anchors == b.anchors && a.form == b.form &&
           a.derived == b.derived && a.nonrational == b.nonrational;
  }
};

using Step = std::variant<InitStep, AddLineStep, AddCurveStep>;

enum class Strategy { naive, chain };

inline const char* strategy_name(Strategy s) {
  return s == Strategy::naive ? "naive" : "chain";
}

// The growing divisor: components, recorded singular points, and the full
// construction trace. A value type; engine operations return new values.
struct Config {
  std::vector<Line> lines;
  std::vector<HomForm> curves;
  std::vector<SingRecord> singular;
  std::vector<Step> trace;

  // Linear scan; the engine keeps a hash index, use that for bulk work.
  int find_record(const Point& p) const {
    for (size_t i = 0; i < singular.size(); ++i)
      if (singular[i].point == p) return static_cast<int>(i);
    return -1;
  }

  bool has_line(const Line& l) const {
    for (const auto& x : lines)
      if (x == l) return true;
    return false;
  }

  bool has_curve(const HomForm& f) const {
    for (const auto& x : curves)
      if (x == f) return true;
    return false;
  }
};

struct GadgetCounters {
  uint64_t unit = 0;
  uint64_t add_integers = 0;
  uint64_t rational = 0;
  uint64_t transfer_axis = 0;
  uint64_t combine_xy = 0;
  uint64_t infinity_hop = 0;

  uint64_t total() const {
    return unit + add_integers + rational + transfer_axis + combine_xy + infinity_hop;
  }
  friend GadgetCounters operator-(const GadgetCounters& a, const GadgetCounters& b) {
    return {a.unit - b.unit,
            a.add_integers - b.add_integers,
            a.rational - b.rational,
            a.transfer_axis - b.transfer_axis,
            a.combine_xy - b.combine_xy,
            a.infinity_hop - b.infinity_hop};
  }
};

}  // namespace rigid
