#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/complex.hpp"
#include "trigroup/diagram.hpp"
#include "trigroup/exact.hpp"
#include "trigroup/presentation.hpp"

namespace trigroup {

inline constexpr std::uint32_t kDefaultMaxFacesCap = 5;

struct DiagramBudget {
  std::uint32_t max_faces = 1;
  TriangularPresentation presentation;
  Rational epsilon{1, 100};
  std::uint32_t cap = kDefaultMaxFacesCap;
};

/// Canonical encoding of a diagram up to label- and index-preserving
/// combinatorial isomorphism (boundary path choices are ignored). Two
/// diagrams are isomorphic exactly when their codes are equal.
std::vector<std::uint32_t> canonical_code(const VanKampenDiagram& d);

/// Isomorphic copy renumbered by the minimal root of canonical_code. Each
/// face gets the first (start, orientation) whose reading spells its relator.
VanKampenDiagram canonical_form(const VanKampenDiagram& d, const TriangularPresentation& p);

/// Every reduced disc diagram with at most max_faces triangles, once per
/// isomorphism class, in canonical form, sorted by (area, canonical code).
///
/// Covered diagrams: topological discs with a simple boundary cycle whose
/// faces are embedded triangles. Grown one face at a time by gluing a new
/// triangle along one boundary edge (with a new vertex) or along two
/// consecutive boundary edges.
std::vector<VanKampenDiagram> enumerate_reduced_diagrams(const DiagramBudget& b, unsigned workers = 1);

struct DiagramRecord {
  std::uint32_t area = 0;
  std::uint32_t perimeter = 0;
  std::uint64_t cancel = 0;
  std::uint64_t red = 0;
  bool cancel_bound = false;    // Cancel(D) <= 3(d + eps)|D|
  bool boundary_bound = false;  // |dD| >= 3(1 - 2d - 2eps)|D|
  bool identity = false;        // 3|D| = |dD| + 2 Cancel(D)
  bool euler = false;
  bool reduced = false;
};

struct IsoperimetricReport {
  Rational density;
  Rational epsilon;
  std::uint32_t max_faces = 0;
  std::vector<DiagramRecord> records;
  std::vector<std::uint64_t> diagrams_by_area;  // index = area
  std::uint64_t cancel_violations = 0;
  std::uint64_t boundary_violations = 0;
  std::uint64_t identity_failures = 0;
  std::uint64_t euler_failures = 0;
  std::uint64_t red_nonzero = 0;
  std::uint64_t equivalence_failures = 0;  // the two bounds disagree
};

IsoperimetricReport isoperimetric_report(const DiagramBudget& b, unsigned workers = 1);
IsoperimetricReport isoperimetric_report(const DiagramBudget& b, const std::vector<VanKampenDiagram>& diagrams);

/// An abstract complex together with the injective sub-tuple binding it.
struct BoundComplex {
  AbstractLabelledComplex complex;
  std::vector<std::uint32_t> iota;  // 0-based tuple positions
};

struct LabelledComplexRecord {
  std::uint32_t faces = 0;
  std::uint64_t cancel = 0;
  std::uint64_t red = 0;
  std::int64_t lhs = 0;  // Cancel - Red
  Rational rhs;          // 3(d + eps)|Y|
  bool holds = false;
};

struct LabelledComplexReport {
  Rational density;
  Rational epsilon;
  std::vector<LabelledComplexRecord> records;
  std::uint64_t violations = 0;
};

/// Cancel(Y) - Red(Y) against 3(d + eps)|Y|. Throws if some complex is not
/// fulfilled by its sub-tuple.
LabelledComplexReport labelled_complex_report(const TriangularPresentation& p, const Rational& epsilon,
                                              const std::vector<BoundComplex>& complexes);

}  // namespace trigroup
