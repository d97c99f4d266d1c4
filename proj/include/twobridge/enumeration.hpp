// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "twobridge/casson_gordon.hpp"
#include "twobridge/families.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

inline constexpr Int kMinTableCrossing = 3;
inline constexpr Int kMaxTableCrossing = 26;

/// All 2-bridge knot classes (mirror images identified) with crossing
/// number at most max_crossing, ordered by (crossing, p, q). Each class is
/// emitted from the all-positive word of its canonical representative.
std::vector<KnotClass> enumerate_classes(Int max_crossing);

struct FamilyClass {
  KnotClass cls;
  std::vector<FamilyId> families;  ///< sorted, every family that produced it
};

/// Distinct knot classes produced by the generators within the bounds and
/// with crossing number <= max_crossing, ordered by class.
std::vector<FamilyClass> family_classes(Int max_crossing, const GeneratorBounds& bounds);

struct TableRow {
  Int crossing = 0;
  Int family0 = 0;
  Int family1 = 0;  ///< includes classes also in family 2
  Int family2 = 0;  ///< family 2 only
  Int total = 0;    ///< distinct classes
  /// Classes counted in row 0 and in row 1 or 2. Zero means
  /// total == family0 + family1 + family2.
  Int overlap = 0;
};

/// Ribbon knot counts per crossing number 3 .. max_crossing. Every class is
/// cross-checked against is_family_member and must pass the generator-bound
/// margin check; violations throw InternalError.
std::vector<TableRow> ribbon_table(Int max_crossing);

struct ScanRecord {
  Int p = 0;
  Int q_tested = 0;
  std::vector<Int> cg_passing;
  std::vector<Int> non_family;  ///< passing but outside the families
  std::vector<SigmaReport> evidence;  ///< full reports for non_family, not checkpointed

  friend bool operator==(const ScanRecord& a, const ScanRecord& b) {
    return a.p == b.p && a.q_tested == b.q_tested && a.cg_passing == b.cg_passing &&
           a.non_family == b.non_family;
  }
};

struct ScanOptions {
  Int p_min = 3;
  Int p_max = 3;
  unsigned jobs = 0;  ///< 0 = hardware concurrency
  std::optional<std::filesystem::path> checkpoint;
  /// Test every q rather than one representative per orbit.
  bool audit = false;
  /// Stop after this many newly completed p values (partial run).
  std::optional<std::size_t> stop_after;
  /// Called from the writer thread after each p completes.
  std::function<void(const ScanRecord&)> progress;
};

/// Scans the odd p in [p_min, p_max] (even bounds rounded inward) for knots
/// p^2/q that pass the Casson-Gordon condition but are not family members.
/// Records come back in ascending p. Completed p values are appended to the
/// checkpoint as they finish, in ascending order, and skipped on resume.
std::vector<ScanRecord> conjecture_scan(const ScanOptions& options);

/// Scans a single p; exposed for tests.
ScanRecord scan_one(Int p, bool audit);

struct CrosscheckRow {
  Int crossing = 0;
  Int amphicheiral = 0;
  Int family0_at_plus_two = 0;
  bool equal = false;
};

/// Amphicheiral classes at even crossing c = 4 .. max_crossing against
/// family 0 classes at c + 2.
std::vector<CrosscheckRow> amphicheiral_crosscheck(Int max_crossing);

}  // namespace twobridge
