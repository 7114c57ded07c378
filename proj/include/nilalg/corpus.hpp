#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilalg/groebner.hpp"

namespace nilalg {

/// One reference basis element, as printed.
struct CorpusEntry {
  std::size_t index;
  std::string_view expression;
};

/// Table 1 is the characteristic-0 basis of R31, table 2 that of R32.
const std::vector<CorpusEntry>& appendix_table(int which);

/// Catalog key of the algebra a table belongs to.
std::string appendix_algebra(int which);

struct CorpusMatch {
  std::size_t corpus_size = 0;
  std::size_t computed_size = 0;
  /// Corpus entries equal, up to a nonzero scalar, to a computed element.
  std::size_t matched = 0;
  /// Human-readable differences, one per failing entry or element.
  std::vector<std::string> mismatches;
  /// Entries whose printed form is known to be irregular and that failed
  /// to match; reported but not counted as failures.
  std::vector<std::string> flagged;
  /// Computed elements with no corpus counterpart.
  std::vector<std::size_t> unmatched_computed;
  /// Computed elements accounted for by a flagged entry that decomposes as a
  /// combination of several computed elements.
  std::vector<std::size_t> explained;

  bool pass() const { return mismatches.empty() && unmatched_computed.empty() && corpus_size == computed_size; }
};

/// Compares a basis with corpus entries up to a per-element scalar.
CorpusMatch match_corpus(const GroebnerBasis& gb, const std::vector<CorpusEntry>& entries,
                         const std::vector<std::size_t>& irregular = {});

/// Indices of entries printed irregularly in a table (e.g. two groups
/// concatenated across a line break).
std::vector<std::size_t> irregular_entries(int which);

}  // namespace nilalg
