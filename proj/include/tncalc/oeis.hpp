/**
 * @file oeis.hpp
 * @brief Sequence tables for the T_n family, OEIS b-file interchange, and a
 *        reference comparator.
 *
 * b-file format: one "index value" pair per line separated by a single
 * space, newline-terminated, indices consecutive ascending; lines starting
 * with '#' are comments. The emitter writes one "# <id>" header; the parser
 * reads the id back from such a header, so parse(emit(t)) == t.
 */
#ifndef TNCALC_OEIS_HPP
#define TNCALC_OEIS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tncalc/exact.hpp"

namespace tncalc {

/// Malformed b-file text (bad tokens, non-consecutive indices, ...).
class bfile_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The four sequences generated from the family: the derangements
/// T_n(-n-1) and the columns T_n(1), T_n(2), T_n(3).
enum class SequenceId { A000166, A001865, A001863, A129137 };

SequenceId sequence_id_from_string(std::string_view name);
std::string to_string(SequenceId id);

struct SequenceTable {
  std::string id;
  long offset = 0;
  std::vector<Integer> terms;

  bool operator==(const SequenceTable&) const = default;
};

/// First `count` terms, indexed from 0 as listed by the family itself
/// (canonical OEIS offsets may differ; see compare()).
SequenceTable generate(SequenceId id, std::size_t count);

std::string emit_bfile(const SequenceTable& table);

SequenceTable parse_bfile(std::string_view text);

struct Mismatch {
  long index = 0;  ///< index in the generated table's space
  Integer generated;
  Integer reference;
};

struct CompareReport {
  /// reference index minus generated index applied during alignment; zero
  /// when the offsets already agree.
  long alignment_shift = 0;
  std::vector<Mismatch> mismatches;

  bool pass() const { return mismatches.empty(); }
};

/// Compares the overlapping terms. Equal offsets compare index-aligned;
/// differing offsets are treated as an offset-convention drift and the
/// tables are aligned by value prefix (both from their first term), with
/// the applied shift reported. Throws std::invalid_argument when there is
/// nothing to compare.
CompareReport compare(const SequenceTable& generated, const SequenceTable& reference);

}  // namespace tncalc

#endif  // TNCALC_OEIS_HPP
