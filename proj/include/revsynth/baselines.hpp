#pragma once

#include <revsynth/circuit.hpp>
#include <revsynth/transposition.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace revsynth
{

/// Value exchanges that, applied in order to a function's output list, sort it.
struct TranspositionSequence
{
  std::vector<std::pair<Word, Word>> steps;
};

using Sorter = std::function<TranspositionSequence( Permutation const& )>;

/// Adjacent exchanges of bubble sort on the output list, recorded as value pairs.
TranspositionSequence bubble_sorter( Permutation const& p );

/*! \brief Turns any sorting of the output list into a circuit.
 *
 * Sorting with T1 ... Tm means Tm o ... o T1 o f = id, so f = T1 o ... o Tm
 * and the transposition circuits are emitted in reverse order. Throws
 * `std::logic_error` if the sequence does not sort `spec`.
 */
Circuit sort_synth( Permutation const& spec, Sorter const& sorter, TranspositionMode mode );

struct MmdConfig
{
  bool bidirectional{false};
  bool mixed_polarity{true};
};

/*! \brief Transformation-based synthesis.
 *
 * Rows are fixed in ascending order: row x is mapped onto x by Toffolis that
 * first set the missing 1-bits and then clear the extra ones. Controls always
 * exclude every row below x, so fixed rows stay fixed. Gates are added on the
 * output side, or on the input side when that is cheaper and bidirectional
 * search is enabled. With mixed polarity each gate may use any control set
 * that leaves the fixed rows alone, with polarities taken from the word being
 * moved; the set leaving the least total Hamming distance on the unfixed rows
 * wins, then the smaller set. The search is skipped above 10 lines.
 */
Circuit mmd_synth( Permutation const& spec, MmdConfig const& cfg = {} );

} // namespace revsynth
