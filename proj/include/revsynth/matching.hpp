#pragma once

#include <revsynth/permutation.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace revsynth
{

/*! \brief Complete bipartite graph between words that must be exchanged.
 *
 * `left` holds the words reading 0 on the column being fixed, `right` those
 * reading 1. Edge weight is the gate count of the transposition circuit,
 * 2 * hamming_distance - 1.
 */
struct BipartiteInstance
{
  unsigned width{0};
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<std::vector<std::int64_t>> weights;
};

struct Matching
{
  std::vector<std::pair<Word, Word>> pairs; ///< (left word, right word)
  std::int64_t total_weight{0};
};

/// Throws `std::logic_error` if the sides differ in size or are empty.
BipartiteInstance build_instance( std::vector<Word> zeros, std::vector<Word> ones, unsigned width );

/*! \brief Minimum-weight perfect matching by the Hungarian method, O(k^3).
 *
 * Rows are inserted in index order and, within a row, the scan takes the
 * lowest-index column among equally short augmenting paths, so results are
 * reproducible. Pairs are reported in left-index order.
 */
Matching min_weight_perfect_matching( BipartiteInstance const& inst );

/// Assignment `row -> column` minimizing the total of a square cost matrix.
std::vector<std::size_t> solve_assignment( std::vector<std::vector<std::int64_t>> const& cost );

} // namespace revsynth
