#pragma once

#include <revsynth/circuit.hpp>
#include <revsynth/metrics.hpp>
#include <revsynth/transposition.hpp>

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace revsynth
{

enum class ColumnOrders
{
  exhaustive, ///< every line at every level, best per cofactor (greedy above `exhaustive_order_limit`)
  fixed,      ///< `RevColConfig::fixed_order`
  greedy      ///< at each level, the column whose matching stage is cheapest
};

struct RevColConfig
{
  bool partial_match{false};
  bool swap_gates{false};
  bool inverted_column{false};
  bool output_permutation{false};
  TranspositionMode transposition_mode{TranspositionMode::cascade};

  ColumnOrders column_orders{ColumnOrders::exhaustive};
  /// Lines in matching order, first matched first; used with `ColumnOrders::fixed`.
  std::vector<unsigned> fixed_order;

  /// Widest subfunction for which every column is tried as the next one.
  unsigned exhaustive_order_limit{5};
  /// Widest function for which all n! output assignments are tried; hill climbing above.
  unsigned exhaustive_output_limit{4};

  /*! \brief Named configurations of the 3-bit benchmark.
   *
   * a: naive, b: + partial match, c: + swap gates, d: + output permutation,
   * e: + inverted column and ABA transpositions. Throws on an unknown name.
   */
  static RevColConfig preset( std::string_view name );
};

/*! \brief Intermediate state of column matching.
 *
 * `remaining` is the function still to be realized: a circuit for it,
 * followed by every stage emitted so far, realizes the original spec. Gates
 * are emitted on the output side, so the spec's value list is sorted toward
 * the identity. A line is matched once bit `l` of `remaining(x)` equals
 * bit `l` of `x` for every input.
 */
struct SynthState
{
  Permutation remaining;
  Word matched_lines{0};

  unsigned width() const noexcept { return remaining.width(); }
};

SynthState initial_state( Permutation const& spec );

/// Whether bit `line` of `remaining(x)` equals bit `line` of `x` for all x.
bool column_matched( Permutation const& remaining, unsigned line );

struct ColumnStage
{
  /// Transpositions in ascending left-word order, then the inverting NOT if any.
  Circuit circuit;
  SynthState next;
  bool inverted{false};
  std::size_t pairs_before_inversion{0};
  /// (zero-side word, one-side word), in emission order.
  std::vector<std::pair<Word, Word>> pairs;
};

/*! \brief One radix-exchange step on column `line`.
 *
 * Words whose bit `line` disagrees with their position are split into the
 * zero side and the one side. With `inverted_column`, more than 2^(n-2)
 * pairs trigger a NOT on the line first, leaving 2^(n-1) - k pairs. The
 * sides are then paired by minimum-weight perfect matching and each pair is
 * exchanged by a transposition circuit.
 */
ColumnStage match_column( SynthState const& state, unsigned line, RevColConfig const& cfg );

/// Cofactors for `line = 0` and `line = 1`, with that line deleted. Throws `std::logic_error` if unmatched.
std::pair<Permutation, Permutation> split_cofactors( SynthState const& state, unsigned line );

/*! \brief Lifts cofactor circuits back onto `width` lines.
 *
 * With `share`, `sub0` is used for both halves without a control on `line`;
 * otherwise `sub0` gets a negative and `sub1` a positive control there.
 */
Circuit recombine( Circuit const& sub0, Circuit const& sub1, unsigned line, unsigned width, bool share );

/// A single SWAP when the 2-line function exchanges its two columns.
std::optional<Gate> detect_swap_case( Permutation const& spec );

/// Worst-case gate count of fully optimized column matching, 2^(n-2) (n^2 - 2n + 2).
std::uint64_t worst_case_bound( unsigned n );

/// Called for every cofactor; `continue_revcol` yields the plain recursive result.
using SubproblemHook = std::function<Circuit( Permutation const& subspec, std::function<Circuit()> const& continue_revcol )>;

struct RevColTrace
{
  struct Stage
  {
    int parent{-1};          ///< enclosing stage, -1 at the top
    unsigned line{0};        ///< matched line, in spec line numbering
    Word active_lines{0};    ///< lines of the subfunction this stage belongs to
    Word target_lines{0};    ///< lines targeted by the stage circuit
    bool inverted{false};
    std::size_t pairs_before_inversion{0};
    std::vector<std::pair<Word, Word>> pairs; ///< in the subfunction's local numbering
  };
  std::vector<Stage> stages;
};

/*! \brief Column matching along one order, without output permutation.
 *
 * An empty `order` picks columns greedily at every level. The hook, when
 * set, decides each cofactor circuit.
 */
Circuit revcol_synth_order( Permutation const& spec, std::vector<unsigned> const& order, RevColConfig const& cfg,
                            RevColTrace* trace = nullptr, SubproblemHook const& hook = {} );

/*! \brief Best circuit over the column orders selected by `cfg`, without output permutation.
 *
 * Exhaustive search picks the matched column independently in each
 * cofactor, which covers every global order of the lines.
 */
Circuit revcol_synth_orders( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook = {} );

/*! \brief Searches assignments of function columns to output lines.
 *
 * Each assignment is synthesized against the relabeled spec and followed by
 * the SWAP gates restoring the line order. Exhaustive up to
 * `exhaustive_output_limit`, hill climbing over single line exchanges above.
 */
Circuit output_permutation_search( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook = {} );

/// Circuit for `spec` under `cfg`; verifies by construction.
Circuit revcol_synth( Permutation const& spec, RevColConfig const& cfg, SubproblemHook const& hook = {} );

/// Lexicographic (gate count, quantum cost, depth), then serialized text.
bool objective_less( Circuit const& a, Circuit const& b );

/// Bits of `x` moved so that bit i lands on line `assignment[i]`.
Word relabel_word( Word x, std::span<unsigned const> assignment );
/// SWAP gates realizing `relabel_word` for `assignment`.
Circuit line_permutation_circuit( std::span<unsigned const> assignment, unsigned width );

} // namespace revsynth
