#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace revsynth
{

/// A truth value: bit j is the value on line j.
using Word = std::uint32_t;

inline constexpr unsigned max_width = 24u;

/*! \brief Reversible function over `width` lines, stored as its output table.
 *
 * `outputs()[x]` is the image of input `x`. The table always has `2^width`
 * entries and is a bijection; every mutating operation returns a new value.
 * Line `width - 1` is the leftmost character when a word is printed.
 */
class Permutation
{
public:
  Permutation() = default;

  /// Throws `std::invalid_argument` if the table is not a bijection on `2^width` values.
  Permutation( unsigned width, std::vector<Word> outputs );

  static Permutation identity( unsigned width );

  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return outputs_.size(); }
  Word operator[]( Word x ) const { return outputs_[x]; }
  std::span<Word const> outputs() const noexcept { return outputs_; }

  bool is_identity() const noexcept;

  friend bool operator==( Permutation const&, Permutation const& ) = default;

private:
  struct unchecked_tag
  {
  };
  Permutation( unsigned width, std::vector<Word> outputs, unchecked_tag )
      : width_( width ), outputs_( std::move( outputs ) )
  {
  }

  unsigned width_{0};
  std::vector<Word> outputs_{0u};

  friend Permutation make_unchecked( unsigned, std::vector<Word> );
};

/// Builds a permutation the caller already knows to be a bijection.
Permutation make_unchecked( unsigned width, std::vector<Word> outputs );

/// Number of lines in `[0, width)` on which `u` and `v` differ.
unsigned hamming_distance( Word u, Word v, unsigned width );

inline bool bit( Word x, unsigned line ) { return ( x >> line ) & 1u; }

/// Cycles of length >= 2, each rotated to start at its minimum, sorted by that minimum.
struct CycleDecomposition
{
  std::vector<std::vector<Word>> cycles;
};

CycleDecomposition cycle_decomposition( Permutation const& p );

/// (g o f)(x) = g(f(x)).
Permutation compose( Permutation const& g, Permutation const& f );
Permutation invert( Permutation const& p );

/// Exchanges the values `u` and `v` wherever they occur in the output table.
Permutation apply_transposition( Permutation const& p, Word u, Word v );

/// Expands a cycle (a1 ... ak) into transpositions whose left-to-right product equals it.
std::vector<std::pair<Word, Word>> cycle_to_transpositions( std::span<Word const> cycle );

} // namespace revsynth
