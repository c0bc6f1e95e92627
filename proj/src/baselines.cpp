#include <revsynth/baselines.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace revsynth
{

TranspositionSequence bubble_sorter( Permutation const& p )
{
  TranspositionSequence seq;
  std::vector<Word> list( p.outputs().begin(), p.outputs().end() );
  for ( std::size_t end = list.size(); end > 1u; --end )
  {
    bool swapped = false;
    for ( std::size_t i = 0; i + 1u < end; ++i )
    {
      if ( list[i] > list[i + 1u] )
      {
        seq.steps.emplace_back( list[i], list[i + 1u] );
        std::swap( list[i], list[i + 1u] );
        swapped = true;
      }
    }
    if ( !swapped )
      break;
  }
  return seq;
}

Circuit sort_synth( Permutation const& spec, Sorter const& sorter, TranspositionMode mode )
{
  auto const seq = sorter( spec );
  std::vector<Word> list( spec.outputs().begin(), spec.outputs().end() );
  std::vector<Word> position( list.size() );
  for ( Word x = 0; x < list.size(); ++x )
    position[list[x]] = x;
  for ( auto const& [u, v] : seq.steps )
  {
    if ( u == v || u >= list.size() || v >= list.size() )
      throw std::logic_error( "sorter emitted an invalid transposition" );
    std::swap( list[position[u]], list[position[v]] );
    std::swap( position[u], position[v] );
  }
  for ( Word x = 0; x < list.size(); ++x )
  {
    if ( list[x] != x )
      throw std::logic_error( "sorter did not sort the specification" );
  }

  Circuit c( spec.width() );
  for ( auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it )
    c.append( synth_transposition( it->first, it->second, spec.width(), mode ) );
  return c;
}

namespace
{

constexpr unsigned mixed_polarity_search_limit = 10u;

/// Whether a gate with control lines `lines` at the polarities of `w` fires on some word below `row`.
bool touches_fixed_rows( Word w, Word lines, Word row )
{
  Word const pattern = w & lines;
  for ( Word z = 0; z < row; ++z )
  {
    if ( ( z & lines ) == pattern )
      return true;
  }
  return false;
}

class MmdEngine
{
public:
  MmdEngine( Permutation const& spec, MmdConfig const& cfg )
      : cfg_( cfg ), width_( spec.width() ), v_( spec.outputs().begin(), spec.outputs().end() ), inv_( v_.size() )
  {
    for ( Word x = 0; x < v_.size(); ++x )
      inv_[v_[x]] = x;
  }

  Circuit run()
  {
    for ( Word x = 0; x < v_.size(); ++x )
    {
      Word const w = v_[x];
      if ( w == x )
        continue;
      Word const y = inv_[x];
      bool const input_side = cfg_.bidirectional && std::popcount( x ^ y ) < std::popcount( x ^ w );
      transform( input_side ? y : w, x, input_side );
      if ( v_[x] != x )
        throw std::logic_error( "MMD failed to fix row " + std::to_string( x ) );
    }

    Circuit c( width_ );
    for ( auto const& g : input_gates_ )
      c.push_back( g );
    for ( auto it = output_gates_.rbegin(); it != output_gates_.rend(); ++it )
      c.push_back( *it );
    return c;
  }

private:
  /// Moves word `w` onto `row` through Toffolis on the chosen side.
  void transform( Word w, Word row, bool input_side )
  {
    for ( Word p = row & ~w; p; p &= p - 1 )
    {
      auto const j = static_cast<unsigned>( std::countr_zero( p ) );
      apply( make_gate( w, w, j, row, input_side ), input_side );
      w |= Word{1} << j;
    }
    for ( Word q = w & ~row; q; q &= q - 1 )
    {
      auto const j = static_cast<unsigned>( std::countr_zero( q ) );
      apply( make_gate( w, row, j, row, input_side ), input_side );
      w &= ~( Word{1} << j );
    }
  }

  Gate make_gate( Word w, Word positive, unsigned target, Word row, bool input_side ) const
  {
    Word lines = positive;
    if ( cfg_.mixed_polarity )
    {
      Word const all = ( ( Word{1} << width_ ) - 1u ) & ~( Word{1} << target );
      std::uint64_t best_distance = distance_after( gate_for( w, lines, target ), input_side, row );
      // every valid control subset of the other lines, at the polarities of w
      for ( Word s = all; width_ <= mixed_polarity_search_limit; s = ( s - 1u ) & all )
      {
        if ( !touches_fixed_rows( w, s, row ) )
        {
          auto const d = distance_after( gate_for( w, s, target ), input_side, row );
          if ( d < best_distance || ( d == best_distance && std::popcount( s ) < std::popcount( lines ) ) )
          {
            best_distance = d;
            lines = s;
          }
        }
        if ( s == 0u )
          break;
      }
    }
    if ( touches_fixed_rows( w, lines, row ) )
      throw std::logic_error( "MMD gate would disturb a fixed row" );
    return gate_for( w, lines, target );
  }

  static Gate gate_for( Word w, Word lines, unsigned target )
  {
    return Gate::from_masks( GateKind::toffoli, w & lines, ~w & lines, target );
  }

  /// Total Hamming distance of the unfixed rows from the identity once `g` is applied.
  std::uint64_t distance_after( Gate const& g, bool input_side, Word row ) const
  {
    std::uint64_t d = 0;
    for ( Word z = row; z < v_.size(); ++z )
    {
      Word const image = input_side ? v_[g.apply( z )] : g.apply( v_[z] );
      d += static_cast<std::uint64_t>( std::popcount( image ^ z ) );
    }
    return d;
  }

  void apply( Gate const& g, bool input_side )
  {
    if ( input_side )
    {
      // v <- v o g: exchange the entries of each pair of inputs g swaps
      for ( Word z = 0; z < v_.size(); ++z )
      {
        Word const gz = g.apply( z );
        if ( gz > z )
        {
          std::swap( v_[z], v_[gz] );
          inv_[v_[z]] = z;
          inv_[v_[gz]] = gz;
        }
      }
      input_gates_.push_back( g );
    }
    else
    {
      for ( Word z = 0; z < v_.size(); ++z )
      {
        v_[z] = g.apply( v_[z] );
        inv_[v_[z]] = z;
      }
      output_gates_.push_back( g );
    }
  }

  MmdConfig cfg_;
  unsigned width_;
  std::vector<Word> v_;
  std::vector<Word> inv_;
  std::vector<Gate> input_gates_;
  std::vector<Gate> output_gates_;
};

} // namespace

Circuit mmd_synth( Permutation const& spec, MmdConfig const& cfg )
{
  return MmdEngine( spec, cfg ).run();
}

} // namespace revsynth
