#include <revsynth/transposition.hpp>

#include <bit>
#include <stdexcept>

namespace revsynth
{

namespace
{

void check_pair( Word u, Word v, unsigned width )
{
  if ( u == v )
    throw std::invalid_argument( "transposition needs two distinct values" );
  if ( width == 0u || width > 31u || ( u >> width ) || ( v >> width ) )
    throw std::invalid_argument( "transposition value out of range" );
}

/// Toffoli on `target` whose controls select exactly the words agreeing with `w` off the target.
Gate full_toffoli( Word w, unsigned target, unsigned width )
{
  Word const lines = ( ( Word{1} << width ) - 1u ) & ~( Word{1} << target );
  return Gate::from_masks( GateKind::toffoli, w & lines, ~w & lines, target );
}

} // namespace

Circuit synth_transposition_cascade( Word u, Word v, unsigned width )
{
  check_pair( u, v, width );
  std::vector<Gate> forward;
  Word w = u;
  for ( Word diff = u ^ v; diff; diff &= diff - 1 )
  {
    auto const line = static_cast<unsigned>( std::countr_zero( diff ) );
    forward.push_back( full_toffoli( w, line, width ) );
    w ^= Word{1} << line;
  }
  Circuit c( width );
  for ( auto const& g : forward )
    c.push_back( g );
  for ( auto it = forward.rbegin() + 1; it < forward.rend(); ++it )
    c.push_back( *it );
  return c;
}

Circuit synth_transposition_aba( Word u, Word v, unsigned width, std::optional<unsigned> pivot )
{
  check_pair( u, v, width );
  Word const diff = u ^ v;
  unsigned const t = pivot.value_or( static_cast<unsigned>( std::countr_zero( diff ) ) );
  if ( t >= width || !bit( diff, t ) )
    throw std::invalid_argument( "ABA pivot must be a line where the endpoints differ" );

  Control const ctl{t, bit( u, t ) ? Polarity::positive : Polarity::negative};
  Circuit a( width );
  for ( Word m = diff & ~( Word{1} << t ); m; m &= m - 1 )
    a.push_back( Gate::cnot( ctl, static_cast<unsigned>( std::countr_zero( m ) ) ) );

  Circuit c = a;
  c.push_back( full_toffoli( v, t, width ) );
  c.append( a );
  return c;
}

Circuit synth_transposition( Word u, Word v, unsigned width, TranspositionMode mode )
{
  return mode == TranspositionMode::cascade ? synth_transposition_cascade( u, v, width )
                                            : synth_transposition_aba( u, v, width );
}

} // namespace revsynth
