#include <revsynth/circuit.hpp>

#include <bit>
#include <string>

namespace revsynth
{

namespace
{

void add_controls( std::span<Control const> controls, Word& positive, Word& negative )
{
  for ( auto const& c : controls )
  {
    if ( c.line >= 32u )
    {
      throw std::invalid_argument( "control line out of range" );
    }
    Word const m = Word{1} << c.line;
    if ( ( positive | negative ) & m )
    {
      throw std::invalid_argument( "duplicate control on line " + std::to_string( c.line ) );
    }
    ( c.polarity == Polarity::positive ? positive : negative ) |= m;
  }
}

} // namespace

Gate Gate::from_masks( GateKind kind, Word positive, Word negative, unsigned target, unsigned target2 )
{
  if ( positive & negative )
  {
    throw std::invalid_argument( "line carries both a positive and a negative control" );
  }
  if ( target >= 32u || ( kind == GateKind::swap && target2 >= 32u ) )
  {
    throw std::invalid_argument( "target line out of range" );
  }
  Gate g;
  g.kind_ = kind;
  g.positive_ = positive;
  g.negative_ = negative;
  g.target_ = static_cast<std::uint8_t>( target );
  g.target2_ = kind == GateKind::swap ? static_cast<std::uint8_t>( target2 ) : 0u;
  if ( kind == GateKind::swap && target == target2 )
  {
    throw std::invalid_argument( "swap gate needs two distinct lines" );
  }
  if ( g.control_mask() & g.target_mask() )
  {
    throw std::invalid_argument( "control placed on a target line" );
  }
  return g;
}

Gate Gate::toffoli( std::span<Control const> controls, unsigned target )
{
  Word p = 0, n = 0;
  add_controls( controls, p, n );
  return from_masks( GateKind::toffoli, p, n, target );
}

Gate Gate::toffoli( std::initializer_list<Control> controls, unsigned target )
{
  return toffoli( std::span<Control const>( controls.begin(), controls.size() ), target );
}

Gate Gate::swap( std::span<Control const> controls, unsigned a, unsigned b )
{
  Word p = 0, n = 0;
  add_controls( controls, p, n );
  return from_masks( GateKind::swap, p, n, a, b );
}

Gate Gate::swap( std::initializer_list<Control> controls, unsigned a, unsigned b )
{
  return swap( std::span<Control const>( controls.begin(), controls.size() ), a, b );
}

unsigned Gate::num_controls() const noexcept
{
  return static_cast<unsigned>( std::popcount( control_mask() ) );
}

std::vector<Control> Gate::controls() const
{
  std::vector<Control> result;
  for ( Word m = control_mask(); m; m &= m - 1 )
  {
    auto const line = static_cast<unsigned>( std::countr_zero( m ) );
    result.push_back( {line, ( positive_ >> line ) & 1u ? Polarity::positive : Polarity::negative} );
  }
  return result;
}

Word Gate::target_mask() const noexcept
{
  Word m = Word{1} << target_;
  if ( kind_ == GateKind::swap )
    m |= Word{1} << target2_;
  return m;
}

Circuit::Circuit( unsigned width, std::vector<Gate> gates ) : width_( width )
{
  gates_.reserve( gates.size() );
  for ( auto const& g : gates )
  {
    push_back( g );
  }
}

void Circuit::push_back( Gate const& g )
{
  if ( width_ < 32u && ( g.support() >> width_ ) != 0u )
  {
    throw std::invalid_argument( "gate touches a line outside a " + std::to_string( width_ ) + "-line circuit" );
  }
  gates_.push_back( g );
}

void Circuit::append( Circuit const& other )
{
  if ( other.width_ > width_ )
  {
    throw std::invalid_argument( "append: circuit is wider than the destination" );
  }
  gates_.insert( gates_.end(), other.gates_.begin(), other.gates_.end() );
}

Word simulate( Circuit const& c, Word x )
{
  for ( auto const& g : c.gates() )
  {
    x = g.apply( x );
  }
  return x;
}

Permutation circuit_to_permutation( Circuit const& c )
{
  if ( c.width() > max_width )
  {
    throw std::invalid_argument( "circuit too wide for an explicit truth table" );
  }
  std::vector<Word> out( std::size_t{1} << c.width() );
  for ( Word x = 0; x < out.size(); ++x )
  {
    out[x] = x;
  }
  for ( auto const& g : c.gates() )
  {
    for ( auto& y : out )
    {
      y = g.apply( y );
    }
  }
  return make_unchecked( c.width(), std::move( out ) );
}

std::optional<Word> first_mismatch( Circuit const& c, Permutation const& spec )
{
  if ( c.width() != spec.width() )
  {
    return Word{0};
  }
  for ( Word x = 0; x < spec.size(); ++x )
  {
    if ( simulate( c, x ) != spec[x] )
      return x;
  }
  return std::nullopt;
}

bool verify( Circuit const& c, Permutation const& spec )
{
  return c.width() == spec.width() && circuit_to_permutation( c ) == spec;
}

Circuit reversed( Circuit const& c )
{
  std::vector<Gate> gates( c.gates().rbegin(), c.gates().rend() );
  return Circuit( c.width(), std::move( gates ) );
}

Circuit add_control( Circuit const& c, unsigned line, Polarity polarity )
{
  if ( line >= c.width() )
  {
    throw std::invalid_argument( "add_control: line out of range" );
  }
  Word const m = Word{1} << line;
  Circuit result( c.width() );
  for ( auto const& g : c.gates() )
  {
    if ( g.support() & m )
    {
      throw std::invalid_argument( "add_control: line " + std::to_string( line ) + " already used by a gate" );
    }
    Word p = g.positive_controls(), n = g.negative_controls();
    ( polarity == Polarity::positive ? p : n ) |= m;
    result.push_back( Gate::from_masks( g.kind(), p, n, g.target(), g.target2() ) );
  }
  return result;
}

namespace
{

Word remap_mask( Word m, std::span<unsigned const> line_map )
{
  Word out = 0;
  for ( ; m; m &= m - 1 )
  {
    out |= Word{1} << line_map[std::countr_zero( m )];
  }
  return out;
}

} // namespace

Circuit embed( Circuit const& c, std::span<unsigned const> line_map, unsigned new_width )
{
  if ( line_map.size() < c.width() )
  {
    throw std::invalid_argument( "embed: line map shorter than circuit width" );
  }
  Word used = 0;
  for ( unsigned i = 0; i < c.width(); ++i )
  {
    if ( line_map[i] >= new_width )
    {
      throw std::invalid_argument( "embed: line mapped outside the new width" );
    }
    Word const m = Word{1} << line_map[i];
    if ( used & m )
    {
      throw std::invalid_argument( "embed: line map is not injective" );
    }
    used |= m;
  }
  Circuit result( new_width );
  for ( auto const& g : c.gates() )
  {
    result.push_back( Gate::from_masks( g.kind(),
                                        remap_mask( g.positive_controls(), line_map ),
                                        remap_mask( g.negative_controls(), line_map ),
                                        line_map[g.target()],
                                        g.is_swap() ? line_map[g.target2()] : 0u ) );
  }
  return result;
}

} // namespace revsynth
