#include <revsynth/permutation.hpp>

#include <bit>
#include <string>
#include <utility>

namespace revsynth
{

Permutation::Permutation( unsigned width, std::vector<Word> outputs )
    : width_( width ), outputs_( std::move( outputs ) )
{
  if ( width_ > max_width )
  {
    throw std::invalid_argument( "permutation width " + std::to_string( width_ ) + " exceeds " + std::to_string( max_width ) );
  }
  std::size_t const n = std::size_t{1} << width_;
  if ( outputs_.size() != n )
  {
    throw std::invalid_argument( "expected " + std::to_string( n ) + " outputs, got " + std::to_string( outputs_.size() ) );
  }
  std::vector<bool> seen( n, false );
  for ( auto v : outputs_ )
  {
    if ( v >= n )
    {
      throw std::invalid_argument( "output value " + std::to_string( v ) + " out of range" );
    }
    if ( seen[v] )
    {
      throw std::invalid_argument( "output value " + std::to_string( v ) + " repeated" );
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity( unsigned width )
{
  if ( width > max_width )
  {
    throw std::invalid_argument( "permutation width exceeds limit" );
  }
  std::vector<Word> out( std::size_t{1} << width );
  for ( Word x = 0; x < out.size(); ++x )
  {
    out[x] = x;
  }
  return Permutation( width, std::move( out ), unchecked_tag{} );
}

bool Permutation::is_identity() const noexcept
{
  for ( Word x = 0; x < outputs_.size(); ++x )
  {
    if ( outputs_[x] != x )
      return false;
  }
  return true;
}

Permutation make_unchecked( unsigned width, std::vector<Word> outputs )
{
  return Permutation( width, std::move( outputs ), Permutation::unchecked_tag{} );
}

unsigned hamming_distance( Word u, Word v, unsigned width )
{
  Word const mask = width >= 32 ? ~Word{0} : ( ( Word{1} << width ) - 1u );
  return static_cast<unsigned>( std::popcount( ( u ^ v ) & mask ) );
}

CycleDecomposition cycle_decomposition( Permutation const& p )
{
  CycleDecomposition result;
  std::vector<bool> visited( p.size(), false );
  // scanning upward means every cycle is first reached at its minimum
  for ( Word start = 0; start < p.size(); ++start )
  {
    if ( visited[start] || p[start] == start )
    {
      visited[start] = true;
      continue;
    }
    std::vector<Word> cycle;
    for ( Word x = start; !visited[x]; x = p[x] )
    {
      visited[x] = true;
      cycle.push_back( x );
    }
    result.cycles.push_back( std::move( cycle ) );
  }
  return result;
}

Permutation compose( Permutation const& g, Permutation const& f )
{
  if ( g.width() != f.width() )
  {
    throw std::invalid_argument( "compose: width mismatch" );
  }
  std::vector<Word> out( f.size() );
  for ( Word x = 0; x < f.size(); ++x )
  {
    out[x] = g[f[x]];
  }
  return make_unchecked( f.width(), std::move( out ) );
}

Permutation invert( Permutation const& p )
{
  std::vector<Word> out( p.size() );
  for ( Word x = 0; x < p.size(); ++x )
  {
    out[p[x]] = x;
  }
  return make_unchecked( p.width(), std::move( out ) );
}

Permutation apply_transposition( Permutation const& p, Word u, Word v )
{
  if ( u == v )
  {
    throw std::invalid_argument( "apply_transposition: u == v" );
  }
  if ( u >= p.size() || v >= p.size() )
  {
    throw std::invalid_argument( "apply_transposition: value out of range" );
  }
  std::vector<Word> out( p.outputs().begin(), p.outputs().end() );
  for ( auto& y : out )
  {
    if ( y == u )
      y = v;
    else if ( y == v )
      y = u;
  }
  return make_unchecked( p.width(), std::move( out ) );
}

std::vector<std::pair<Word, Word>> cycle_to_transpositions( std::span<Word const> cycle )
{
  std::vector<std::pair<Word, Word>> steps;
  for ( std::size_t i = 1; i < cycle.size(); ++i )
  {
    steps.emplace_back( cycle[0], cycle[i] );
  }
  return steps;
}

} // namespace revsynth
