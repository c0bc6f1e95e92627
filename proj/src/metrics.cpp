#include <revsynth/metrics.hpp>

#include <algorithm>
#include <array>
#include <bit>

namespace revsynth
{

std::uint64_t toffoli_cost( unsigned num_controls )
{
  if ( num_controls <= 1u )
    return 1u;
  return ( std::uint64_t{1} << ( num_controls + 1u ) ) - 3u;
}

std::uint64_t swap_cost( unsigned num_controls )
{
  switch ( num_controls )
  {
  case 0u:
    return 3u;
  case 1u:
    return 5u;
  default:
    return 2u + toffoli_cost( num_controls + 1u );
  }
}

std::uint64_t quantum_cost( Gate const& g )
{
  return g.is_toffoli() ? toffoli_cost( g.num_controls() ) : swap_cost( g.num_controls() );
}

std::uint64_t quantum_cost( Circuit const& c )
{
  std::uint64_t total = 0;
  for ( auto const& g : c.gates() )
    total += quantum_cost( g );
  return total;
}

std::uint64_t logical_depth( Circuit const& c )
{
  std::array<std::uint64_t, 32> level{};
  std::uint64_t depth = 0;
  for ( auto const& g : c.gates() )
  {
    std::uint64_t l = 0;
    for ( Word m = g.support(); m; m &= m - 1 )
      l = std::max( l, level[std::countr_zero( m )] );
    ++l;
    for ( Word m = g.support(); m; m &= m - 1 )
      level[std::countr_zero( m )] = l;
    depth = std::max( depth, l );
  }
  return depth;
}

CostReport cost_report( Circuit const& c )
{
  return {c.num_gates(), quantum_cost( c ), logical_depth( c )};
}

} // namespace revsynth
