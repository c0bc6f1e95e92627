#include <revsynth/matching.hpp>

#include <limits>
#include <stdexcept>

namespace revsynth
{

BipartiteInstance build_instance( std::vector<Word> zeros, std::vector<Word> ones, unsigned width )
{
  if ( zeros.size() != ones.size() || zeros.empty() )
  {
    throw std::logic_error( "bipartite instance needs two equal, nonempty sides" );
  }
  BipartiteInstance inst;
  inst.width = width;
  inst.weights.assign( zeros.size(), std::vector<std::int64_t>( ones.size() ) );
  for ( std::size_t i = 0; i < zeros.size(); ++i )
  {
    for ( std::size_t j = 0; j < ones.size(); ++j )
    {
      inst.weights[i][j] = 2 * static_cast<std::int64_t>( hamming_distance( zeros[i], ones[j], width ) ) - 1;
    }
  }
  inst.left = std::move( zeros );
  inst.right = std::move( ones );
  return inst;
}

std::vector<std::size_t> solve_assignment( std::vector<std::vector<std::int64_t>> const& cost )
{
  std::size_t const k = cost.size();
  constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;

  // 1-based potentials; column 0 is the virtual source of each augmentation
  std::vector<std::int64_t> u( k + 1, 0 ), v( k + 1, 0 );
  std::vector<std::size_t> match_of_col( k + 1, 0 ), way( k + 1, 0 );

  for ( std::size_t row = 1; row <= k; ++row )
  {
    if ( cost[row - 1].size() != k )
      throw std::invalid_argument( "assignment cost matrix must be square" );
    match_of_col[0] = row;
    std::size_t col0 = 0;
    std::vector<std::int64_t> minv( k + 1, inf );
    std::vector<bool> used( k + 1, false );
    do
    {
      used[col0] = true;
      std::size_t const r = match_of_col[col0];
      std::int64_t delta = inf;
      std::size_t col1 = 0;
      for ( std::size_t j = 1; j <= k; ++j )
      {
        if ( used[j] )
          continue;
        std::int64_t const cur = cost[r - 1][j - 1] - u[r] - v[j];
        if ( cur < minv[j] )
        {
          minv[j] = cur;
          way[j] = col0;
        }
        if ( minv[j] < delta )
        {
          delta = minv[j];
          col1 = j;
        }
      }
      for ( std::size_t j = 0; j <= k; ++j )
      {
        if ( used[j] )
        {
          u[match_of_col[j]] += delta;
          v[j] -= delta;
        }
        else
        {
          minv[j] -= delta;
        }
      }
      col0 = col1;
    } while ( match_of_col[col0] != 0 );

    do
    {
      std::size_t const prev = way[col0];
      match_of_col[col0] = match_of_col[prev];
      col0 = prev;
    } while ( col0 != 0 );
  }

  std::vector<std::size_t> assignment( k );
  for ( std::size_t j = 1; j <= k; ++j )
    assignment[match_of_col[j] - 1] = j - 1;
  return assignment;
}

Matching min_weight_perfect_matching( BipartiteInstance const& inst )
{
  auto const assignment = solve_assignment( inst.weights );
  Matching m;
  for ( std::size_t i = 0; i < assignment.size(); ++i )
  {
    m.pairs.emplace_back( inst.left[i], inst.right[assignment[i]] );
    m.total_weight += inst.weights[i][assignment[i]];
  }
  return m;
}

} // namespace revsynth
