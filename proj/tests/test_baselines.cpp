#include <revsynth/baselines.hpp>

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace revsynth;

namespace
{

using Steps = std::vector<std::pair<Word, Word>>;

/// Sorts by moving a randomly chosen misplaced value home at each step.
Sorter random_sorter( std::uint64_t seed )
{
  return [seed]( Permutation const& p ) {
    auto rng = test::rng( seed );
    std::vector<Word> list( p.outputs().begin(), p.outputs().end() );
    TranspositionSequence seq;
    for ( ;; )
    {
      std::vector<Word> misplaced;
      for ( Word x = 0; x < list.size(); ++x )
      {
        if ( list[x] != x )
          misplaced.push_back( x );
      }
      if ( misplaced.empty() )
        return seq;
      Word const x = misplaced[rng() % misplaced.size()];
      Word const u = list[x];
      seq.steps.emplace_back( u, x );
      auto const at = std::find( list.begin(), list.end(), x );
      std::swap( list[x], *at );
    }
  };
}

} // namespace

TEST( BubbleSorter, Examples )
{
  EXPECT_TRUE( bubble_sorter( Permutation::identity( 3 ) ).steps.empty() );
  EXPECT_EQ( bubble_sorter( Permutation( 3, {0, 1, 2, 3, 7, 4, 6, 5} ) ).steps, ( Steps{{7, 4}, {7, 6}, {7, 5}, {6, 5}} ) );
  EXPECT_EQ( bubble_sorter( Permutation( 2, {3, 2, 1, 0} ) ).steps.size(), 6u );
}

TEST( BubbleSorter, StepsSortTheSource )
{
  auto rng = test::rng( 61 );
  for ( int i = 0; i < 100; ++i )
  {
    auto p = test::random_permutation( 1 + i % 5, rng );
    for ( auto const& [u, v] : bubble_sorter( p ).steps )
      p = apply_transposition( p, u, v );
    EXPECT_TRUE( p.is_identity() );
  }
}

TEST( SortSynth, Examples )
{
  EXPECT_TRUE( sort_synth( Permutation::identity( 3 ), bubble_sorter, TranspositionMode::cascade ).empty() );
  Permutation const table( 3, {0, 1, 2, 3, 7, 4, 6, 5} );
  auto const c = sort_synth( table, bubble_sorter, TranspositionMode::cascade );
  EXPECT_TRUE( verify( c, table ) );
}

TEST( SortSynth, AnyValidSorterVerifies )
{
  auto rng = test::rng( 62 );
  for ( int i = 0; i < 200; ++i )
  {
    unsigned const n = 1 + i % 5;
    auto const spec = test::random_permutation( n, rng );
    auto const mode = i % 2 ? TranspositionMode::aba : TranspositionMode::cascade;
    ASSERT_TRUE( verify( sort_synth( spec, random_sorter( i ), mode ), spec ) );
  }
}

TEST( SortSynth, RejectsBrokenSorters )
{
  Permutation const p( 2, {1, 0, 2, 3} );
  Sorter const none = []( Permutation const& ) { return TranspositionSequence{}; };
  Sorter const bad = []( Permutation const& ) { return TranspositionSequence{{{1, 1}}}; };
  EXPECT_THROW( sort_synth( p, none, TranspositionMode::cascade ), std::logic_error );
  EXPECT_THROW( sort_synth( p, bad, TranspositionMode::cascade ), std::logic_error );
}

TEST( Mmd, Examples )
{
  EXPECT_TRUE( mmd_synth( Permutation::identity( 4 ) ).empty() );

  // output-side NOTs fixing row 0 come last in application order
  Permutation const p( 3, {5, 1, 2, 3, 4, 0, 6, 7} );
  auto const c = mmd_synth( p, {false, false} );
  ASSERT_TRUE( verify( c, p ) );
  auto const g = c.gates();
  ASSERT_GE( g.size(), 2u );
  std::vector<Gate> const last{g[g.size() - 2], g[g.size() - 1]};
  EXPECT_TRUE( ( last == std::vector<Gate>{Gate::not_gate( 2 ), Gate::not_gate( 0 )} ) ||
               ( last == std::vector<Gate>{Gate::not_gate( 0 ), Gate::not_gate( 2 )} ) );
}

TEST( Mmd, SoundForEveryFlagCombination )
{
  auto rng = test::rng( 63 );
  for ( int i = 0; i < 200; ++i )
  {
    unsigned const n = 1 + i % 6;
    auto const spec = test::random_permutation( n, rng );
    for ( bool bidirectional : {false, true} )
    {
      for ( bool mixed : {false, true} )
        ASSERT_TRUE( verify( mmd_synth( spec, {bidirectional, mixed} ), spec ) );
    }
  }
}

TEST( Mmd, PositiveControlsWithoutMixedPolarity )
{
  auto rng = test::rng( 64 );
  for ( int i = 0; i < 50; ++i )
  {
    auto const c = mmd_synth( test::random_permutation( 4, rng ), {true, false} );
    for ( auto const& g : c.gates() )
      EXPECT_EQ( g.negative_controls(), 0u );
  }
}
