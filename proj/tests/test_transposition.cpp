#include <revsynth/metrics.hpp>
#include <revsynth/transposition.hpp>

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace revsynth;

namespace
{

/// Brute force: the circuit exchanges u and v and fixes every other word.
bool realizes_transposition( Circuit const& c, Word u, Word v )
{
  for ( Word x = 0; x < ( Word{1} << c.width() ); ++x )
  {
    Word const want = x == u ? v : x == v ? u : x;
    if ( simulate( c, x ) != want )
      return false;
  }
  return true;
}

} // namespace

TEST( Cascade, Examples )
{
  auto const h1 = synth_transposition_cascade( 0b100, 0b000, 3 );
  EXPECT_EQ( h1.num_gates(), 1u );
  EXPECT_TRUE( realizes_transposition( h1, 0b100, 0b000 ) );

  auto const h2 = synth_transposition_cascade( 0b010, 0b111, 3 );
  EXPECT_EQ( h2.num_gates(), 3u );
  EXPECT_TRUE( realizes_transposition( h2, 0b010, 0b111 ) );

  auto const h3 = synth_transposition_cascade( 0b1010, 0b0100, 4 );
  EXPECT_EQ( h3.num_gates(), 5u );
  EXPECT_TRUE( realizes_transposition( h3, 0b1010, 0b0100 ) );
}

TEST( Cascade, RejectsEqualWords )
{
  EXPECT_THROW( synth_transposition_cascade( 3, 3, 3 ), std::invalid_argument );
  EXPECT_THROW( synth_transposition_aba( 3, 3, 3 ), std::invalid_argument );
}

TEST( Aba, Examples )
{
  auto const c = synth_transposition_aba( 0b1010, 0b0100, 4, 3u );
  ASSERT_EQ( c.num_gates(), 5u );
  EXPECT_TRUE( realizes_transposition( c, 0b1010, 0b0100 ) );
  auto const g = c.gates();
  for ( std::size_t i : {0u, 1u, 3u, 4u} )
  {
    EXPECT_EQ( g[i].num_controls(), 1u );
    EXPECT_EQ( g[i].positive_controls(), 0b1000u );
  }
  EXPECT_EQ( g[2].target(), 3u );
  EXPECT_EQ( g[2].num_controls(), 3u );

  EXPECT_EQ( synth_transposition_aba( 0b100, 0b000, 3 ), synth_transposition_cascade( 0b100, 0b000, 3 ) );
  EXPECT_THROW( synth_transposition_aba( 0b1010, 0b0100, 4, 0u ), std::invalid_argument );
}

TEST( Transposition, RandomPropertySweep )
{
  auto rng = test::rng( 31 );
  int strict_checks = 0;
  for ( int i = 0; i < 600; ++i )
  {
    unsigned const width = 1 + i % 6;
    std::uniform_int_distribution<Word> word( 0, ( Word{1} << width ) - 1 );
    Word const u = word( rng );
    Word v = word( rng );
    while ( v == u )
      v = word( rng );
    unsigned const h = static_cast<unsigned>( std::popcount( u ^ v ) );
    auto const cascade = synth_transposition_cascade( u, v, width );
    auto const aba = synth_transposition_aba( u, v, width );
    ASSERT_TRUE( realizes_transposition( cascade, u, v ) );
    ASSERT_TRUE( realizes_transposition( aba, u, v ) );
    EXPECT_EQ( cascade.num_gates(), 2u * h - 1u );
    EXPECT_EQ( aba.num_gates(), 2u * h - 1u );
    EXPECT_LE( quantum_cost( aba ), quantum_cost( cascade ) );
    if ( h >= 2 && width >= 3 )
    {
      EXPECT_LT( quantum_cost( aba ), quantum_cost( cascade ) );
      ++strict_checks;
    }
  }
  EXPECT_GT( strict_checks, 100 );
}
