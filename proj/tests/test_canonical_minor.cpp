#include <doctest.h>

#include <stdexcept>

#include "minorlab/minor_order.hpp"
#include "minorlab/suites.hpp"
#include "minorlab/zhegalkin.hpp"

#include <algorithm>
#include <set>

using namespace minorlab;

namespace
{

truth_table random_table( det_rng& rng, int n )
{
  truth_table f( n );
  for ( uint32_t a = 0; a < f.num_bits(); ++a )
    f.set_bit( a, rng.below( 2 ) );
  return f;
}

var_map random_map( det_rng& rng, int n, int max_m )
{
  const int m = 1 + static_cast<int>( rng.below( max_m ) );
  std::vector<int> img( n );
  for ( auto& x : img )
    x = 1 + static_cast<int>( rng.below( m ) );
  return var_map( std::move( img ), m );
}

const truth_table and2 = truth_table::from_value( 2, 0x8 );

} // namespace

TEST_CASE( "canonical: dangling variables are dropped" )
{
  CHECK( canonical( truth_table::projection( 3, 2 ) ).table ==
         truth_table::from_value( 1, 0x2 ) );
  CHECK( canonical( truth_table::constant( 5, true ) ).table ==
         truth_table::from_value( 0, 0x1 ) );
}

TEST_CASE( "canonical identifies permuted polynomials" )
{
  /* x1x2 + x1 and x1x2 + x2 differ only by the variable swap */
  const truth_table a = from_polynomial( hypergraph( 2, { 0x3, 0x1 } ) );
  const truth_table b = from_polynomial( hypergraph( 2, { 0x3, 0x2 } ) );
  CHECK( a != b );
  CHECK( canonical( a ) == canonical( b ) );
  CHECK( equivalent( a, b ) );
}

TEST_CASE( "canonical is idempotent and permutation-invariant" )
{
  det_rng rng( 17 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const int n = 1 + static_cast<int>( rng.below( 5 ) );
    const truth_table f = random_table( rng, n );
    const auto c = canonical( f );
    CHECK( canonical( c.table ) == c );

    std::vector<int> perm( n );
    for ( int i = 0; i < n; ++i )
      perm[i] = i + 1;
    for ( int i = n - 1; i > 0; --i )
      std::swap( perm[i], perm[rng.below( i + 1 )] );
    CHECK( canonical( apply_map( f, var_map( perm, n ) ) ) == c );
  }
}

TEST_CASE( "canonical enforces the permutation cap" )
{
  truth_table f( 9 );
  /* all nine variables essential: the full conjunction */
  f.set_bit( f.num_bits() - 1, true );
  CHECK_THROWS_AS( canonical( f ), std::invalid_argument );
}

TEST_CASE( "is_minor on the named examples" )
{
  CHECK( is_minor( truth_table::projection( 1, 1 ), and2 ) );
  CHECK( !is_minor( truth_table::constant( 1, false ), truth_table::projection( 1, 1 ) ) );
  CHECK( is_minor( and2, and2 ) );
}

TEST_CASE( "no comparabilities between the four bottom classes" )
{
  const std::vector<truth_table> bottom = {
      truth_table::constant( 1, false ), truth_table::constant( 1, true ),
      truth_table::projection( 1, 1 ), truth_table::from_value( 1, 0x1 ) };
  for ( size_t i = 0; i < bottom.size(); ++i )
  {
    for ( size_t j = 0; j < bottom.size(); ++j )
    {
      if ( i != j )
        CHECK( !is_minor( bottom[i], bottom[j] ) );
    }
  }
}

TEST_CASE( "quasi-order laws on random chains" )
{
  det_rng rng( 19 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const int n = 1 + static_cast<int>( rng.below( 5 ) );
    const truth_table f = random_table( rng, n );
    CHECK( is_minor( f, f ) );

    const truth_table g = apply_map( f, random_map( rng, n, 5 ) );
    const truth_table h = apply_map( g, random_map( rng, g.arity(), 5 ) );
    CHECK( is_minor( g, f ) );
    CHECK( is_minor( h, g ) );
    CHECK( is_minor( h, f ) );
  }
}

TEST_CASE( "closure route and map-search route agree exhaustively at arity 3" )
{
  std::set<truth_table> reps;
  for ( uint32_t v = 0; v < 256; ++v )
    reps.insert( canonical( truth_table::from_value( 3, v ) ).table );
  for ( const auto& f : reps )
  {
    for ( const auto& g : reps )
      CHECK( is_minor( g, f ) == is_minor_sigma( g, f ) );
  }
}

TEST_CASE( "closure route and map-search route agree on random arity-4 pairs" )
{
  det_rng rng( 23 );
  for ( int trial = 0; trial < 120; ++trial )
  {
    const truth_table f = random_table( rng, 4 );
    const truth_table g = random_table( rng, 1 + static_cast<int>( rng.below( 4 ) ) );
    CHECK( is_minor( g, f ) == is_minor_sigma( g, f ) );
  }
}

TEST_CASE( "monotonicity of essential arity, exhaustive at arity <= 4" )
{
  std::set<truth_table> reps;
  for ( uint32_t v = 0; v < ( 1u << 16 ); ++v )
    reps.insert( canonical( truth_table::from_value( 4, v ) ).table );
  for ( const auto& f : reps )
  {
    for ( const auto& m : strict_minor_closure( f ) )
      CHECK( m.ess() < f.arity() ); /* strict minors lose essential arity */
  }
}

TEST_CASE( "every strict minor sits below a one-step identification" )
{
  std::set<truth_table> reps;
  for ( uint32_t v = 0; v < ( 1u << 16 ); ++v )
    reps.insert( canonical( truth_table::from_value( 4, v ) ).table );
  for ( const auto& f : reps )
  {
    if ( f.arity() < 2 )
      continue;
    for ( const auto& g : strict_minor_closure( f ) )
    {
      bool witnessed = false;
      for ( int i = 1; i <= f.arity() && !witnessed; ++i )
      {
        for ( int j = i + 1; j <= f.arity() && !witnessed; ++j )
        {
          const truth_table step = identify( f, i, j );
          if ( canonical( step ).table != f && is_minor( g.table, step ) )
            witnessed = true;
        }
      }
      CHECK( witnessed );
    }
  }
}
