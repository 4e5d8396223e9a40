#include <doctest.h>

#include <stdexcept>

#include "minorlab/graphs.hpp"
#include "minorlab/irreducibility.hpp"
#include "minorlab/steiner.hpp"
#include "minorlab/suites.hpp"
#include "minorlab/zhegalkin.hpp"

#include <set>

using namespace minorlab;

namespace
{

truth_table poly( int n, std::vector<uint32_t> edges )
{
  return from_polynomial( hypergraph( n, std::move( edges ) ) );
}

const truth_table and2 = poly( 2, { 0x3 } );
const truth_table xor2 = poly( 2, { 0x1, 0x2 } );
const truth_table maj3 = poly( 3, { 0x3, 0x5, 0x6 } );
/* (x1 or x2) and x3 and x4 */
const truth_table composite = poly( 4, { 0xd, 0xe, 0xf } );

hypergraph random_hypergraph( det_rng& rng, int n, int max_edges )
{
  std::set<uint32_t> edges;
  const int want = static_cast<int>( rng.below( max_edges + 1 ) );
  while ( static_cast<int>( edges.size() ) < want )
    edges.insert( static_cast<uint32_t>( rng.below( 1u << n ) ) );
  return hypergraph( n, std::vector<uint32_t>( edges.begin(), edges.end() ) );
}

} // namespace

TEST_CASE( "gap on the named examples" )
{
  CHECK( gap( xor2 ) == 2 );
  CHECK( gap( and2 ) == 1 );
  CHECK( gap( maj3 ) == 2 );
  CHECK_THROWS_AS( gap( truth_table::constant( 2, false ) ), std::invalid_argument );
  CHECK_THROWS_AS( gap( truth_table::projection( 2, 1 ) ), std::invalid_argument );
}

TEST_CASE( "pair classes" )
{
  SUBCASE( "a single pair" )
  {
    const auto pp = pair_classes( and2 );
    REQUIRE( pp.pairs.size() == 1 );
    CHECK( pp.drops == std::vector<int>{ 1 } );
    CHECK( pp.classes.size() == 1 );
  }
  SUBCASE( "the composite splits its maximal-drop pairs" )
  {
    const auto pp = pair_classes( composite );
    CHECK( pp.pairs.size() == 6 );
    CHECK( pp.drop_of( var_pair{ 1, 2 } ) == 1 );
    CHECK( pp.drop_of( var_pair{ 3, 4 } ) == 1 );
    CHECK( pp.class_of( var_pair{ 1, 2 } ) != pp.class_of( var_pair{ 3, 4 } ) );
  }
  SUBCASE( "parity identifications all agree" )
  {
    const auto pp = pair_classes( poly( 3, { 0x1, 0x2, 0x4 } ) );
    CHECK( pp.classes.size() == 1 );
    CHECK( pp.classes[0].size() == 3 );
  }
}

TEST_CASE( "cover reports on the named examples" )
{
  SUBCASE( "conjunction" )
  {
    const auto r = make_cover_report( and2 );
    CHECK( r.join_irreducible );
    REQUIRE( r.lower_cover_classes.size() == 1 );
    CHECK( canonical( r.lower_cover_classes[0] ).table == truth_table::projection( 1, 1 ) );
  }
  SUBCASE( "the composite is reducible with the lexicographic witness" )
  {
    const auto r = make_cover_report( composite );
    CHECK( !r.join_irreducible );
    CHECK( r.gap == 1 );
    CHECK( r.c_f == std::vector<var_pair>{ { 1, 2 }, { 3, 4 } } );
    REQUIRE( r.witness );
    CHECK( r.witness->first == var_pair{ 1, 2 } );
    CHECK( r.witness->second == var_pair{ 3, 4 } );
  }
  SUBCASE( "majority has the unique cover x" )
  {
    const auto r = make_cover_report( maj3 );
    CHECK( r.join_irreducible );
    CHECK( r.gap == 2 );
    CHECK( r.c_f.size() == 3 );
    REQUIRE( r.lower_cover_classes.size() == 1 );
    CHECK( canonical( r.lower_cover_classes[0] ).table == truth_table::projection( 1, 1 ) );
  }
}

TEST_CASE( "gap-two shapes" )
{
  const auto parity3 = gap2_classify( poly( 3, { 0x1, 0x2, 0x4 } ) );
  REQUIRE( parity3 );
  CHECK( parity3->case_number == 1 );
  CHECK( parity3->m == 3 );
  CHECK( !parity3->c );

  const auto with_constant = gap2_classify( poly( 2, { 0x3, 0x1, 0x0 } ) );
  REQUIRE( with_constant );
  CHECK( with_constant->case_number == 2 );
  CHECK( with_constant->c );

  CHECK( !gap2_classify( poly( 3, { 0x7 } ) ) ); /* x1 x2 x3 has gap one */

  const auto case4 = gap2_classify( poly( 3, { 0x3, 0x5, 0x6, 0x1, 0x2 } ) );
  REQUIRE( case4 );
  CHECK( case4->case_number == 4 );
}

TEST_CASE( "brute-force oracle on the named examples" )
{
  CHECK( brute_force_ji( and2 ) );
  CHECK( !brute_force_ji( composite ) );
  CHECK_THROWS_AS( brute_force_ji( truth_table::constant( 0, false ) ),
                   std::invalid_argument );
}

TEST_CASE( "dh sets of the named hypergraphs" )
{
  CHECK( dh_set( complete_graph( 3 ) ).empty() );
  CHECK( dh_set( complete_graph( 4 ) ).size() == 6 );
  CHECK( dh_set( builtin_systems()[0].hg ).size() == 21 );
  CHECK_THROWS_AS( dh_set( hypergraph( 2, { 0x1 } ) ), std::invalid_argument );
}

TEST_CASE( "hypergraph-side join-irreducibility on the named examples" )
{
  CHECK( is_join_irreducible_h( complete_graph( 4 ) ) );
  CHECK( is_join_irreducible_h( hypergraph( 3, { 0x3, 0x5, 0x6 } ) ) );
  CHECK( !is_join_irreducible_h( zhegalkin( composite ) ) );
  CHECK_THROWS_AS( is_join_irreducible_h( hypergraph( 1, { 0x1 } ) ),
                   std::invalid_argument );
}

TEST_CASE( "the three join-irreducibility routes agree, exhaustive on <= 3 vertices" )
{
  for ( int n = 2; n <= 3; ++n )
  {
    const uint64_t count = uint64_t( 1 ) << ( 1u << n );
    for ( uint64_t hmask = 0; hmask < count; ++hmask )
    {
      std::vector<uint32_t> edges;
      for ( uint32_t s = 0; s < ( 1u << n ); ++s )
      {
        if ( hmask & ( uint64_t( 1 ) << s ) )
          edges.push_back( s );
      }
      const hypergraph h( n, std::move( edges ) );
      if ( hypergraph::vertices_of( h.covered_mask() ).size() < 2 )
        continue;
      const truth_table f = function_of( h );
      const bool a = is_join_irreducible_h( h );
      const bool b = make_cover_report( f ).join_irreducible;
      const bool c = brute_force_ji( f );
      CHECK( a == b );
      CHECK( b == c );
    }
  }
}

TEST_CASE( "the three join-irreducibility routes agree on random 4-6 vertex instances" )
{
  det_rng rng( 41 );
  int done = 0;
  while ( done < 250 )
  {
    const int n = 4 + static_cast<int>( rng.below( 3 ) );
    const hypergraph h = random_hypergraph( rng, n, 10 );
    if ( hypergraph::vertices_of( h.covered_mask() ).size() < 2 )
      continue;
    ++done;
    const truth_table f = function_of( h );
    const bool a = is_join_irreducible_h( h );
    const bool b = make_cover_report( f ).join_irreducible;
    const bool c = brute_force_ji( f );
    CHECK( a == b );
    CHECK( b == c );
  }
}

TEST_CASE( "pairs in one class share their drop" )
{
  det_rng rng( 43 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const hypergraph h = random_hypergraph( rng, 3 + static_cast<int>( rng.below( 4 ) ), 10 );
    if ( hypergraph::vertices_of( h.covered_mask() ).size() < 2 )
      continue;
    const auto pp = hyper_pair_classes( h );
    for ( const auto& cls : pp.classes )
    {
      for ( const auto& p : cls )
        CHECK( pp.drop_of( p ) == pp.drop_of( cls.front() ) );
    }
  }
}
