#include <doctest.h>

#include <stdexcept>

#include "minorlab/graphs.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/quotient.hpp"
#include "minorlab/suites.hpp"
#include "minorlab/zhegalkin.hpp"

#include <algorithm>
#include <bit>

using namespace minorlab;

namespace
{

bool connected( const hypergraph& g )
{
  if ( g.n_vertices == 0 )
    return true;
  std::vector<uint32_t> adj( g.n_vertices + 1, 0 );
  for ( uint32_t e : g.edges )
  {
    const auto vs = hypergraph::vertices_of( e );
    if ( vs.size() == 2 )
    {
      adj[vs[0]] |= 1u << ( vs[1] - 1 );
      adj[vs[1]] |= 1u << ( vs[0] - 1 );
    }
  }
  uint32_t seen = 1u;
  std::vector<int> stack{ 1 };
  while ( !stack.empty() )
  {
    const int v = stack.back();
    stack.pop_back();
    for ( int w : hypergraph::vertices_of( adj[v] & ~seen ) )
    {
      seen |= 1u << ( w - 1 );
      stack.push_back( w );
    }
  }
  return std::popcount( seen ) == g.n_vertices;
}

/* the essential-arity drop of contracting e, straight from the definition */
int contraction_drop( const hypergraph& g, int i, int j )
{
  const int before = std::popcount( g.covered_mask() );
  const auto r = contract_pair( g, i, j );
  return before - std::popcount( r.hg.covered_mask() );
}

} // namespace

TEST_CASE( "ai components of the small named graphs" )
{
  SUBCASE( "the 4-cycle pairs its antipodes" )
  {
    const auto dec = ai_components( cycle_graph( 4 ) );
    REQUIRE( dec.components.size() == 2 );
    CHECK( dec.components[0] == std::vector<int>{ 1, 3 } );
    CHECK( dec.components[1] == std::vector<int>{ 2, 4 } );
    CHECK( dec.quotient == complete_graph( 2 ) );
  }
  SUBCASE( "the 4-path is prime" )
  {
    const auto dec = ai_components( path_graph( 4 ) );
    CHECK( dec.components.size() == 4 );
    CHECK( dec.is_prime() );
    CHECK( isomorphic( dec.quotient, path_graph( 4 ) ) );
  }
  SUBCASE( "complete bipartite sides are the components" )
  {
    const auto dec = ai_components( complete_multipartite( { 3, 2 } ) );
    REQUIRE( dec.components.size() == 2 );
    CHECK( dec.components[0].size() == 3 );
    CHECK( dec.components[1].size() == 2 );
    CHECK( dec.quotient == complete_graph( 2 ) );
  }
  SUBCASE( "loops are rejected" )
  {
    CHECK_THROWS_AS( ai_components( add_loops( cycle_graph( 4 ), { 1 } ) ),
                     std::invalid_argument );
  }
}

TEST_CASE( "ai decomposition reassembles the graph" )
{
  det_rng rng( 47 );
  for ( int trial = 0; trial < 80; ++trial )
  {
    const int n = 2 + static_cast<int>( rng.below( 5 ) );
    std::vector<uint32_t> edges;
    for ( int i = 1; i <= n; ++i )
    {
      for ( int j = i + 1; j <= n; ++j )
      {
        if ( rng.below( 2 ) )
          edges.push_back( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
      }
    }
    const hypergraph g( n, std::move( edges ) );
    const auto dec = ai_components( g );

    /* lexicographic sum of the (independent) parts along the quotient */
    std::vector<uint32_t> rebuilt;
    for ( uint32_t qe : dec.quotient.edges )
    {
      const auto parts = hypergraph::vertices_of( qe );
      for ( int a : dec.components[parts[0] - 1] )
      {
        for ( int b : dec.components[parts[1] - 1] )
          rebuilt.push_back( ( 1u << ( a - 1 ) ) | ( 1u << ( b - 1 ) ) );
      }
    }
    CHECK( hypergraph( n, std::move( rebuilt ) ) == g );

    /* and the quotient itself has no nontrivial ai-set */
    CHECK( ai_components( dec.quotient ).is_prime() );
  }
}

TEST_CASE( "property (P) on the named graphs" )
{
  CHECK( satisfies_property_p( cycle_graph( 4 ) ) );
  for ( int n = 2; n <= 6; ++n )
    CHECK( satisfies_property_p( complete_graph( n ) ) );
  CHECK( !satisfies_property_p( cycle_graph( 6 ) ) );
  CHECK( satisfies_property_p( cycle_graph( 5 ) ) );
  CHECK( satisfies_property_p( path_graph( 3 ) ) );
}

TEST_CASE( "property (P) holds exactly for cliques, C5, C4 and the 3-path" )
{
  for ( int n = 2; n <= 6; ++n )
  {
    for ( const auto& g : enumerate_graphs( n, false ) )
    {
      if ( !connected( g ) || reduced( g ).n_vertices != n )
        continue;
      const bool expected = isomorphic( g, complete_graph( n ) ) ||
                            ( n == 5 && isomorphic( g, cycle_graph( 5 ) ) ) ||
                            ( n == 4 && isomorphic( g, cycle_graph( 4 ) ) ) ||
                            ( n == 3 && isomorphic( g, path_graph( 3 ) ) );
      CHECK( satisfies_property_p( g ) == expected );
    }
  }
}

TEST_CASE( "loopless classifier on the named graphs" )
{
  SUBCASE( "two disjoint triangles" )
  {
    const auto v = classify_loopless( disjoint_triangles( 2 ) );
    CHECK( v.shape == graph_shape::disjoint_k3s );
    CHECK( v.params == std::vector<int>{ 2 } );
    CHECK( v.join_irreducible );
  }
  SUBCASE( "the 5-cycle" )
  {
    const auto v = classify_loopless( cycle_graph( 5 ) );
    CHECK( v.shape == graph_shape::c5 );
    CHECK( v.join_irreducible );
  }
  SUBCASE( "the 4-path is reducible with a witness" )
  {
    const auto v = classify_loopless( path_graph( 4 ) );
    CHECK( v.shape == graph_shape::reducible );
    CHECK( !v.join_irreducible );
    CHECK( v.witness );
  }
  SUBCASE( "shape parameters" )
  {
    CHECK( classify_loopless( complete_graph( 4 ) ).shape == graph_shape::kn );
    const auto star = classify_loopless( complete_multipartite( { 1, 3 } ) );
    CHECK( star.shape == graph_shape::empty_plus_empty );
    CHECK( star.params == std::vector<int>{ 1, 3 } );
    const auto c4 = classify_loopless( cycle_graph( 4 ) );
    CHECK( c4.shape == graph_shape::join_of_empties );
    CHECK( c4.params == std::vector<int>{ 2, 2 } );
    const auto k2m = classify_loopless( complete_multipartite( { 1, 1, 3 } ) );
    CHECK( k2m.shape == graph_shape::k2_plus_empty );
    CHECK( k2m.params == std::vector<int>{ 3 } );
  }
  SUBCASE( "trivial inputs are rejected" )
  {
    CHECK_THROWS_AS( classify_loopless( hypergraph( 3, {} ) ), std::invalid_argument );
  }
}

TEST_CASE( "loop-aware classifier on the named graphs" )
{
  CHECK( classify_graph( add_loops( complete_graph( 4 ), { 1 } ) ).join_irreducible );
  CHECK( !classify_graph( add_loops( complete_graph( 4 ), { 1, 2 } ) ).join_irreducible );
  CHECK( classify_graph( add_loops( complete_graph( 4 ), { 1, 2, 3 } ) ).join_irreducible );
  CHECK( !classify_graph( add_loops( cycle_graph( 5 ), { 1 } ) ).join_irreducible );

  /* disjoint loops are the parity functions */
  CHECK( classify_graph( hypergraph( 2, { 0x1, 0x2 } ) ).join_irreducible );
  CHECK( !classify_graph( hypergraph( 1, { 0x1 } ) ).join_irreducible );

  /* loops plus one triangle */
  const hypergraph mixed = add_loops(
      hypergraph( 4, { 0x3, 0x5, 0x6 } ), { 4 } );
  CHECK( classify_graph( mixed ).join_irreducible );
}

TEST_CASE( "enumeration counts" )
{
  CHECK( enumerate_graphs( 1, false ).size() == 1 );
  CHECK( enumerate_graphs( 3, false ).size() == 4 );
  CHECK( enumerate_graphs( 2, true ).size() == 6 );
  CHECK( enumerate_graphs( 6, false ).size() == 156 );
  CHECK( enumerate_graphs( 5, true ).size() == 544 );
  CHECK_THROWS_AS( enumerate_graphs( 7, false ), std::invalid_argument );
  CHECK_THROWS_AS( enumerate_graphs( 6, true ), std::invalid_argument );
}

TEST_CASE( "enumeration yields pairwise non-isomorphic representatives" )
{
  const auto graphs = enumerate_graphs( 4, true );
  CHECK( graphs.size() == 90 );
  for ( size_t a = 0; a < graphs.size(); ++a )
  {
    for ( size_t b = a + 1; b < graphs.size(); ++b )
      CHECK( !isomorphic( graphs[a], graphs[b] ) );
  }
}

TEST_CASE( "connected join-irreducible graphs have clique or 5-cycle quotients" )
{
  for ( int n = 2; n <= 6; ++n )
  {
    for ( const auto& g : enumerate_graphs( n, false ) )
    {
      if ( !connected( g ) || reduced( g ).n_vertices != n )
        continue;
      if ( !classify_loopless( g ).join_irreducible )
        continue;
      const auto dec = ai_components( g );
      const bool clique =
          isomorphic( dec.quotient, complete_graph( dec.quotient.n_vertices ) );
      const bool five_cycle =
          dec.quotient.n_vertices == 5 && isomorphic( dec.quotient, cycle_graph( 5 ) );
      CHECK( ( clique || five_cycle ) );
    }
  }
}

TEST_CASE( "a fruitful non-edge contraction implies a fruitful edge contraction" )
{
  /* loopless, up to 6 vertices */
  for ( int n = 2; n <= 6; ++n )
  {
    for ( const auto& g : enumerate_graphs( n, false ) )
    {
      if ( !connected( g ) || reduced( g ).n_vertices != n || g.edges.empty() )
        continue;
      bool nonedge_keeps = false, edge_keeps = false;
      for ( int i = 1; i <= n; ++i )
      {
        for ( int j = i + 1; j <= n; ++j )
        {
          const bool is_edge = g.has_edge( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
          if ( contraction_drop( g, i, j ) == 1 )
            ( is_edge ? edge_keeps : nonedge_keeps ) = true;
        }
      }
      if ( nonedge_keeps )
        CHECK( edge_keeps );
    }
  }
  /* with loops, up to 5 vertices */
  for ( int n = 2; n <= 5; ++n )
  {
    for ( const auto& g : enumerate_graphs( n, true ) )
    {
      if ( !connected( g ) || reduced( g ).n_vertices != n ||
           loopless_part( g ).edges.empty() )
        continue;
      bool nonedge_keeps = false, edge_keeps = false;
      for ( int i = 1; i <= n; ++i )
      {
        for ( int j = i + 1; j <= n; ++j )
        {
          const bool is_edge = g.has_edge( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
          if ( contraction_drop( g, i, j ) == 1 )
            ( is_edge ? edge_keeps : nonedge_keeps ) = true;
        }
      }
      if ( nonedge_keeps )
        CHECK( edge_keeps );
    }
  }
}
