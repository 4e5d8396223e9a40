#include <doctest.h>

#include <stdexcept>

#include "minorlab/graphs.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/quotient.hpp"
#include "minorlab/steiner.hpp"

#include <bit>

using namespace minorlab;

namespace
{

const hypergraph fano = builtin_systems()[0].hg;
const hypergraph ag9 = builtin_systems()[1].hg;

hypergraph fano_minus_block()
{
  std::vector<uint32_t> edges( fano.edges.begin() + 1, fano.edges.end() );
  return hypergraph( 7, std::move( edges ) );
}

} // namespace

TEST_CASE( "the built-in systems pass the design check" )
{
  CHECK( is_design( fano, design_params( 7, 3, 1 ) ) );
  CHECK( is_design( ag9, design_params( 9, 3, 1 ) ) );
  CHECK( is_steiner_triple( fano, design_params( 7, 3, 1 ) ) );
  for ( int n = 3; n <= 7; ++n )
    CHECK( is_design( complete_graph( n ), design_params( n, 2, 1 ) ) );
  CHECK( !is_design( fano_minus_block(), design_params( 7, 3, 1 ) ) );
  CHECK( !is_design( fano, design_params( 7, 3, 2 ) ) );
  CHECK_THROWS_AS( design_params( 2, 3, 1 ), std::invalid_argument );
}

TEST_CASE( "minus_pair keeps exactly the blocks away from the pair" )
{
  SUBCASE( "fano: inclusion-exclusion leaves two blocks" )
  {
    /* per point there are (n-1)/(k-1) = 3 blocks; 7 - (3 + 3 - 1) = 2 */
    for ( int i = 1; i <= 7; ++i )
    {
      for ( int j = i + 1; j <= 7; ++j )
      {
        const hypergraph m = minus_pair( fano, i, j );
        CHECK( m.n_vertices == 5 );
        CHECK( m.edges.size() == 2 );
      }
    }
  }
  SUBCASE( "an edge of k4 leaves the opposite edge" )
  {
    CHECK( minus_pair( complete_graph( 4 ), 1, 2 ) == complete_graph( 2 ) );
  }
  SUBCASE( "a pair touching every block empties the system" )
  {
    CHECK( minus_pair( complete_graph( 3 ), 1, 2 ) == hypergraph( 1, {} ) );
  }
}

TEST_CASE( "minus-2 monomorphy" )
{
  CHECK( is_minus2_monomorphic( fano ) );
  CHECK( is_minus2_monomorphic( ag9 ) );
  CHECK( !is_minus2_monomorphic( fano_minus_block() ) );
  CHECK_THROWS_AS( is_minus2_monomorphic( complete_graph( 2 ) ), std::invalid_argument );
}

TEST_CASE( "steiner reports: the three conditions hold together" )
{
  for ( const auto& sys : builtin_systems() )
  {
    const auto r = make_steiner_report( sys.hg );
    CHECK( r.ji );
    CHECK( r.contraction_mono );
    CHECK( r.minus2_mono );
    CHECK( r.dh_size == r.total_pairs );
  }
  for ( int n = 4; n <= 7; ++n )
  {
    const auto r = make_steiner_report( complete_graph( n ) );
    CHECK( r.ji );
    CHECK( r.dh_size == r.total_pairs );
  }
  /* the triangle is the gap-two extreme: every contraction strands a vertex */
  const auto k3 = make_steiner_report( complete_graph( 3 ) );
  CHECK( k3.ji );
  CHECK( k3.contraction_mono );
  CHECK( k3.minus2_mono );
  CHECK( k3.dh_size == 0 );

  CHECK_THROWS_AS( make_steiner_report( fano_minus_block() ), std::invalid_argument );
}

TEST_CASE( "fano is 2-set transitive" )
{
  CHECK( is_2set_transitive( fano ) );
}

TEST_CASE( "deleted-pair isomorphisms extend to contractions by fixing the fresh vertex" )
{
  /* both constructions compact the surviving vertices the same way, so the
     extension is the identity on the fresh index */
  for ( int i1 = 1; i1 <= 7; ++i1 )
  {
    for ( int j1 = i1 + 1; j1 <= 7; ++j1 )
    {
      const hypergraph minus_a = minus_pair( fano, i1, j1 );
      const hypergraph contr_a = contract_pair( fano, i1, j1 ).hg;
      for ( int i2 = 1; i2 <= 7; ++i2 )
      {
        for ( int j2 = i2 + 1; j2 <= 7; ++j2 )
        {
          const auto phi = find_isomorphism( minus_a, minus_pair( fano, i2, j2 ) );
          REQUIRE( phi );
          auto extended = *phi;
          extended.push_back( 6 ); /* fresh index on both sides */
          CHECK( is_isomorphism( extended, contr_a, contract_pair( fano, i2, j2 ).hg ) );
        }
      }
    }
  }
}

TEST_CASE( "every contraction isomorphism fixes the fresh vertex" )
{
  const hypergraph base = contract_pair( fano, 1, 2 ).hg;
  for ( int i = 1; i <= 7; ++i )
  {
    for ( int j = i + 1; j <= 7; ++j )
    {
      const auto isos = all_isomorphisms( base, contract_pair( fano, i, j ).hg );
      CHECK( !isos.empty() );
      for ( const auto& g : isos )
        CHECK( g[5] == 6 ); /* vertex 6 is the fresh one on both sides */
    }
  }
}
