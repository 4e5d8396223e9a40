#include "minorlab/steiner.hpp"

#include "minorlab/irreducibility.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/quotient.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorlab
{

design_params::design_params( int n_, int k_, int lambda_ )
    : n( n_ ), k( k_ ), lambda( lambda_ )
{
  if ( !( n >= k && k >= 2 && lambda >= 1 ) )
    throw std::invalid_argument( "design_params: need n >= k >= 2 and lambda >= 1" );
}

bool is_design( const hypergraph& h, const design_params& p )
{
  if ( h.n_vertices != p.n )
    return false;
  for ( uint32_t e : h.edges )
  {
    if ( std::popcount( e ) != p.k )
      return false;
  }
  for ( int i = 1; i <= p.n; ++i )
  {
    for ( int j = i + 1; j <= p.n; ++j )
    {
      const uint32_t pair = ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) );
      int count = 0;
      for ( uint32_t e : h.edges )
      {
        if ( ( e & pair ) == pair )
          ++count;
      }
      if ( count != p.lambda )
        return false;
    }
  }
  return true;
}

hypergraph minus_pair( const hypergraph& h, int i, int j )
{
  const int n = h.n_vertices;
  if ( i < 1 || i > n || j < 1 || j > n || i == j )
    throw std::invalid_argument( "minus_pair: e must be a pair of distinct vertices" );
  const uint32_t emask = ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) );

  /* same order-preserving relabeling of V minus e as contract_pair */
  std::vector<int> map( n + 1, 0 );
  int next = 1;
  for ( int v = 1; v <= n; ++v )
  {
    if ( v != i && v != j )
      map[v] = next++;
  }

  std::vector<uint32_t> edges;
  for ( uint32_t e : h.edges )
  {
    if ( e & emask )
      continue;
    uint32_t m = 0;
    for ( int v : hypergraph::vertices_of( e ) )
      m |= 1u << ( map[v] - 1 );
    edges.push_back( m );
  }
  return hypergraph( n - 2, std::move( edges ) );
}

bool is_minus2_monomorphic( const hypergraph& h )
{
  const int n = h.n_vertices;
  if ( n < 3 )
    throw std::invalid_argument( "is_minus2_monomorphic: need at least 3 vertices" );
  const hypergraph first = minus_pair( h, 1, 2 );
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      if ( i == 1 && j == 2 )
        continue;
      if ( !isomorphic( first, minus_pair( h, i, j ) ) )
        return false;
    }
  }
  return true;
}

steiner_report make_steiner_report( const hypergraph& h )
{
  const int n = h.n_vertices;
  if ( n < 3 || h.edges.empty() )
    throw std::invalid_argument( "steiner_report: need a Steiner system on >= 3 points" );
  const int k = std::popcount( h.edges.front() );
  if ( k < 2 || !is_design( h, design_params( n, k, 1 ) ) )
    throw std::invalid_argument( "steiner_report: input is not a Steiner system" );

  steiner_report r;
  r.n = n;
  r.k = k;
  r.total_pairs = size_t( n ) * ( n - 1 ) / 2;

  r.ji = is_join_irreducible_h( h );
  r.minus2_mono = is_minus2_monomorphic( h );

  r.contraction_mono = true;
  const hypergraph first = contract_pair( h, 1, 2 ).hg;
  for ( int i = 1; i <= n && r.contraction_mono; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      if ( i == 1 && j == 2 )
        continue;
      if ( !isomorphic( first, contract_pair( h, i, j ).hg ) )
      {
        r.contraction_mono = false;
        break;
      }
    }
  }

  r.dh_size = dh_set( h ).size();

  if ( r.ji != r.contraction_mono || r.ji != r.minus2_mono )
    throw std::logic_error( "steiner_report: the three conditions disagree" );
  if ( k >= 3 && r.dh_size != r.total_pairs )
    throw std::logic_error( "steiner_report: a contraction lost an extra vertex" );
  return r;
}

namespace
{

hypergraph fano_plane()
{
  const std::vector<std::vector<int>> blocks = {
      { 1, 2, 3 }, { 1, 4, 5 }, { 1, 6, 7 }, { 2, 4, 6 },
      { 2, 5, 7 }, { 3, 4, 7 }, { 3, 5, 6 } };
  std::vector<uint32_t> edges;
  for ( const auto& b : blocks )
    edges.push_back( hypergraph::mask_of( b ) );
  hypergraph h( 7, std::move( edges ) );
  if ( !is_design( h, design_params( 7, 3, 1 ) ) )
    throw std::logic_error( "fano: failed the design check" );
  return h;
}

hypergraph affine_plane_9()
{
  /* points (x, y) over GF(3), index 3x + y + 1; lines are the zero-sum triples */
  const auto idx = []( int x, int y ) { return 3 * x + y + 1; };
  std::vector<uint32_t> edges;
  for ( int p = 0; p < 9; ++p )
  {
    for ( int q = p + 1; q < 9; ++q )
    {
      const int px = p / 3, py = p % 3, qx = q / 3, qy = q % 3;
      const int rx = ( 6 - px - qx ) % 3, ry = ( 6 - py - qy ) % 3;
      const int r = 3 * rx + ry;
      if ( r > q )
        edges.push_back( hypergraph::mask_of( { idx( px, py ), idx( qx, qy ), idx( rx, ry ) } ) );
    }
  }
  hypergraph h( 9, std::move( edges ) );
  if ( !is_design( h, design_params( 9, 3, 1 ) ) )
    throw std::logic_error( "ag(2,3): failed the design check" );
  return h;
}

hypergraph cyclic_sts13()
{
  std::vector<uint32_t> edges;
  for ( int i = 0; i < 13; ++i )
  {
    const auto block = [&]( int a, int b, int c ) {
      return hypergraph::mask_of( { ( i + a ) % 13 + 1, ( i + b ) % 13 + 1, ( i + c ) % 13 + 1 } );
    };
    edges.push_back( block( 0, 1, 4 ) );
    edges.push_back( block( 0, 2, 7 ) );
  }
  hypergraph h( 13, std::move( edges ) );
  if ( !is_design( h, design_params( 13, 3, 1 ) ) )
    throw std::logic_error( "sts13: failed the design check" );
  return h;
}

/* swaps one Pasch configuration for its opposite; a Steiner-preserving trade */
hypergraph pasch_variant( const hypergraph& h )
{
  const auto& blocks = h.edges;
  const size_t nb = blocks.size();
  for ( size_t a = 0; a < nb; ++a )
  {
    for ( size_t b = a + 1; b < nb; ++b )
    {
      if ( std::popcount( blocks[a] & blocks[b] ) != 1 )
        continue;
      for ( size_t c = b + 1; c < nb; ++c )
      {
        for ( size_t d = c + 1; d < nb; ++d )
        {
          const uint32_t quad[4] = { blocks[a], blocks[b], blocks[c], blocks[d] };
          const uint32_t all = quad[0] | quad[1] | quad[2] | quad[3];
          if ( std::popcount( all ) != 6 )
            continue;
          bool pasch = true;
          uint32_t meet[4][4] = {};
          for ( int s = 0; s < 4 && pasch; ++s )
          {
            for ( int t = s + 1; t < 4 && pasch; ++t )
            {
              meet[s][t] = quad[s] & quad[t];
              if ( std::popcount( meet[s][t] ) != 1 )
                pasch = false;
            }
          }
          if ( !pasch )
            continue;

          /* opposite configuration: block i picks the meets avoiding index i */
          std::vector<uint32_t> replaced;
          for ( int s = 0; s < 4; ++s )
          {
            uint32_t nb_mask = 0;
            for ( int u = 0; u < 4; ++u )
            {
              for ( int v = u + 1; v < 4; ++v )
              {
                if ( u != s && v != s )
                  nb_mask |= meet[u][v];
              }
            }
            replaced.push_back( nb_mask );
          }

          std::vector<uint32_t> edges;
          for ( size_t e = 0; e < nb; ++e )
          {
            if ( e != a && e != b && e != c && e != d )
              edges.push_back( blocks[e] );
          }
          edges.insert( edges.end(), replaced.begin(), replaced.end() );
          hypergraph candidate( h.n_vertices, std::move( edges ) );
          if ( is_design( candidate, design_params( h.n_vertices, 3, 1 ) ) &&
               !isomorphic( candidate, h ) )
            return candidate;
        }
      }
    }
  }
  throw std::logic_error( "pasch_variant: no non-isomorphic trade found" );
}

} // namespace

std::vector<named_system> builtin_systems()
{
  return { { "fano", fano_plane() }, { "ag9", affine_plane_9() } };
}

std::vector<named_system> extended_systems()
{
  const hypergraph cyclic = cyclic_sts13();
  return { { "sts13-cyclic", cyclic }, { "sts13-pasch", pasch_variant( cyclic ) } };
}

} // namespace minorlab
