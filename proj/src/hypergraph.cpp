#include "minorlab/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorlab
{

hypergraph::hypergraph( int n, std::vector<uint32_t> edge_masks )
    : n_vertices( n ), edges( std::move( edge_masks ) )
{
  if ( n < 0 || n > max_vertices )
    throw std::invalid_argument( "hypergraph: vertex count out of range" );
  const uint32_t all = n == 0 ? 0u : ( n == 31 ? 0x7fffffffu : ( 1u << n ) - 1 );
  for ( uint32_t e : edges )
  {
    if ( e & ~all )
      throw std::invalid_argument( "hypergraph: edge contains vertex outside 1..n" );
  }
  std::sort( edges.begin(), edges.end() );
  if ( std::adjacent_find( edges.begin(), edges.end() ) != edges.end() )
    throw std::invalid_argument( "hypergraph: duplicate hyperedge" );
}

bool hypergraph::has_edge( uint32_t mask ) const
{
  return std::binary_search( edges.begin(), edges.end(), mask );
}

uint32_t hypergraph::covered_mask() const
{
  uint32_t m = 0;
  for ( uint32_t e : edges )
    m |= e;
  return m;
}

uint32_t hypergraph::mask_of( const std::vector<int>& vertices )
{
  uint32_t m = 0;
  for ( int v : vertices )
  {
    if ( v < 1 || v > max_vertices )
      throw std::invalid_argument( "hypergraph: vertex index out of range" );
    const uint32_t bit = 1u << ( v - 1 );
    if ( m & bit )
      throw std::invalid_argument( "hypergraph: repeated vertex in edge" );
    m |= bit;
  }
  return m;
}

std::vector<int> hypergraph::vertices_of( uint32_t mask )
{
  std::vector<int> vs;
  for ( int v = 1; mask; ++v, mask >>= 1 )
  {
    if ( mask & 1u )
      vs.push_back( v );
  }
  return vs;
}

hypergraph parity_fold( int n, const std::vector<uint32_t>& masks )
{
  std::vector<uint32_t> sorted( masks );
  std::sort( sorted.begin(), sorted.end() );
  std::vector<uint32_t> kept;
  for ( size_t i = 0; i < sorted.size(); )
  {
    size_t j = i;
    while ( j < sorted.size() && sorted[j] == sorted[i] )
      ++j;
    if ( ( j - i ) & 1u )
      kept.push_back( sorted[i] );
    i = j;
  }
  return hypergraph( n, std::move( kept ) );
}

std::vector<int> reduction_map( const hypergraph& h )
{
  std::vector<int> map( h.n_vertices + 1, 0 );
  const uint32_t used = h.covered_mask();
  int next = 1;
  for ( int v = 1; v <= h.n_vertices; ++v )
  {
    if ( used & ( 1u << ( v - 1 ) ) )
      map[v] = next++;
  }
  return map;
}

hypergraph reduced( const hypergraph& h )
{
  const auto map = reduction_map( h );
  const int n = std::popcount( h.covered_mask() );
  std::vector<uint32_t> edges;
  edges.reserve( h.edges.size() );
  for ( uint32_t e : h.edges )
  {
    uint32_t m = 0;
    for ( int v : hypergraph::vertices_of( e ) )
      m |= 1u << ( map[v] - 1 );
    edges.push_back( m );
  }
  return hypergraph( n, std::move( edges ) );
}

hypergraph relabel( const hypergraph& h, const std::vector<int>& perm, int new_n )
{
  std::vector<uint32_t> edges;
  edges.reserve( h.edges.size() );
  for ( uint32_t e : h.edges )
  {
    uint32_t m = 0;
    for ( int v : hypergraph::vertices_of( e ) )
    {
      const int w = perm[v - 1];
      if ( w < 1 || w > new_n )
        throw std::invalid_argument( "relabel: image vertex out of range" );
      m |= 1u << ( w - 1 );
    }
    edges.push_back( m );
  }
  return hypergraph( new_n, std::move( edges ) );
}

} // namespace minorlab
