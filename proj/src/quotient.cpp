#include "minorlab/quotient.hpp"

#include "minorlab/canonical.hpp"
#include "minorlab/minor_order.hpp"
#include "minorlab/zhegalkin.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlab
{

namespace
{

uint32_t image_mask( uint32_t edge, const var_map& map )
{
  uint32_t m = 0;
  for ( int v = 1; edge; ++v, edge >>= 1 )
  {
    if ( edge & 1u )
      m |= 1u << ( map( v ) - 1 );
  }
  return m;
}

} // namespace

quotient_witness make_quotient_witness( const hypergraph& source, const var_map& map )
{
  if ( map.domain_size() != source.n_vertices )
    throw std::invalid_argument( "quotient: map domain must equal vertex count" );
  std::vector<uint32_t> images;
  images.reserve( source.edges.size() );
  for ( uint32_t e : source.edges )
    images.push_back( image_mask( e, map ) );
  std::sort( images.begin(), images.end() );

  quotient_witness w{ map, {} };
  for ( size_t i = 0; i < images.size(); )
  {
    size_t j = i;
    while ( j < images.size() && images[j] == images[i] )
      ++j;
    w.preimage_parities.emplace_back( images[i], int( ( j - i ) & 1u ) );
    i = j;
  }
  return w;
}

hypergraph apply_quotient( const hypergraph& source, const var_map& map )
{
  const auto w = make_quotient_witness( source, map );
  std::vector<uint32_t> edges;
  for ( const auto& [mask, parity] : w.preimage_parities )
  {
    if ( parity )
      edges.push_back( mask );
  }
  return hypergraph( map.codomain_size, std::move( edges ) );
}

bool is_quotient_map( const var_map& map, const hypergraph& source, const hypergraph& target )
{
  if ( map.codomain_size != target.n_vertices )
    throw std::invalid_argument( "is_quotient_map: codomain must equal target vertex count" );
  return apply_quotient( source, map ) == target;
}

var_map collapse_map( int n, int i, int j )
{
  std::vector<int> image( n );
  int next = 1;
  for ( int v = 1; v <= n; ++v )
  {
    if ( v == i || v == j )
      image[v - 1] = n - 1;
    else
      image[v - 1] = next++;
  }
  return var_map( std::move( image ), n - 1 );
}

contraction_result contract_pair( const hypergraph& h, int i, int j )
{
  const int n = h.n_vertices;
  if ( i < 1 || i > n || j < 1 || j > n || i == j )
    throw std::invalid_argument( "contract_pair: e must be a pair of distinct vertices" );
  if ( i > j )
    std::swap( i, j );

  /* compacted labels: V minus e keeps its order as 1..n-2, l_e = n-1 */
  const var_map collapse = collapse_map( n, i, j );
  const uint32_t emask = ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) );
  const uint32_t lbit = 1u << ( n - 2 );

  std::vector<uint32_t> out;
  std::vector<uint32_t> touched; /* compacted F for edges meeting e */
  for ( uint32_t edge : h.edges )
  {
    if ( ( edge & emask ) == 0 )
      out.push_back( image_mask( edge, collapse ) );
    else
      touched.push_back( image_mask( edge & ~emask, collapse ) );
  }
  std::sort( touched.begin(), touched.end() );
  for ( size_t a = 0; a < touched.size(); )
  {
    size_t b = a;
    while ( b < touched.size() && touched[b] == touched[a] )
      ++b;
    if ( ( b - a ) & 1u )
      out.push_back( touched[a] | lbit );
    a = b;
  }

  contraction_result result{ hypergraph( n - 1, std::move( out ) ), n - 1 };
  if ( result.hg != apply_quotient( h, collapse ) )
    throw std::logic_error( "contract_pair: condition route disagrees with quotient route" );
  return result;
}

bool is_hyper_minor( const hypergraph& h, const hypergraph& source )
{
  /* an isolated vertex does not change the function class but keeps the map
     search total on 0-vertex instances */
  if ( h.n_vertices == 0 )
    return is_hyper_minor( hypergraph( 1, h.edges ), source );
  if ( source.n_vertices == 0 )
    return is_hyper_minor( h, hypergraph( 1, source.edges ) );

  const int n = h.n_vertices;
  const int m = source.n_vertices;
  double space = 1.0;
  for ( int k = 0; k < m; ++k )
    space *= n;
  if ( space > 5e8 )
    throw std::invalid_argument( "is_hyper_minor: search space exceeds cap" );

  bool found = false;
  std::vector<int> image( m, 1 );
  while ( true )
  {
    if ( apply_quotient( source, var_map( image, n ) ) == h )
    {
      found = true;
      break;
    }
    int pos = 0;
    while ( pos < m && image[pos] == n )
      image[pos++] = 1;
    if ( pos == m )
      break;
    ++image[pos];
  }

  /* mandatory cross-check against the Boolean-side decision on small inputs */
  if ( n <= 4 && m <= 4 )
  {
    const bool boolean_side = is_minor( function_of( h ), function_of( source ) );
    if ( boolean_side != found )
      throw std::logic_error( "is_hyper_minor: disagrees with Boolean-side decision" );
  }
  return found;
}

} // namespace minorlab
