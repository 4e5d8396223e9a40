#include "minorlab/zhegalkin.hpp"

#include <stdexcept>

namespace minorlab
{

void mobius_transform_inplace( truth_table& t )
{
  auto& words = t.words();
  const int n = t.arity();

  /* intra-word stages */
  static constexpr uint64_t lower_half[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };
  for ( int i = 0; i < n && i < 6; ++i )
  {
    for ( auto& w : words )
      w ^= ( w & lower_half[i] ) << ( 1u << i );
  }
  /* inter-word stages */
  for ( int i = 6; i < n; ++i )
  {
    const size_t stride = size_t( 1 ) << ( i - 6 );
    for ( size_t base = 0; base < words.size(); base += 2 * stride )
    {
      for ( size_t k = 0; k < stride; ++k )
        words[base + stride + k] ^= words[base + k];
    }
  }
}

hypergraph zhegalkin( const truth_table& f )
{
  truth_table coeffs = f;
  mobius_transform_inplace( coeffs );
  std::vector<uint32_t> edges;
  for ( uint32_t a = 0; a < coeffs.num_bits(); ++a )
  {
    if ( coeffs.bit( a ) )
      edges.push_back( a );
  }
  return hypergraph( f.arity(), std::move( edges ) );
}

truth_table from_polynomial( const hypergraph& h )
{
  if ( h.n_vertices > truth_table::max_arity )
    throw std::invalid_argument( "from_polynomial: vertex count exceeds arity cap" );
  truth_table t( h.n_vertices );
  for ( uint32_t e : h.edges )
    t.set_bit( e, true );
  mobius_transform_inplace( t );
  return t;
}

} // namespace minorlab
