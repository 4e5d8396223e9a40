#include "minorlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace minorlab
{

namespace
{

truth_table permute_vars( const truth_table& f, const std::vector<int>& perm )
{
  /* variable i of the result reads variable perm[i-1] of f's argument order */
  truth_table g( f.arity() );
  for ( uint32_t a = 0; a < g.num_bits(); ++a )
  {
    uint32_t b = 0;
    for ( int i = 0; i < f.arity(); ++i )
    {
      if ( ( a >> ( perm[i] - 1 ) ) & 1u )
        b |= 1u << i;
    }
    g.set_bit( a, f.bit( b ) );
  }
  return g;
}

truth_table min_over_permutations( const truth_table& f )
{
  std::vector<int> perm( f.arity() );
  for ( int i = 0; i < f.arity(); ++i )
    perm[i] = i + 1;
  truth_table best = f;
  while ( std::next_permutation( perm.begin(), perm.end() ) )
  {
    truth_table cand = permute_vars( f, perm );
    if ( cand < best )
      best = cand;
  }
  return best;
}

/* precomputed canonical keys for every 4-ary table: (ess << 16) | value */
const std::vector<uint32_t>& canon4_table()
{
  static std::vector<uint32_t> table;
  static std::once_flag flag;
  std::call_once( flag, [] {
    table.resize( 1u << 16 );
    for ( uint32_t t = 0; t < ( 1u << 16 ); ++t )
    {
      const truth_table f = truth_table::from_value( 4, t );
      const truth_table c = min_over_permutations( compact( f ) );
      table[t] = ( uint32_t( c.arity() ) << 16 ) | uint32_t( c.words()[0] );
    }
  } );
  return table;
}

uint64_t pad_to_4( const truth_table& f )
{
  /* replicate the 2^n-bit block to 16 bits (dummy variables) */
  uint64_t v = f.words()[0];
  for ( int k = f.arity(); k < 4; ++k )
    v |= v << ( 1u << k );
  return v;
}

struct cache_state
{
  std::mutex mutex;
  std::unordered_map<truth_table, canonical_form, truth_table_hash> memo;
};

cache_state& cache()
{
  static cache_state s;
  return s;
}

} // namespace

canonical_form canonical( const truth_table& f )
{
  if ( f.arity() <= 4 )
  {
    const uint32_t key = canon4_table()[pad_to_4( f ) & 0xffffu];
    return canonical_form{ truth_table::from_value( key >> 16, key & 0xffffu ) };
  }

  {
    std::lock_guard<std::mutex> lock( cache().mutex );
    auto it = cache().memo.find( f );
    if ( it != cache().memo.end() )
      return it->second;
  }

  truth_table c = compact( f );
  if ( c.arity() > canonical_ess_cap )
    throw std::invalid_argument( "canonical: essential arity exceeds permutation cap 8" );
  canonical_form result{ min_over_permutations( c ) };

  std::lock_guard<std::mutex> lock( cache().mutex );
  cache().memo.emplace( f, result );
  return result;
}

bool equivalent( const truth_table& f, const truth_table& g )
{
  return canonical( f ) == canonical( g );
}

} // namespace minorlab
