#include "minorlab/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace minorlab
{

namespace
{

/* per-vertex count of incident edges, stratified by edge size */
std::vector<std::vector<int>> size_degrees( const hypergraph& h )
{
  std::vector<std::vector<int>> deg( h.n_vertices,
                                     std::vector<int>( h.n_vertices + 1, 0 ) );
  for ( uint32_t e : h.edges )
  {
    const int size = std::popcount( e );
    for ( int v : hypergraph::vertices_of( e ) )
      ++deg[v - 1][size];
  }
  return deg;
}

bool same_edge_size_profile( const hypergraph& a, const hypergraph& b )
{
  if ( a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size() )
    return false;
  std::vector<int> sa, sb;
  for ( uint32_t e : a.edges )
    sa.push_back( std::popcount( e ) );
  for ( uint32_t e : b.edges )
    sb.push_back( std::popcount( e ) );
  std::sort( sa.begin(), sa.end() );
  std::sort( sb.begin(), sb.end() );
  return sa == sb;
}

struct search_context
{
  const hypergraph& a;
  const hypergraph& b;
  std::vector<std::vector<int>> deg_a, deg_b;
  std::vector<int> order;              /* a-vertices, most constrained first */
  std::vector<std::vector<uint32_t>> complete_at; /* a-edges fully mapped at step */
  std::vector<int> assignment;         /* a-vertex -> b-vertex, 0 = unset */
  std::vector<bool> used;
  /* optional pre-assignments (1-based, 0 = free) */
  std::vector<int> forced;

  search_context( const hypergraph& a_, const hypergraph& b_ )
      : a( a_ ), b( b_ ), deg_a( size_degrees( a_ ) ), deg_b( size_degrees( b_ ) ),
        assignment( a_.n_vertices, 0 ), used( b_.n_vertices + 1, false ),
        forced( a_.n_vertices, 0 )
  {
  }

  void prepare()
  {
    const int n = a.n_vertices;
    order.resize( n );
    for ( int i = 0; i < n; ++i )
      order[i] = i + 1;
    /* put forced vertices first, then descending total degree */
    std::stable_sort( order.begin(), order.end(), [&]( int u, int v ) {
      const bool fu = forced[u - 1] != 0, fv = forced[v - 1] != 0;
      if ( fu != fv )
        return fu;
      int du = 0, dv = 0;
      for ( int s = 0; s <= n; ++s )
      {
        du += deg_a[u - 1][s];
        dv += deg_a[v - 1][s];
      }
      return du > dv;
    } );

    /* for each step, the a-edges whose vertices are all assigned by then */
    std::vector<int> step_of( n + 1, 0 );
    for ( int s = 0; s < n; ++s )
      step_of[order[s]] = s;
    complete_at.assign( n, {} );
    for ( uint32_t e : a.edges )
    {
      if ( e == 0 )
        continue; /* the empty edge maps to itself; checked up front */
      int last = 0;
      for ( int v : hypergraph::vertices_of( e ) )
        last = std::max( last, step_of[v] );
      complete_at[last].push_back( e );
    }
  }

  uint32_t image_of( uint32_t edge ) const
  {
    uint32_t m = 0;
    for ( int v : hypergraph::vertices_of( edge ) )
      m |= 1u << ( assignment[v - 1] - 1 );
    return m;
  }

  /* enumerates isomorphisms; stops early once visit returns false */
  bool search( int step, const std::function<bool( const std::vector<int>& )>& visit )
  {
    const int n = a.n_vertices;
    if ( step == n )
      return visit( assignment );
    const int v = order[step];
    for ( int w = 1; w <= n; ++w )
    {
      if ( used[w] )
        continue;
      if ( forced[v - 1] != 0 && forced[v - 1] != w )
        continue;
      if ( deg_a[v - 1] != deg_b[w - 1] )
        continue;
      assignment[v - 1] = w;
      used[w] = true;
      bool consistent = true;
      for ( uint32_t e : complete_at[step] )
      {
        if ( !b.has_edge( image_of( e ) ) )
        {
          consistent = false;
          break;
        }
      }
      if ( consistent && !search( step + 1, visit ) )
        return false;
      assignment[v - 1] = 0;
      used[w] = false;
    }
    return true;
  }
};

bool enumerate_isomorphisms( const hypergraph& a, const hypergraph& b,
                             const std::vector<int>& forced,
                             const std::function<bool( const std::vector<int>& )>& visit )
{
  if ( a.n_vertices > isomorphism_vertex_cap || b.n_vertices > isomorphism_vertex_cap )
    throw std::invalid_argument( "isomorphism: vertex count exceeds cap 13" );
  if ( !same_edge_size_profile( a, b ) )
    return true;
  if ( a.has_edge( 0 ) != b.has_edge( 0 ) )
    return true;
  {
    /* degree-profile multisets must match */
    auto da = size_degrees( a ), db = size_degrees( b );
    std::sort( da.begin(), da.end() );
    std::sort( db.begin(), db.end() );
    if ( da != db )
      return true;
  }

  search_context ctx( a, b );
  if ( !forced.empty() )
    ctx.forced = forced;
  ctx.prepare();
  return ctx.search( 0, visit );
}

} // namespace

bool is_isomorphism( const std::vector<int>& map, const hypergraph& a, const hypergraph& b )
{
  if ( a.n_vertices != b.n_vertices ||
       static_cast<int>( map.size() ) != a.n_vertices ||
       a.edges.size() != b.edges.size() )
    return false;
  std::vector<bool> hit( a.n_vertices + 1, false );
  for ( int w : map )
  {
    if ( w < 1 || w > a.n_vertices || hit[w] )
      return false;
    hit[w] = true;
  }
  for ( uint32_t e : a.edges )
  {
    uint32_t m = 0;
    for ( int v : hypergraph::vertices_of( e ) )
      m |= 1u << ( map[v - 1] - 1 );
    if ( !b.has_edge( m ) )
      return false;
  }
  return true;
}

std::optional<std::vector<int>> find_isomorphism( const hypergraph& a, const hypergraph& b )
{
  std::optional<std::vector<int>> found;
  enumerate_isomorphisms( a, b, {}, [&]( const std::vector<int>& map ) {
    found = map;
    return false;
  } );
  return found;
}

std::vector<std::vector<int>> all_isomorphisms( const hypergraph& a, const hypergraph& b )
{
  std::vector<std::vector<int>> out;
  enumerate_isomorphisms( a, b, {}, [&]( const std::vector<int>& map ) {
    out.push_back( map );
    return true;
  } );
  return out;
}

std::vector<std::vector<int>> automorphisms( const hypergraph& h )
{
  if ( h.n_vertices > 9 )
    throw std::invalid_argument( "automorphisms: materialization capped at 9 vertices" );
  return all_isomorphisms( h, h );
}

bool is_2set_transitive( const hypergraph& h )
{
  const int n = h.n_vertices;
  if ( n < 2 )
    return true;

  /* pair ids */
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_id( n + 1, std::vector<int>( n + 1, -1 ) );
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      pair_id[i][j] = static_cast<int>( pairs.size() );
      pairs.emplace_back( i, j );
    }
  }
  std::vector<bool> reachable( pairs.size(), false );
  reachable[0] = true; /* base pair {1,2} */

  const auto absorb = [&]( const std::vector<int>& phi ) {
    /* orbit of the base pair grows by every known automorphism image */
    for ( size_t p = 0; p < pairs.size(); ++p )
    {
      if ( !reachable[p] )
        continue;
      int a = phi[pairs[p].first - 1], b = phi[pairs[p].second - 1];
      if ( a > b )
        std::swap( a, b );
      reachable[pair_id[a][b]] = true;
    }
  };

  if ( n <= 9 )
  {
    /* with the whole group in hand, the orbit of the base pair is one pass */
    for ( const auto& phi : automorphisms( h ) )
      absorb( phi );
    return std::all_of( reachable.begin(), reachable.end(), []( bool r ) { return r; } );
  }

  /* larger instances: constrained searches seeded with found automorphisms */
  for ( size_t target = 0; target < pairs.size(); ++target )
  {
    if ( reachable[target] )
      continue;
    const auto [i2, j2] = pairs[target];
    bool hit = false;
    for ( int flip = 0; flip < 2 && !hit; ++flip )
    {
      std::vector<int> forced( n, 0 );
      forced[0] = flip ? j2 : i2;
      forced[1] = flip ? i2 : j2;
      enumerate_isomorphisms( h, h, forced, [&]( const std::vector<int>& phi ) {
        absorb( phi );
        hit = true;
        return false;
      } );
    }
    if ( !hit )
      return false;
  }
  return true;
}

} // namespace minorlab
