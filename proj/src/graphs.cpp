#include "minorlab/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minorlab
{

namespace
{

std::vector<uint32_t> adjacency_masks( const hypergraph& g )
{
  std::vector<uint32_t> adj( g.n_vertices + 1, 0 );
  for ( uint32_t e : g.edges )
  {
    if ( std::popcount( e ) != 2 )
      continue;
    const auto vs = hypergraph::vertices_of( e );
    adj[vs[0]] |= 1u << ( vs[1] - 1 );
    adj[vs[1]] |= 1u << ( vs[0] - 1 );
  }
  return adj;
}

std::vector<int> component_ids( const hypergraph& g )
{
  const auto adj = adjacency_masks( g );
  std::vector<int> comp( g.n_vertices + 1, 0 );
  int next = 0;
  for ( int v = 1; v <= g.n_vertices; ++v )
  {
    if ( comp[v] )
      continue;
    ++next;
    std::vector<int> stack{ v };
    comp[v] = next;
    while ( !stack.empty() )
    {
      const int u = stack.back();
      stack.pop_back();
      for ( int w : hypergraph::vertices_of( adj[u] ) )
      {
        if ( !comp[w] )
        {
          comp[w] = next;
          stack.push_back( w );
        }
      }
    }
  }
  return comp;
}

bool is_complete( const hypergraph& g )
{
  const auto adj = adjacency_masks( g );
  const uint32_t all = g.n_vertices == 0 ? 0 : ( 1u << g.n_vertices ) - 1;
  for ( int v = 1; v <= g.n_vertices; ++v )
  {
    if ( adj[v] != ( all & ~( 1u << ( v - 1 ) ) ) )
      return false;
  }
  return g.n_vertices >= 1;
}

bool is_cycle5( const hypergraph& g )
{
  if ( g.n_vertices != 5 || g.edges.size() != 5 )
    return false;
  const auto adj = adjacency_masks( g );
  for ( int v = 1; v <= 5; ++v )
  {
    if ( std::popcount( adj[v] ) != 2 )
      return false;
  }
  /* connected and 2-regular on 5 vertices: a single 5-cycle */
  const auto comp = component_ids( g );
  return std::all_of( comp.begin() + 1, comp.end(), []( int c ) { return c == 1; } );
}

bool is_triangle( const hypergraph& g, const std::vector<int>& vertices )
{
  if ( vertices.size() != 3 )
    return false;
  const auto adj = adjacency_masks( g );
  for ( int v : vertices )
  {
    uint32_t expect = 0;
    for ( int w : vertices )
    {
      if ( w != v )
        expect |= 1u << ( w - 1 );
    }
    if ( adj[v] != expect )
      return false;
  }
  return true;
}

/* structural shape of a reduced loopless graph, plus its ai parts */
struct loopless_shape
{
  graph_shape shape = graph_shape::reducible;
  std::vector<int> params;
  std::vector<std::vector<int>> parts; /* ai components when complete-multipartite */
};

loopless_shape analyze_loopless( const hypergraph& g )
{
  /* g: reduced, loopless, >= 2 vertices */
  loopless_shape out;
  const auto comp = component_ids( g );
  const int n_comps = *std::max_element( comp.begin() + 1, comp.end() );

  if ( n_comps >= 2 )
  {
    for ( int c = 1; c <= n_comps; ++c )
    {
      std::vector<int> members;
      for ( int v = 1; v <= g.n_vertices; ++v )
      {
        if ( comp[v] == c )
          members.push_back( v );
      }
      if ( !is_triangle( g, members ) )
        return out; /* reducible */
    }
    out.shape = graph_shape::disjoint_k3s;
    out.params = { n_comps };
    return out;
  }

  const auto dec = ai_components( g );
  if ( dec.is_prime() )
  {
    if ( is_cycle5( g ) )
    {
      out.shape = graph_shape::c5;
      return out;
    }
    if ( is_complete( g ) && g.n_vertices >= 2 )
    {
      out.shape = graph_shape::kn;
      out.params = { g.n_vertices };
      return out;
    }
    return out;
  }

  if ( !is_complete( dec.quotient ) )
    return out;

  std::vector<int> sizes;
  for ( const auto& part : dec.components )
    sizes.push_back( static_cast<int>( part.size() ) );
  std::vector<int> sorted_sizes = sizes;
  std::sort( sorted_sizes.begin(), sorted_sizes.end() );
  const int r = static_cast<int>( sizes.size() );

  if ( r == 2 )
  {
    out.parts = dec.components;
    if ( sorted_sizes[0] < sorted_sizes[1] )
    {
      out.shape = graph_shape::empty_plus_empty;
      out.params = { sorted_sizes[0], sorted_sizes[1] };
    }
    else
    {
      out.shape = graph_shape::join_of_empties;
      out.params = { 2, sorted_sizes[0] };
    }
    return out;
  }

  if ( r == 3 && sorted_sizes[0] == 1 && sorted_sizes[1] == 1 && sorted_sizes[2] >= 2 )
  {
    out.shape = graph_shape::k2_plus_empty;
    out.params = { sorted_sizes[2] };
    out.parts = dec.components;
    return out;
  }
  if ( sorted_sizes.front() == sorted_sizes.back() && sorted_sizes.front() >= 2 )
  {
    out.shape = graph_shape::join_of_empties;
    out.params = { r, sorted_sizes.front() };
    out.parts = dec.components;
    return out;
  }
  return out;
}

void attach_witness( classification_verdict& v, const hypergraph& g )
{
  if ( std::popcount( g.covered_mask() ) >= 2 )
  {
    const auto report = make_cover_report_h( g );
    v.witness = report.witness;
  }
}

classification_verdict reducible_verdict( const hypergraph& g )
{
  classification_verdict v;
  v.shape = graph_shape::reducible;
  v.join_irreducible = false;
  attach_witness( v, g );
  return v;
}

} // namespace

bool is_graph( const hypergraph& h )
{
  return std::all_of( h.edges.begin(), h.edges.end(), []( uint32_t e ) {
    const int s = std::popcount( e );
    return s == 1 || s == 2;
  } );
}

void require_graph( const hypergraph& h )
{
  if ( !is_graph( h ) )
    throw std::invalid_argument( "expected a graph: edges must have size 1 or 2" );
}

void require_loopless( const hypergraph& h )
{
  require_graph( h );
  for ( uint32_t e : h.edges )
  {
    if ( std::popcount( e ) == 1 )
      throw std::invalid_argument( "expected a loopless graph" );
  }
}

hypergraph loopless_part( const hypergraph& g )
{
  require_graph( g );
  std::vector<uint32_t> edges;
  for ( uint32_t e : g.edges )
  {
    if ( std::popcount( e ) == 2 )
      edges.push_back( e );
  }
  return hypergraph( g.n_vertices, std::move( edges ) );
}

std::vector<int> loop_vertices( const hypergraph& g )
{
  require_graph( g );
  std::vector<int> vs;
  for ( uint32_t e : g.edges )
  {
    if ( std::popcount( e ) == 1 )
      vs.push_back( hypergraph::vertices_of( e )[0] );
  }
  return vs;
}

ai_decomposition ai_components( const hypergraph& g )
{
  require_loopless( g );
  const auto adj = adjacency_masks( g );

  /* an ai-set is a set of vertices with pairwise equal open neighborhoods;
     equal neighborhoods already force non-adjacency in a loopless graph */
  std::map<uint32_t, std::vector<int>> by_neighborhood;
  std::vector<int> order; /* least member per class, in first-seen order */
  for ( int v = 1; v <= g.n_vertices; ++v )
  {
    auto& cls = by_neighborhood[adj[v]];
    if ( cls.empty() )
      order.push_back( v );
    cls.push_back( v );
  }
  std::sort( order.begin(), order.end() );

  ai_decomposition dec;
  std::vector<int> class_of( g.n_vertices + 1, 0 );
  for ( int least : order )
  {
    const auto& cls = by_neighborhood[adj[least]];
    for ( int v : cls )
      class_of[v] = static_cast<int>( dec.components.size() ) + 1;
    dec.components.push_back( cls );
  }

  std::set<uint32_t> qedges;
  for ( uint32_t e : g.edges )
  {
    const auto vs = hypergraph::vertices_of( e );
    const int a = class_of[vs[0]], b = class_of[vs[1]];
    if ( a != b )
      qedges.insert( ( 1u << ( a - 1 ) ) | ( 1u << ( b - 1 ) ) );
  }
  dec.quotient = hypergraph( static_cast<int>( dec.components.size() ),
                             std::vector<uint32_t>( qedges.begin(), qedges.end() ) );
  return dec;
}

bool satisfies_property_p( const hypergraph& g )
{
  require_loopless( g );
  const auto adj = adjacency_masks( g );
  for ( int i = 1; i <= g.n_vertices; ++i )
  {
    for ( int j = i + 1; j <= g.n_vertices; ++j )
    {
      if ( adj[i] & ( 1u << ( j - 1 ) ) )
        continue;
      bool witness = false;
      for ( int k : hypergraph::vertices_of( adj[i] & adj[j] ) )
      {
        if ( std::popcount( adj[k] ) == 2 )
        {
          witness = true;
          break;
        }
      }
      if ( !witness )
        return false;
    }
  }
  return true;
}

std::string shape_name( graph_shape s )
{
  switch ( s )
  {
  case graph_shape::disjoint_k3s: return "DisjointK3s";
  case graph_shape::c5: return "C5";
  case graph_shape::k2_plus_empty: return "K2PlusEmpty";
  case graph_shape::kn: return "Kn";
  case graph_shape::empty_plus_empty: return "EmptyPlusEmpty";
  case graph_shape::join_of_empties: return "JoinOfEmpties";
  case graph_shape::loop_variant: return "LoopVariant";
  case graph_shape::reducible: return "Reducible";
  }
  return "?";
}

std::string classification_verdict::to_string() const
{
  std::ostringstream os;
  os << shape_name( shape );
  if ( base )
    os << "(" << shape_name( *base ) << ")";
  if ( !params.empty() )
  {
    os << "[";
    for ( size_t i = 0; i < params.size(); ++i )
      os << ( i ? "," : "" ) << params[i];
    os << "]";
  }
  if ( loop_count > 0 )
    os << " loops=" << loop_count << " (" << loop_pattern << ")";
  os << ( join_irreducible ? " join-irreducible" : " reducible" );
  if ( witness )
  {
    os << " witness={" << witness->first.i << "," << witness->first.j << "}~{"
       << witness->second.i << "," << witness->second.j << "}";
  }
  return os.str();
}

classification_verdict classify_loopless( const hypergraph& g )
{
  require_loopless( g );
  const hypergraph r = reduced( g );
  if ( r.n_vertices < 2 )
    throw std::invalid_argument( "classify_loopless: fewer than 2 active vertices" );

  const auto info = analyze_loopless( r );
  classification_verdict v;
  v.shape = info.shape;
  v.params = info.params;
  v.join_irreducible = info.shape != graph_shape::reducible;
  if ( !v.join_irreducible )
    attach_witness( v, g );
  return v;
}

classification_verdict classify_graph( const hypergraph& g )
{
  require_graph( g );
  const hypergraph r = reduced( g );

  if ( r.n_vertices < 2 )
  {
    /* below two active vertices there is no lower-cover structure */
    classification_verdict v;
    v.shape = graph_shape::reducible;
    v.join_irreducible = false;
    return v;
  }

  const auto loops = loop_vertices( r );
  if ( loops.empty() )
    return classify_loopless( g );

  classification_verdict v;
  v.shape = graph_shape::loop_variant;
  v.loop_count = static_cast<int>( loops.size() );

  const auto comp = component_ids( r );
  int n_comps = *std::max_element( comp.begin() + 1, comp.end() );

  if ( n_comps >= 2 )
  {
    /* disconnected: only loops plus at most one loopless triangle survive */
    int loop_comps = 0, triangles = 0, others = 0;
    const auto loop_set = [&]( int vtx ) {
      return std::find( loops.begin(), loops.end(), vtx ) != loops.end();
    };
    for ( int c = 1; c <= n_comps; ++c )
    {
      std::vector<int> members;
      for ( int vtx = 1; vtx <= r.n_vertices; ++vtx )
      {
        if ( comp[vtx] == c )
          members.push_back( vtx );
      }
      if ( members.size() == 1 && loop_set( members[0] ) )
        ++loop_comps;
      else if ( is_triangle( r, members ) &&
                std::none_of( members.begin(), members.end(), loop_set ) )
        ++triangles;
      else
        ++others;
    }
    const bool ji = others == 0 &&
                    ( ( triangles == 0 && loop_comps >= 2 ) ||
                      ( triangles == 1 && loop_comps >= 1 ) );
    if ( ji )
    {
      v.join_irreducible = true;
      v.params = { loop_comps };
      v.loop_pattern = triangles == 1 ? "isolated loops plus one triangle"
                                      : "disjoint loops";
      return v;
    }
    return reducible_verdict( g );
  }

  /* connected with at least one loop: dispatch on the loopless part */
  const hypergraph g0 = loopless_part( r );
  const auto info = analyze_loopless( g0 );
  if ( info.shape == graph_shape::reducible )
    return reducible_verdict( g );

  const auto loops_in = [&]( const std::vector<int>& part ) {
    int c = 0;
    for ( int vtx : part )
    {
      if ( std::find( loops.begin(), loops.end(), vtx ) != loops.end() )
        ++c;
    }
    return c;
  };

  bool ji = false;
  switch ( info.shape )
  {
  case graph_shape::c5:
    ji = false; /* any loop breaks the 5-cycle */
    v.loop_pattern = "loop on a 5-cycle";
    break;
  case graph_shape::kn:
  {
    const int n = info.params[0];
    const int cnt = v.loop_count;
    ji = cnt == 0 || cnt == 1 || cnt == n - 1 || cnt == n;
    v.loop_pattern = ji ? "0, 1, n-1 or n loops on a complete graph"
                        : "between 2 and n-2 loops on a complete graph";
    break;
  }
  case graph_shape::empty_plus_empty:
  case graph_shape::join_of_empties:
  {
    const int rparts = static_cast<int>( info.parts.size() );
    if ( info.shape == graph_shape::join_of_empties && rparts >= 3 )
    {
      /* three or more equal parts: loops must be absent or everywhere */
      ji = v.loop_count == 0 || v.loop_count == r.n_vertices;
      v.loop_pattern = ji ? "loops in every vertex" : "partially looped join";
    }
    else
    {
      /* two parts: each side independently unlooped or fully looped */
      ji = true;
      for ( const auto& part : info.parts )
      {
        const int c = loops_in( part );
        if ( c != 0 && c != static_cast<int>( part.size() ) )
          ji = false;
      }
      v.loop_pattern = ji ? "each side unlooped or fully looped"
                          : "a side with a partial loop set";
    }
    break;
  }
  case graph_shape::k2_plus_empty:
  {
    int k2_loops = 0, big_loops = 0, big_size = 0;
    for ( const auto& part : info.parts )
    {
      if ( part.size() == 1 )
        k2_loops += loops_in( part );
      else
      {
        big_loops = loops_in( part );
        big_size = static_cast<int>( part.size() );
      }
    }
    ji = ( ( k2_loops == 0 || k2_loops == 2 ) && big_loops == 0 ) ||
         ( k2_loops == 1 && big_loops == big_size );
    v.loop_pattern = ji ? "K2 0/2 loops with bare independents, or K2 one loop "
                          "with fully looped independents"
                        : "disallowed loop placement on K2 join";
    break;
  }
  default:
    ji = false;
    break;
  }

  if ( !ji )
    return reducible_verdict( g );
  v.base = info.shape;
  v.params = info.params;
  v.join_irreducible = true;
  return v;
}

std::vector<hypergraph> enumerate_graphs( int n, bool allow_loops )
{
  if ( n < 1 || n > ( allow_loops ? 5 : 6 ) )
    throw std::invalid_argument( "enumerate_graphs: vertex cap exceeded" );

  const int npairs = n * ( n - 1 ) / 2;
  const int nbits = npairs + ( allow_loops ? n : 0 );

  /* bit layout: pairs (1,2),(1,3),...,(n-1,n) then loops 1..n */
  std::vector<std::pair<int, int>> pair_at;
  std::vector<std::vector<int>> pair_bit( n + 1, std::vector<int>( n + 1, -1 ) );
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      pair_bit[i][j] = static_cast<int>( pair_at.size() );
      pair_at.emplace_back( i, j );
    }
  }

  std::vector<int> perm( n );
  std::iota( perm.begin(), perm.end(), 1 );
  std::vector<std::vector<int>> perms;
  do
  {
    perms.push_back( perm );
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  std::set<uint32_t> canonical_masks;
  for ( uint32_t mask = 0; mask < ( 1u << nbits ); ++mask )
  {
    uint32_t best = mask;
    for ( const auto& p : perms )
    {
      uint32_t img = 0;
      for ( int b = 0; b < npairs; ++b )
      {
        if ( mask & ( 1u << b ) )
        {
          int a = p[pair_at[b].first - 1], c = p[pair_at[b].second - 1];
          if ( a > c )
            std::swap( a, c );
          img |= 1u << pair_bit[a][c];
        }
      }
      for ( int vtx = 0; vtx < ( allow_loops ? n : 0 ); ++vtx )
      {
        if ( mask & ( 1u << ( npairs + vtx ) ) )
          img |= 1u << ( npairs + p[vtx] - 1 );
      }
      best = std::min( best, img );
    }
    canonical_masks.insert( best );
  }

  std::vector<hypergraph> out;
  for ( uint32_t mask : canonical_masks )
  {
    std::vector<uint32_t> edges;
    for ( int b = 0; b < npairs; ++b )
    {
      if ( mask & ( 1u << b ) )
        edges.push_back( ( 1u << ( pair_at[b].first - 1 ) ) |
                         ( 1u << ( pair_at[b].second - 1 ) ) );
    }
    for ( int vtx = 0; vtx < ( allow_loops ? n : 0 ); ++vtx )
    {
      if ( mask & ( 1u << ( npairs + vtx ) ) )
        edges.push_back( 1u << vtx );
    }
    out.emplace_back( n, std::move( edges ) );
  }
  return out;
}

hypergraph complete_graph( int n )
{
  std::vector<uint32_t> edges;
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
      edges.push_back( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
  }
  return hypergraph( n, std::move( edges ) );
}

hypergraph cycle_graph( int n )
{
  std::vector<uint32_t> edges;
  for ( int i = 1; i <= n; ++i )
  {
    const int j = i == n ? 1 : i + 1;
    edges.push_back( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
  }
  return hypergraph( n, std::move( edges ) );
}

hypergraph path_graph( int n )
{
  std::vector<uint32_t> edges;
  for ( int i = 1; i < n; ++i )
    edges.push_back( ( 1u << ( i - 1 ) ) | ( 1u << i ) );
  return hypergraph( n, std::move( edges ) );
}

hypergraph complete_multipartite( const std::vector<int>& part_sizes )
{
  const int n = std::accumulate( part_sizes.begin(), part_sizes.end(), 0 );
  std::vector<int> part_of;
  for ( size_t p = 0; p < part_sizes.size(); ++p )
  {
    for ( int k = 0; k < part_sizes[p]; ++k )
      part_of.push_back( static_cast<int>( p ) );
  }
  std::vector<uint32_t> edges;
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      if ( part_of[i - 1] != part_of[j - 1] )
        edges.push_back( ( 1u << ( i - 1 ) ) | ( 1u << ( j - 1 ) ) );
    }
  }
  return hypergraph( n, std::move( edges ) );
}

hypergraph disjoint_triangles( int count )
{
  std::vector<uint32_t> edges;
  for ( int t = 0; t < count; ++t )
  {
    const int base = 3 * t;
    edges.push_back( ( 1u << base ) | ( 1u << ( base + 1 ) ) );
    edges.push_back( ( 1u << base ) | ( 1u << ( base + 2 ) ) );
    edges.push_back( ( 1u << ( base + 1 ) ) | ( 1u << ( base + 2 ) ) );
  }
  return hypergraph( 3 * count, std::move( edges ) );
}

hypergraph add_loops( const hypergraph& g, const std::vector<int>& vertices )
{
  std::vector<uint32_t> edges = g.edges;
  for ( int v : vertices )
    edges.push_back( 1u << ( v - 1 ) );
  return hypergraph( g.n_vertices, std::move( edges ) );
}

} // namespace minorlab
