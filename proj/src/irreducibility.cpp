#include "minorlab/irreducibility.hpp"

#include "minorlab/isomorphism.hpp"
#include "minorlab/minor_order.hpp"
#include "minorlab/quotient.hpp"
#include "minorlab/zhegalkin.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorlab
{

int pair_partition::class_of( const var_pair& p ) const
{
  for ( size_t c = 0; c < classes.size(); ++c )
  {
    if ( std::binary_search( classes[c].begin(), classes[c].end(), p ) )
      return static_cast<int>( c );
  }
  throw std::out_of_range( "pair_partition: unknown pair" );
}

int pair_partition::drop_of( const var_pair& p ) const
{
  const auto it = std::lower_bound( pairs.begin(), pairs.end(), p );
  if ( it == pairs.end() || !( *it == p ) )
    throw std::out_of_range( "pair_partition: unknown pair" );
  return drops[it - pairs.begin()];
}

namespace
{

std::vector<var_pair> pairs_of( const std::vector<int>& vars )
{
  std::vector<var_pair> ps;
  for ( size_t a = 0; a < vars.size(); ++a )
  {
    for ( size_t b = a + 1; b < vars.size(); ++b )
      ps.push_back( var_pair{ vars[a], vars[b] } );
  }
  return ps;
}

/* groups pairs by an equivalence decided lazily against representatives */
template<typename Key, typename Same>
pair_partition group_pairs( const std::vector<var_pair>& pairs,
                            const std::vector<int>& drops,
                            const std::vector<Key>& keys, Same&& same )
{
  pair_partition pp;
  pp.pairs = pairs;
  pp.drops = drops;
  std::vector<size_t> reps; /* index of each class representative */
  for ( size_t p = 0; p < pairs.size(); ++p )
  {
    bool placed = false;
    for ( size_t c = 0; c < reps.size(); ++c )
    {
      if ( drops[reps[c]] == drops[p] && same( keys[reps[c]], keys[p] ) )
      {
        pp.classes[c].push_back( pairs[p] );
        placed = true;
        break;
      }
    }
    if ( !placed )
    {
      reps.push_back( p );
      pp.classes.push_back( { pairs[p] } );
    }
  }
  for ( auto& cls : pp.classes )
    std::sort( cls.begin(), cls.end() );
  return pp;
}

cover_report report_from_partition( const pair_partition& pp,
                                    const std::vector<truth_table>& class_reps, int ess )
{
  cover_report r;
  r.ess = ess;
  r.gap = *std::min_element( pp.drops.begin(), pp.drops.end() );
  if ( r.gap != 1 && r.gap != 2 )
    throw std::logic_error( "cover_report: arity gap outside {1,2}" );

  for ( size_t p = 0; p < pp.pairs.size(); ++p )
  {
    if ( pp.drops[p] == r.gap )
      r.c_f.push_back( pp.pairs[p] );
  }
  std::sort( r.c_f.begin(), r.c_f.end() );

  /* Every pair of C_f must drop by exactly the gap; with gap two that is the
     whole pair set. */
  if ( r.gap == 2 &&
       r.c_f.size() != pp.pairs.size() )
    throw std::logic_error( "cover_report: gap two but C_f is not the full pair set" );

  std::vector<int> cf_classes;
  for ( size_t c = 0; c < pp.classes.size(); ++c )
  {
    if ( pp.drop_of( pp.classes[c].front() ) == r.gap )
      cf_classes.push_back( static_cast<int>( c ) );
  }
  for ( int c : cf_classes )
    r.lower_cover_classes.push_back( class_reps[c] );
  r.join_irreducible = cf_classes.size() == 1;

  if ( !r.join_irreducible )
  {
    const int first_class = pp.class_of( r.c_f.front() );
    for ( const auto& p : r.c_f )
    {
      if ( pp.class_of( p ) != first_class )
      {
        r.witness = std::make_pair( r.c_f.front(), p );
        break;
      }
    }
  }
  return r;
}

struct hyper_pair_data
{
  pair_partition partition;
  std::vector<hypergraph> class_keys; /* reduced contraction per class */
};

hyper_pair_data hyper_pairs_impl( const hypergraph& h )
{
  const auto vars = hypergraph::vertices_of( h.covered_mask() );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "hypergraph pair classes: fewer than 2 active vertices" );
  const int ess = static_cast<int>( vars.size() );

  const auto pairs = pairs_of( vars );
  std::vector<int> drops;
  std::vector<hypergraph> keys;
  for ( const auto& p : pairs )
  {
    const hypergraph contracted = reduced( contract_pair( h, p.i, p.j ).hg );
    drops.push_back( ess - contracted.n_vertices );
    keys.push_back( contracted );
  }

  hyper_pair_data data;
  data.partition = group_pairs( pairs, drops, keys,
                                []( const hypergraph& a, const hypergraph& b ) {
                                  return isomorphic( a, b );
                                } );
  for ( const auto& cls : data.partition.classes )
    data.class_keys.push_back( keys[std::lower_bound( pairs.begin(), pairs.end(),
                                                      cls.front() ) -
                                    pairs.begin()] );
  return data;
}

} // namespace

int gap( const truth_table& f )
{
  const auto vars = essential_vars( f );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "gap: undefined below two essential variables" );
  int best = f.arity() + 1;
  const int ess = static_cast<int>( vars.size() );
  for ( const auto& p : pairs_of( vars ) )
    best = std::min( best, ess - essential_arity( identify( f, p.i, p.j ) ) );
  if ( best != 1 && best != 2 )
    throw std::logic_error( "gap: value outside {1,2}" );
  return best;
}

pair_partition pair_classes( const truth_table& f )
{
  const auto vars = essential_vars( f );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "pair_classes: fewer than 2 essential variables" );

  if ( vars.size() > canonical_ess_cap )
    return hyper_pair_classes( zhegalkin( f ) );

  const int ess = static_cast<int>( vars.size() );
  const auto pairs = pairs_of( vars );
  std::vector<int> drops;
  std::vector<truth_table> keys;
  for ( const auto& p : pairs )
  {
    const truth_table t = canonical( identify( f, p.i, p.j ) ).table;
    drops.push_back( ess - t.arity() );
    keys.push_back( t );
  }
  return group_pairs( pairs, drops, keys,
                      []( const truth_table& a, const truth_table& b ) { return a == b; } );
}

cover_report make_cover_report( const truth_table& f )
{
  const auto vars = essential_vars( f );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "cover_report: fewer than 2 essential variables" );
  if ( vars.size() > canonical_ess_cap )
    return make_cover_report_h( zhegalkin( f ) );

  const auto pp = pair_classes( f );
  std::vector<truth_table> reps;
  for ( const auto& cls : pp.classes )
    reps.push_back( canonical( identify( f, cls.front().i, cls.front().j ) ).table );
  return report_from_partition( pp, reps, static_cast<int>( vars.size() ) );
}

std::optional<gap2_shape> gap2_classify( const truth_table& f )
{
  const int ess = essential_arity( f );
  if ( ess < 2 )
    throw std::invalid_argument( "gap2_classify: fewer than 2 essential variables" );

  const hypergraph h = reduced( zhegalkin( f ) );
  const bool c = h.has_edge( 0 );
  std::vector<uint32_t> monomials;
  for ( uint32_t e : h.edges )
  {
    if ( e != 0 )
      monomials.push_back( e );
  }

  std::optional<gap2_shape> shape;
  const auto all_singletons = std::all_of( monomials.begin(), monomials.end(),
                                           []( uint32_t e ) { return std::popcount( e ) == 1; } );
  if ( all_singletons && static_cast<int>( monomials.size() ) == ess && ess >= 2 )
  {
    shape = gap2_shape{ 1, ess, c };
  }
  else if ( ess == 2 && monomials.size() == 2 )
  {
    /* x1 x2 + x1 (+ c), up to permutation */
    const bool pair_and_singleton =
        std::popcount( monomials[0] ) + std::popcount( monomials[1] ) == 3;
    if ( pair_and_singleton )
      shape = gap2_shape{ 2, 0, c };
  }
  else if ( ess == 3 )
  {
    std::vector<uint32_t> singles, doubles;
    for ( uint32_t e : monomials )
    {
      if ( std::popcount( e ) == 1 )
        singles.push_back( e );
      else if ( std::popcount( e ) == 2 )
        doubles.push_back( e );
      else
        doubles.push_back( 0 ); /* poison: a larger monomial rules both cases out */
    }
    const bool triangle = doubles.size() == 3 &&
                          std::all_of( doubles.begin(), doubles.end(),
                                       []( uint32_t e ) { return e != 0; } ) &&
                          ( doubles[0] | doubles[1] | doubles[2] ) == 0x7u;
    if ( triangle && singles.empty() && monomials.size() == 3 )
      shape = gap2_shape{ 3, 0, c };
    else if ( triangle && singles.size() == 2 && monomials.size() == 5 )
      shape = gap2_shape{ 4, 0, c };
  }

  /* consistency: a shape is matched exactly when the gap is two */
  if ( shape.has_value() != ( gap( f ) == 2 ) )
    throw std::logic_error( "gap2_classify: shape recognition disagrees with gap" );
  return shape;
}

bool brute_force_ji( const truth_table& f )
{
  const int ess = essential_arity( f );
  if ( ess < 2 )
    throw std::invalid_argument( "brute_force_ji: undefined below two essential variables" );
  if ( ess > 6 )
    throw std::invalid_argument( "brute_force_ji: essential arity cap 6 exceeded" );
  return lower_covers( f ).size() == 1;
}

std::vector<var_pair> dh_set( const hypergraph& h )
{
  const uint32_t active = h.covered_mask();
  const auto vars = hypergraph::vertices_of( active );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "dh_set: fewer than 2 active vertices" );

  std::vector<var_pair> dh;
  for ( const auto& p : pairs_of( vars ) )
  {
    const auto contracted = contract_pair( h, p.i, p.j );
    const int drop = static_cast<int>( vars.size() ) -
                     std::popcount( contracted.hg.covered_mask() );
    if ( drop == 1 )
      dh.push_back( p );
  }
  return dh;
}

pair_partition hyper_pair_classes( const hypergraph& h )
{
  return hyper_pairs_impl( h ).partition;
}

cover_report make_cover_report_h( const hypergraph& h )
{
  const auto data = hyper_pairs_impl( h );
  std::vector<truth_table> reps;
  for ( const auto& key : data.class_keys )
    reps.push_back( function_of( key ) );
  return report_from_partition( data.partition, reps,
                                std::popcount( h.covered_mask() ) );
}

bool is_join_irreducible_h( const hypergraph& h )
{
  const auto vars = hypergraph::vertices_of( h.covered_mask() );
  if ( vars.size() < 2 )
    throw std::invalid_argument( "is_join_irreducible_h: trivial hypergraph" );

  const auto data = hyper_pairs_impl( h );
  const auto& pp = data.partition;

  std::vector<var_pair> dh;
  for ( size_t p = 0; p < pp.pairs.size(); ++p )
  {
    if ( pp.drops[p] == 1 )
      dh.push_back( pp.pairs[p] );
  }
  if ( !dh.empty() )
  {
    /* gap one: join-irreducible iff D_H is a single equivalence class */
    const int cls = pp.class_of( dh.front() );
    return std::all_of( dh.begin(), dh.end(),
                        [&]( const var_pair& p ) { return pp.class_of( p ) == cls; } );
  }

  /* no drop-1 pair: the function must be one of the gap-two shapes */
  return gap2_classify( function_of( reduced( h ) ) ).has_value();
}

} // namespace minorlab
