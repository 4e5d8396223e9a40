#include "minorlab/minor_order.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace minorlab
{

namespace
{

using key_set = std::set<truth_table>;

struct closure_state
{
  std::mutex mutex;
  /* canonical table -> canonical tables of all strict minors */
  std::unordered_map<truth_table, key_set, truth_table_hash> memo;
};

closure_state& state()
{
  static closure_state s;
  return s;
}

/* canonical input required */
const key_set& closure_of( const truth_table& canon )
{
  {
    std::lock_guard<std::mutex> lock( state().mutex );
    auto it = state().memo.find( canon );
    if ( it != state().memo.end() )
      return it->second;
  }

  key_set minors;
  const int n = canon.arity();
  for ( int i = 1; i <= n; ++i )
  {
    for ( int j = i + 1; j <= n; ++j )
    {
      const truth_table child = canonical( identify( canon, i, j ) ).table;
      minors.insert( child );
      const auto& below = closure_of( child );
      minors.insert( below.begin(), below.end() );
    }
  }

  std::lock_guard<std::mutex> lock( state().mutex );
  return state().memo.emplace( canon, std::move( minors ) ).first->second;
}

} // namespace

std::vector<canonical_form> strict_minor_closure( const truth_table& f )
{
  const auto& set = closure_of( canonical( f ).table );
  std::vector<canonical_form> out;
  out.reserve( set.size() );
  for ( const auto& t : set )
    out.push_back( canonical_form{ t } );
  return out;
}

bool is_minor( const truth_table& g, const truth_table& f )
{
  const truth_table cg = canonical( g ).table;
  const truth_table cf = canonical( f ).table;
  if ( cg == cf )
    return true;
  if ( cg.arity() >= cf.arity() )
    return false;
  return closure_of( cf ).count( cg ) != 0;
}

bool is_minor_sigma( const truth_table& g, const truth_table& f )
{
  const truth_table cg = canonical( g ).table;
  const truth_table cf = canonical( f ).table;
  const int n = cf.arity();
  if ( cg == cf )
    return true;
  if ( cg.arity() >= n )
    return false; /* range of sigma bounds the essential arity */

  /* a witness exists with codomain exactly ess(g); pad constants to arity 1 */
  const int m = std::max( cg.arity(), 1 );
  truth_table target = cg;
  if ( target.arity() == 0 )
    target = truth_table::constant( 1, target.bit( 0 ) );

  std::vector<int> image( n, 1 );
  while ( true )
  {
    if ( apply_map( cf, var_map( image, m ) ) == target )
      return true;
    int pos = 0;
    while ( pos < n && image[pos] == m )
      image[pos++] = 1;
    if ( pos == n )
      return false;
    ++image[pos];
  }
}

std::vector<canonical_form> lower_covers( const truth_table& f )
{
  const auto minors = strict_minor_closure( f );
  std::vector<canonical_form> maximal;
  for ( const auto& c : minors )
  {
    bool dominated = false;
    for ( const auto& d : minors )
    {
      if ( d.table == c.table )
        continue;
      if ( closure_of( d.table ).count( c.table ) )
      {
        dominated = true;
        break;
      }
    }
    if ( !dominated )
      maximal.push_back( c );
  }
  return maximal;
}

} // namespace minorlab
