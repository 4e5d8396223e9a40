#include "minorlab/catalog.hpp"

#include "minorlab/irreducibility.hpp"
#include "minorlab/minor_order.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace minorlab
{

namespace
{

uint32_t pack( const canonical_form& c )
{
  return ( uint32_t( c.ess() ) << 16 ) | uint32_t( c.table.words()[0] );
}

} // namespace

int function_catalog::id_of( const truth_table& canonical_table ) const
{
  const uint32_t key = ( uint32_t( canonical_table.arity() ) << 16 ) |
                       uint32_t( canonical_table.words()[0] );
  int lo = 0, hi = static_cast<int>( entries.size() ) - 1;
  while ( lo <= hi )
  {
    const int mid = ( lo + hi ) / 2;
    const uint32_t k = pack( entries[mid].repr );
    if ( k == key )
      return mid;
    if ( k < key )
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

function_catalog enumerate_functions( int max_arity, int jobs )
{
  if ( max_arity < 0 || max_arity > 4 )
    throw std::invalid_argument( "enumerate_functions: max arity cap 4 exceeded" );
  jobs = std::max( 1, jobs );

  const uint64_t total = uint64_t( 1 ) << ( 1u << max_arity );
  const int workers = static_cast<int>( std::min<uint64_t>( jobs, total ) );

  /* fixed index-range partitioning; the merged key set is order-independent */
  std::vector<std::vector<uint32_t>> results( workers );
  {
    std::vector<std::thread> pool;
    for ( int w = 0; w < workers; ++w )
    {
      pool.emplace_back( [&, w] {
        const uint64_t lo = total * w / workers;
        const uint64_t hi = total * ( w + 1 ) / workers;
        std::vector<uint32_t>& keys = results[w];
        for ( uint64_t value = lo; value < hi; ++value )
        {
          keys.push_back( pack( canonical( truth_table::from_value( max_arity, value ) ) ) );
        }
        std::sort( keys.begin(), keys.end() );
        keys.erase( std::unique( keys.begin(), keys.end() ), keys.end() );
      } );
    }
    for ( auto& t : pool )
      t.join();
  }

  std::vector<uint32_t> keys;
  for ( const auto& part : results )
    keys.insert( keys.end(), part.begin(), part.end() );
  std::sort( keys.begin(), keys.end() );
  keys.erase( std::unique( keys.begin(), keys.end() ), keys.end() );

  function_catalog cat;
  cat.max_arity = max_arity;
  cat.entries.reserve( keys.size() );
  for ( size_t i = 0; i < keys.size(); ++i )
  {
    catalog_entry e;
    e.class_id = static_cast<int>( i );
    e.ess = static_cast<int>( keys[i] >> 16 );
    e.repr = canonical_form{ truth_table::from_value( e.ess, keys[i] & 0xffffu ) };
    cat.entries.push_back( std::move( e ) );
  }

  for ( auto& e : cat.entries )
  {
    if ( e.ess < 2 )
      continue;
    const auto report = make_cover_report( e.repr.table );
    e.gap = report.gap;
    e.join_irreducible = report.join_irreducible;
    for ( const auto& cover : report.lower_cover_classes )
    {
      const int id = cat.id_of( canonical( cover ).table );
      if ( id < 0 )
        throw std::logic_error( "enumerate_functions: cover class missing from catalog" );
      e.cover_class_ids.push_back( id );
    }
    std::sort( e.cover_class_ids.begin(), e.cover_class_ids.end() );
  }
  return cat;
}

void compute_levels( function_catalog& cat )
{
  const int n = static_cast<int>( cat.entries.size() );

  /* strict minors as class ids */
  std::vector<std::vector<int>> minors( n );
  for ( int i = 0; i < n; ++i )
  {
    for ( const auto& m : strict_minor_closure( cat.entries[i].repr.table ) )
    {
      const int id = cat.id_of( m.table );
      if ( id < 0 )
        throw std::logic_error( "compute_levels: minor class missing from catalog" );
      minors[i].push_back( id );
    }
  }

  std::vector<bool> remaining( n, true );
  int assigned = 0, level = 0;
  while ( assigned < n )
  {
    std::vector<int> minimal;
    for ( int i = 0; i < n; ++i )
    {
      if ( !remaining[i] )
        continue;
      const bool has_lower = std::any_of( minors[i].begin(), minors[i].end(),
                                          [&]( int m ) { return remaining[m]; } );
      if ( !has_lower )
        minimal.push_back( i );
    }
    if ( minimal.empty() )
      throw std::logic_error( "compute_levels: no minimal element found" );
    for ( int i : minimal )
    {
      cat.entries[i].level = level;
      remaining[i] = false;
    }
    assigned += static_cast<int>( minimal.size() );
    ++level;
  }
  cat.n_levels = level;
}

std::string function_catalog::to_text() const
{
  std::ostringstream os;
  os << "# minor-lab catalog\n";
  os << "# max_arity " << max_arity << "\n";
  os << "# class_id\tess\ttable\tgap\tjoin_irreducible\tlevel\tcovers\n";
  for ( const auto& e : entries )
  {
    os << e.class_id << "\t" << e.ess << "\t" << e.repr.table.to_hex() << "\t";
    if ( e.gap )
      os << *e.gap;
    else
      os << "-";
    os << "\t";
    if ( e.join_irreducible )
      os << ( *e.join_irreducible ? "1" : "0" );
    else
      os << "-";
    os << "\t" << e.level << "\t";
    if ( e.cover_class_ids.empty() )
      os << "-";
    else
    {
      for ( size_t i = 0; i < e.cover_class_ids.size(); ++i )
        os << ( i ? "," : "" ) << e.cover_class_ids[i];
    }
    os << "\n";
  }
  return os.str();
}

} // namespace minorlab
