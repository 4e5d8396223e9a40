#include "minorlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minorlab
{

namespace
{

std::string strip_comment( const std::string& line )
{
  const auto pos = line.find( '#' );
  return pos == std::string::npos ? line : line.substr( 0, pos );
}

std::ifstream open_or_throw( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open file: " + path );
  return in;
}

} // namespace

std::string to_function_line( const truth_table& f )
{
  std::ostringstream os;
  os << "function " << f.arity() << " " << f.to_hex();
  return os.str();
}

truth_table parse_function_line( const std::string& line )
{
  std::istringstream is( strip_comment( line ) );
  std::string keyword, hex;
  int n;
  if ( !( is >> keyword >> n >> hex ) || keyword != "function" )
    throw std::runtime_error( "expected `function <n> <hex>`: " + line );
  if ( n < 0 || n > truth_table::max_arity )
    throw std::runtime_error( "function arity out of range 0..16" );
  return truth_table::from_hex( n, hex );
}

std::vector<truth_table> read_functions( std::istream& in )
{
  std::vector<truth_table> out;
  std::string line;
  while ( std::getline( in, line ) )
  {
    const std::string body = strip_comment( line );
    if ( body.find_first_not_of( " \t\r" ) == std::string::npos )
      continue;
    out.push_back( parse_function_line( body ) );
  }
  return out;
}

std::vector<truth_table> read_functions_file( const std::string& path )
{
  auto in = open_or_throw( path );
  return read_functions( in );
}

std::string to_hypergraph_text( const hypergraph& h )
{
  std::ostringstream os;
  os << "hypergraph " << h.n_vertices << "\n";
  for ( uint32_t e : h.edges )
  {
    if ( e == 0 )
    {
      os << "empty\n";
      continue;
    }
    bool first = true;
    for ( int v : hypergraph::vertices_of( e ) )
    {
      os << ( first ? "" : " " ) << v;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

hypergraph read_hypergraph( std::istream& in )
{
  std::string line;
  int n = -1;
  std::vector<uint32_t> edges;
  while ( std::getline( in, line ) )
  {
    const std::string body = strip_comment( line );
    if ( body.find_first_not_of( " \t\r" ) == std::string::npos )
      continue;
    std::istringstream is( body );
    if ( n < 0 )
    {
      std::string keyword;
      if ( !( is >> keyword >> n ) || keyword != "hypergraph" || n < 0 )
        throw std::runtime_error( "expected `hypergraph <n>`: " + line );
      continue;
    }
    std::string token;
    is >> token;
    if ( token == "empty" )
    {
      edges.push_back( 0 );
      continue;
    }
    std::vector<int> vs;
    std::istringstream vertices( body );
    int v;
    while ( vertices >> v )
    {
      if ( v < 1 || v > n )
        throw std::runtime_error( "edge vertex out of range: " + line );
      vs.push_back( v );
    }
    if ( !vertices.eof() )
      throw std::runtime_error( "malformed edge line: " + line );
    edges.push_back( hypergraph::mask_of( vs ) );
  }
  if ( n < 0 )
    throw std::runtime_error( "missing `hypergraph <n>` header" );
  return hypergraph( n, std::move( edges ) );
}

hypergraph read_hypergraph_file( const std::string& path )
{
  auto in = open_or_throw( path );
  return read_hypergraph( in );
}

std::string hypergraph_repro( const hypergraph& h )
{
  std::ostringstream os;
  os << "hypergraph " << h.n_vertices << ";";
  for ( uint32_t e : h.edges )
  {
    os << " ";
    if ( e == 0 )
    {
      os << "empty;";
      continue;
    }
    bool first = true;
    for ( int v : hypergraph::vertices_of( e ) )
    {
      os << ( first ? "" : " " ) << v;
      first = false;
    }
    os << ";";
  }
  return os.str();
}

} // namespace minorlab
