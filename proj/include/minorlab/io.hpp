/*!
  \file io.hpp
  \brief Text formats: `function <n> <hex>` lines and `hypergraph <n>` blocks
  with one edge per line (`empty` for the empty edge, `#` comments).
*/

#pragma once

#include "minorlab/hypergraph.hpp"
#include "minorlab/truth_table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace minorlab
{

std::string to_function_line( const truth_table& f );
truth_table parse_function_line( const std::string& line );

/* every `function` line in the stream, comments and blank lines skipped */
std::vector<truth_table> read_functions( std::istream& in );
std::vector<truth_table> read_functions_file( const std::string& path );

std::string to_hypergraph_text( const hypergraph& h );
hypergraph read_hypergraph( std::istream& in );
hypergraph read_hypergraph_file( const std::string& path );

/* single-line rendering used in failure reports */
std::string hypergraph_repro( const hypergraph& h );

} // namespace minorlab
