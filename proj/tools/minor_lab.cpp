/* minor-lab: classify Boolean functions, graphs and hypergraphs under the
   simple-minor order; run the theorem-verification suites. */

#include "minorlab/catalog.hpp"
#include "minorlab/graphs.hpp"
#include "minorlab/io.hpp"
#include "minorlab/irreducibility.hpp"
#include "minorlab/minor_order.hpp"
#include "minorlab/steiner.hpp"
#include "minorlab/suites.hpp"
#include "minorlab/zhegalkin.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{

using namespace minorlab;

void print_report_lines( std::ostream& os, const cover_report& r )
{
  os << "ess\t" << r.ess << "\n";
  os << "gap\t" << r.gap << "\n";
  os << "join_irreducible\t" << ( r.join_irreducible ? 1 : 0 ) << "\n";
  os << "n_cover_classes\t" << r.lower_cover_classes.size() << "\n";
  os << "cf_size\t" << r.c_f.size() << "\n";
  if ( r.witness )
  {
    os << "witness\t{" << r.witness->first.i << "," << r.witness->first.j << "}\t{"
       << r.witness->second.i << "," << r.witness->second.j << "}\n";
  }
}

void print_undefined_report( std::ostream& os, int ess )
{
  os << "ess\t" << ess << "\n";
  os << "gap\t-\n";
  os << "join_irreducible\t-\n";
  os << "n_cover_classes\t-\n";
  os << "cf_size\t-\n";
}

int classify_fn( const std::string& path )
{
  const auto functions = read_functions_file( path );
  if ( functions.empty() )
    throw std::runtime_error( "no `function` lines in " + path );
  for ( const auto& f : functions )
  {
    std::cout << "# " << to_function_line( f ) << "\n";
    if ( essential_arity( f ) < 2 )
      print_undefined_report( std::cout, essential_arity( f ) );
    else
      print_report_lines( std::cout, make_cover_report( f ) );
  }
  return 0;
}

int classify_hypergraph_cmd( const std::string& path )
{
  const hypergraph h = read_hypergraph_file( path );
  const int ess = static_cast<int>( hypergraph::vertices_of( h.covered_mask() ).size() );
  if ( ess < 2 )
  {
    print_undefined_report( std::cout, ess );
    return 0;
  }
  print_report_lines( std::cout, make_cover_report_h( h ) );
  std::cout << "dh_size\t" << dh_set( h ).size() << "\n";
  std::cout << "join_irreducible_h\t" << ( is_join_irreducible_h( h ) ? 1 : 0 ) << "\n";
  return 0;
}

int classify_graph_cmd( const std::string& path )
{
  const hypergraph g = read_hypergraph_file( path );
  require_graph( g );
  const auto verdict = classify_graph( g );
  std::cout << verdict.to_string() << "\n";
  return 0;
}

hypergraph steiner_input( const std::string& spec )
{
  for ( const auto& sys : builtin_systems() )
  {
    if ( sys.name == spec )
      return sys.hg;
  }
  if ( spec == "sts13-cyclic" || spec == "sts13-pasch" )
  {
    for ( const auto& sys : extended_systems() )
    {
      if ( sys.name == spec )
        return sys.hg;
    }
  }
  return read_hypergraph_file( spec );
}

int steiner_check( const std::string& spec )
{
  const auto report = make_steiner_report( steiner_input( spec ) );
  std::cout << "n\t" << report.n << "\n";
  std::cout << "k\t" << report.k << "\n";
  std::cout << "join_irreducible\t" << ( report.ji ? 1 : 0 ) << "\n";
  std::cout << "contraction_monomorphic\t" << ( report.contraction_mono ? 1 : 0 ) << "\n";
  std::cout << "minus2_monomorphic\t" << ( report.minus2_mono ? 1 : 0 ) << "\n";
  std::cout << "dh_size\t" << report.dh_size << "\n";
  std::cout << "pairs\t" << report.total_pairs << "\n";
  return 0;
}

int enumerate_cmd( int max_arity, const std::string& out, int jobs )
{
  function_catalog cat = enumerate_functions( max_arity, jobs );
  compute_levels( cat );
  const std::string text = cat.to_text();
  if ( out == "-" )
  {
    std::cout << text;
    return 0;
  }
  std::ofstream os( out );
  if ( !os )
    throw std::runtime_error( "cannot write " + out );
  os << text;
  std::cerr << cat.entries.size() << " classes, " << cat.n_levels << " levels -> " << out
            << "\n";
  return 0;
}

int verify_cmd( const std::string& name, const suite_options& opt )
{
  const auto result = run_suite( name, opt );
  std::cout << "suite\t" << result.name << "\n";
  if ( result.seeded )
    std::cout << "seed\t" << result.seed << "\n";
  std::cout << "checks\t" << result.checks << "\n";
  std::cout << "failures\t" << result.failures.size() << "\n";
  for ( const auto& f : result.failures )
    std::cout << "failure\t" << f.input << "\t" << f.message << "\n";
  return result.ok() ? 0 : 1;
}

int minor_test( const std::string& f_path, const std::string& g_path )
{
  const auto fs = read_functions_file( f_path );
  const auto gs = read_functions_file( g_path );
  if ( fs.empty() || gs.empty() )
    throw std::runtime_error( "each input needs one `function` line" );
  const truth_table& f = fs.front();
  const truth_table& g = gs.front();
  const bool g_le_f = is_minor( g, f );
  const bool f_le_g = is_minor( f, g );
  std::cout << "g<=f\t" << ( g_le_f ? 1 : 0 ) << "\n";
  std::cout << "f<=g\t" << ( f_le_g ? 1 : 0 ) << "\n";
  std::cout << "equivalent\t" << ( g_le_f && f_le_g ? 1 : 0 ) << "\n";
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "simple-minor order lab: Boolean functions, hypergraphs, graphs" };
  app.require_subcommand( 1 );

  suite_options opt;
  app.add_option( "--jobs", opt.jobs, "worker count for the catalog sweep" );
  app.add_option( "--seed", opt.seed, "seed for the sampled suites" );
  app.add_flag( "--extended", opt.extended, "include the 13-point triple systems" );

  std::string path, out = "-", second;
  int max_arity = 4;

  auto* classify = app.add_subcommand( "classify", "classify an input object" );
  classify->require_subcommand( 1 );
  auto* fn = classify->add_subcommand( "fn", "irreducibility report for functions" );
  fn->add_option( "file", path, "function file" )->required();
  auto* graph = classify->add_subcommand( "graph", "verdict for a graph" );
  graph->add_option( "file", path, "graph file (hypergraph format)" )->required();
  auto* hyper = classify->add_subcommand( "hypergraph", "irreducibility report for a hypergraph" );
  hyper->add_option( "file", path, "hypergraph file" )->required();

  auto* steiner = app.add_subcommand( "steiner", "Steiner system checks" );
  steiner->require_subcommand( 1 );
  auto* check = steiner->add_subcommand( "check", "three-way report for a system" );
  check->add_option( "system", path, "file or builtin: fano | ag9" )->required();

  auto* enumerate = app.add_subcommand( "enumerate", "write the function catalog" );
  enumerate->add_option( "--max-arity", max_arity, "enumerate up to this arity (<= 4)" );
  enumerate->add_option( "--out", out, "output path, - for stdout" );

  auto* verify = app.add_subcommand( "verify", "run a verification suite" );
  std::string suite;
  verify->add_option( "suite", suite, "salomaa | gap2 | lowercover | correspondence | "
                                      "graphs6 | loops5 | steiner | quasiorder" )
      ->required();

  auto* minor = app.add_subcommand( "minor", "minor-order queries" );
  minor->require_subcommand( 1 );
  auto* test = minor->add_subcommand( "test", "compare two functions" );
  test->add_option( "f-file", path, "the larger candidate" )->required();
  test->add_option( "g-file", second, "the smaller candidate" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : 2;
  }

  try
  {
    if ( fn->parsed() )
      return classify_fn( path );
    if ( graph->parsed() )
      return classify_graph_cmd( path );
    if ( hyper->parsed() )
      return classify_hypergraph_cmd( path );
    if ( check->parsed() )
      return steiner_check( path );
    if ( enumerate->parsed() )
      return enumerate_cmd( max_arity, out, opt.jobs );
    if ( verify->parsed() )
      return verify_cmd( suite, opt );
    if ( test->parsed() )
      return minor_test( path, second );
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::runtime_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
