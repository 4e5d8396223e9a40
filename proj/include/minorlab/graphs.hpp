/*!
  \file graphs.hpp
  \brief Graph-specific structure: autonomous independent sets, property (P),
  join-irreducible graph recognizers (loopless and with loops), and labeled
  enumeration up to isomorphism.

  Graphs are hypergraphs whose edges have size 1 (loops) or 2.
*/

#pragma once

#include "minorlab/hypergraph.hpp"
#include "minorlab/irreducibility.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minorlab
{

bool is_graph( const hypergraph& h );
void require_graph( const hypergraph& h );
void require_loopless( const hypergraph& h );

/* the loopless part G^0 (loops removed, vertex set kept) */
hypergraph loopless_part( const hypergraph& g );

/* vertices carrying a loop */
std::vector<int> loop_vertices( const hypergraph& g );

/*! \brief The partition of a loopless graph into maximal autonomous
  independent sets, with the induced quotient graph. */
struct ai_decomposition
{
  std::vector<std::vector<int>> components; /* ordered by least member */
  hypergraph quotient;                      /* loopless graph on 1..#components */

  bool is_prime() const
  {
    for ( const auto& c : components )
    {
      if ( c.size() > 1 )
        return false;
    }
    return true;
  }
};

ai_decomposition ai_components( const hypergraph& g );

/*! \brief True iff every non-edge has a common neighbor of degree exactly 2. */
bool satisfies_property_p( const hypergraph& g );

enum class graph_shape
{
  disjoint_k3s,      /* (i)  disjoint union of n >= 2 triangles */
  c5,                /* (ii) the 5-cycle */
  k2_plus_empty,     /* (iii) K2 joined to an independent set of size m >= 2 */
  kn,                /* (iv) complete graph, n >= 2 */
  empty_plus_empty,  /* (v)  complete bipartite with parts n < m */
  join_of_empties,   /* (vi) join of r >= 2 independent sets of equal size n >= 2 */
  loop_variant,      /* a join-irreducible loop placement on one of the above */
  reducible
};

std::string shape_name( graph_shape s );

struct classification_verdict
{
  graph_shape shape = graph_shape::reducible;
  std::vector<int> params;          /* shape parameters in documented order */
  std::optional<graph_shape> base;  /* loop_variant: underlying loopless shape */
  int loop_count = 0;
  std::string loop_pattern;         /* loop placement summary */
  bool join_irreducible = false;
  std::optional<std::pair<var_pair, var_pair>> witness; /* when reducible */

  std::string to_string() const;
};

/*! \brief Matches a loopless graph against the six join-irreducible shapes;
  classification is applied to the graph with isolated vertices dropped. */
classification_verdict classify_loopless( const hypergraph& g );

/*! \brief Full verdict for a graph that may carry loops: dispatches on the
  loopless part and applies the per-shape loop placement conditions. */
classification_verdict classify_graph( const hypergraph& g );

/*! \brief One representative per isomorphism class of graphs on n labeled
  vertices, deduplicated by minimal adjacency bitmask over all vertex
  permutations, in deterministic order. */
std::vector<hypergraph> enumerate_graphs( int n, bool allow_loops );

/* small builders used by tests and suites */
hypergraph complete_graph( int n );
hypergraph cycle_graph( int n );
hypergraph path_graph( int n );
hypergraph complete_multipartite( const std::vector<int>& part_sizes );
hypergraph disjoint_triangles( int count );
hypergraph add_loops( const hypergraph& g, const std::vector<int>& vertices );

} // namespace minorlab
