/*!
  \file isomorphism.hpp
  \brief Hypergraph isomorphism, automorphism enumeration and 2-set
  transitivity, by plain backtracking with edge-size-stratified degree
  pruning.
*/

#pragma once

#include "minorlab/hypergraph.hpp"

#include <optional>
#include <vector>

namespace minorlab
{

static constexpr int isomorphism_vertex_cap = 13;

/*! \brief A witnessing bijection from a to b (map[v-1] = image of vertex v),
  or nullopt. */
std::optional<std::vector<int>> find_isomorphism( const hypergraph& a, const hypergraph& b );

bool is_isomorphism( const std::vector<int>& map, const hypergraph& a, const hypergraph& b );

inline bool isomorphic( const hypergraph& a, const hypergraph& b )
{
  return find_isomorphism( a, b ).has_value();
}

/*! \brief All isomorphisms from a onto b. */
std::vector<std::vector<int>> all_isomorphisms( const hypergraph& a, const hypergraph& b );

/*! \brief All automorphisms of h, materialized (vertex count <= 9). */
std::vector<std::vector<int>> automorphisms( const hypergraph& h );

/*! \brief True iff for every two vertex pairs e, e' some automorphism maps e
  onto e'.

  Automorphisms are materialized for <= 9 vertices; above that the orbit of a
  base pair is grown from automorphisms found by constrained searches.
*/
bool is_2set_transitive( const hypergraph& h );

} // namespace minorlab
