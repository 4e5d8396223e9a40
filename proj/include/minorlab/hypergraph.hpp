/*!
  \file hypergraph.hpp
  \brief Hypergraphs as sorted sets of vertex-subset bitmasks.

  A hypergraph doubles as a multilinear polynomial over GF(2): its hyperedges
  are the monomials, with the empty edge standing for the constant monomial 1.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minorlab
{

struct hypergraph
{
  static constexpr int max_vertices = 31;

  int n_vertices = 0;
  /* sorted, duplicate-free; bit k-1 of a mask = vertex k; mask 0 = empty edge */
  std::vector<uint32_t> edges;

  hypergraph() = default;
  hypergraph( int n, std::vector<uint32_t> edge_masks );

  bool has_edge( uint32_t mask ) const;
  size_t num_edges() const { return edges.size(); }

  /* union of all edges */
  uint32_t covered_mask() const;

  bool operator==( const hypergraph& other ) const
  {
    return n_vertices == other.n_vertices && edges == other.edges;
  }
  bool operator!=( const hypergraph& other ) const { return !( *this == other ); }
  bool operator<( const hypergraph& other ) const
  {
    if ( n_vertices != other.n_vertices )
      return n_vertices < other.n_vertices;
    return edges < other.edges;
  }

  static uint32_t mask_of( const std::vector<int>& vertices );
  static std::vector<int> vertices_of( uint32_t mask );
};

/*! \brief XOR-folds a list of edge masks into a duplicate-free hypergraph.

  An even number of occurrences of a mask cancels; used wherever GF(2)
  coefficients are accumulated.
*/
hypergraph parity_fold( int n, const std::vector<uint32_t>& masks );

/*! \brief Drops vertices in no edge, reindexing order-preservingly. */
hypergraph reduced( const hypergraph& h );

/* relabeling that reduced() applies: old vertex -> new vertex (0 = dropped) */
std::vector<int> reduction_map( const hypergraph& h );

/*! \brief Applies a vertex relabeling (must be injective on used vertices). */
hypergraph relabel( const hypergraph& h, const std::vector<int>& perm, int new_n );

} // namespace minorlab
