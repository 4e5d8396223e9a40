/*!
  \file quotient.hpp
  \brief Quotient maps between hypergraphs and the induced simple-minor
  relation; pair contraction H_e.
*/

#pragma once

#include "minorlab/hypergraph.hpp"
#include "minorlab/truth_table.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace minorlab
{

/*! \brief Per-image parity bookkeeping for a vertex map applied to a
  hypergraph: for each image subset E, the count of edge preimages mod 2. */
struct quotient_witness
{
  var_map map;
  std::vector<std::pair<uint32_t, int>> preimage_parities; /* (mask, parity), sorted */
};

quotient_witness make_quotient_witness( const hypergraph& source, const var_map& map );

/*! \brief The quotient hypergraph H_{h'} = (V, { E : |h'^{-1}[E]| odd }).

  Satisfies function_of(apply_quotient(h, map)) == apply_map(function_of(h), map).
*/
hypergraph apply_quotient( const hypergraph& source, const var_map& map );

/*! \brief True iff map is a quotient map from source to target, i.e. the
  target equals the quotient exactly. */
bool is_quotient_map( const var_map& map, const hypergraph& source, const hypergraph& target );

struct contraction_result
{
  hypergraph hg;    /* on (V minus e) u {l_e}, compacted order-preservingly */
  int fresh_vertex; /* index of l_e after compaction (always the last index) */
};

/*! \brief Contracts the vertex pair e = {i, j} into a fresh vertex l_e.

  An edge survives iff it avoids e, and F u {l_e} is an edge iff an odd
  number of F u e, F u {i}, F u {j} are edges.  Cross-checked against
  apply_quotient with the collapse map on every call.
*/
contraction_result contract_pair( const hypergraph& h, int i, int j );

/* the collapse map realising contract_pair (both endpoints to the last index) */
var_map collapse_map( int n, int i, int j );

/*! \brief Decides h is a simple minor of source by exhaustive search over all
  vertex maps from source into h. */
bool is_hyper_minor( const hypergraph& h, const hypergraph& source );

} // namespace minorlab
