/*!
  \file steiner.hpp
  \brief 2-(n,k,lambda) design verification and the Steiner-system
  join-irreducibility / -2-monomorphy equivalence.
*/

#pragma once

#include "minorlab/hypergraph.hpp"

#include <string>
#include <vector>

namespace minorlab
{

struct design_params
{
  int n;      /* points */
  int k;      /* block size */
  int lambda; /* pair multiplicity */

  design_params( int n_, int k_, int lambda_ );
};

/*! \brief True iff all blocks have size k and every vertex pair lies in
  exactly lambda blocks. */
bool is_design( const hypergraph& h, const design_params& p );

inline bool is_steiner( const hypergraph& h, const design_params& p )
{
  return p.lambda == 1 && is_design( h, p );
}

inline bool is_steiner_triple( const hypergraph& h, const design_params& p )
{
  return p.lambda == 1 && p.k == 3 && is_design( h, p );
}

/*! \brief H_{-e}: deletes both endpoints of e and keeps exactly the blocks
  contained in the remaining vertex set, reindexed order-preservingly. */
hypergraph minus_pair( const hypergraph& h, int i, int j );

/*! \brief True iff deleting any two vertices always yields isomorphic
  hypergraphs; requires at least 3 vertices. */
bool is_minus2_monomorphic( const hypergraph& h );

struct steiner_report
{
  int n = 0, k = 0;
  bool ji = false;               /* f_H join-irreducible */
  bool contraction_mono = false; /* H_e isomorphic for all pairs e */
  bool minus2_mono = false;      /* H_-e isomorphic for all pairs e */
  size_t dh_size = 0;
  size_t total_pairs = 0;
};

/*! \brief Evaluates the three equivalent conditions on a Steiner system and
  asserts they agree; for block size >= 3 also asserts every pair contraction
  keeps the full reduced vertex set. */
steiner_report make_steiner_report( const hypergraph& h );

struct named_system
{
  std::string name;
  hypergraph hg;
};

/*! \brief The built-in Steiner systems: the 7-point projective plane and the
  9-point affine plane, both design-checked at construction. */
std::vector<named_system> builtin_systems();

/*! \brief The two non-isomorphic 13-point triple systems: the cyclic one and
  a Pasch-trade variant, validated and shown non-isomorphic at construction.
  Minutes-scale workloads; kept out of the default verification run. */
std::vector<named_system> extended_systems();

} // namespace minorlab
