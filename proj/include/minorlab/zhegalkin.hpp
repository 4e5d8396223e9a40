/*!
  \file zhegalkin.hpp
  \brief The GF(2) Moebius transform between truth tables and multilinear
  polynomials (hypergraphs of monomials).
*/

#pragma once

#include "minorlab/hypergraph.hpp"
#include "minorlab/truth_table.hpp"

namespace minorlab
{

/*! \brief The unique hypergraph H on f.arity() vertices with f_H = f.

  In-place butterfly Moebius transform over GF(2), O(n 2^n); the coefficient
  of monomial S is the XOR of f over all assignments supported inside S.
*/
hypergraph zhegalkin( const truth_table& f );

/*! \brief Evaluates the polynomial of h at every assignment; exact inverse of
  zhegalkin(). */
truth_table from_polynomial( const hypergraph& h );

/*! \brief f_h, the Boolean function determined by h. */
inline truth_table function_of( const hypergraph& h )
{
  return from_polynomial( h );
}

/* butterfly over the packed table words; an involution */
void mobius_transform_inplace( truth_table& t );

} // namespace minorlab
