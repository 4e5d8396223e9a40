/*!
  \file canonical.hpp
  \brief Canonical representatives of simple-minor equivalence classes.

  Two Boolean functions are equivalent exactly when their inessential-free
  tables are related by a permutation of variables; the canonical form is the
  least such table in (arity, table value) order.
*/

#pragma once

#include "minorlab/truth_table.hpp"

namespace minorlab
{

struct canonical_form
{
  truth_table table; /* all variables essential; minimal over permutations */

  int ess() const { return table.arity(); }

  bool operator==( const canonical_form& other ) const { return table == other.table; }
  bool operator!=( const canonical_form& other ) const { return table != other.table; }
  bool operator<( const canonical_form& other ) const { return table < other.table; }
};

/*! \brief Canonicalizes f: drops inessential variables, then minimizes over
  all permutations of the remaining ones.

  canonical(f) == canonical(g) iff f and g are equivalent.  Requires
  essential arity <= 8; larger instances must use hypergraph isomorphism
  (see isomorphism.hpp) as the equivalence backend.
*/
canonical_form canonical( const truth_table& f );

static constexpr int canonical_ess_cap = 8;

/*! \brief Equivalence of Boolean functions (mutual simple minors). */
bool equivalent( const truth_table& f, const truth_table& g );

struct canonical_form_hash
{
  size_t operator()( const canonical_form& c ) const
  {
    return truth_table_hash()( c.table );
  }
};

} // namespace minorlab
