/*!
  \file minor_order.hpp
  \brief The simple-minor quasi-order on Boolean functions.

  g <= f when g arises from f by identification of variables, permutation of
  variables, and addition or deletion of inessential variables.
*/

#pragma once

#include "minorlab/canonical.hpp"
#include "minorlab/truth_table.hpp"

#include <vector>

namespace minorlab
{

/*! \brief Decides g <= f by BFS over the identification closure of f.

  Repeatedly applies identify() on pairs of essential variables,
  deduplicating by canonical form, and tests g against the visited classes.
*/
bool is_minor( const truth_table& g, const truth_table& f );

/*! \brief Decides g <= f by exhaustive search over all maps
  sigma : vars(f) -> vars(g); the independent route used for cross-checks. */
bool is_minor_sigma( const truth_table& g, const truth_table& f );

/*! \brief All equivalence classes of strict minors of f, as canonical forms
  in increasing order.  Cached process-wide. */
std::vector<canonical_form> strict_minor_closure( const truth_table& f );

/*! \brief The lower covers of f: maximal classes among its strict minors. */
std::vector<canonical_form> lower_covers( const truth_table& f );

} // namespace minorlab
