/*!
  \file catalog.hpp
  \brief Exhaustive enumeration of small Boolean functions into equivalence
  classes, with gap, join-irreducibility, lower covers and poset levels.
*/

#pragma once

#include "minorlab/canonical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minorlab
{

struct catalog_entry
{
  int class_id = 0;
  canonical_form repr; /* all variables essential */
  int ess = 0;
  std::optional<int> gap;             /* empty below two essential variables */
  std::optional<bool> join_irreducible;
  int level = -1;                     /* filled by compute_levels */
  std::vector<int> cover_class_ids;   /* lower covers, ascending */
};

struct function_catalog
{
  int max_arity = 0;
  std::vector<catalog_entry> entries; /* ascending (ess, table value); index == class_id */
  int n_levels = 0;

  int id_of( const truth_table& canonical_table ) const; /* -1 if absent */
  std::string to_text() const;
};

/*! \brief Groups all 2^(2^max_arity) tables by canonical form and analyzes
  each class; class ids are ranks of the canonical representatives.  The
  table sweep is partitioned over `jobs` workers with an ordered merge, so
  output is identical for any worker count. */
function_catalog enumerate_functions( int max_arity, int jobs = 1 );

/*! \brief Assigns levels by iteratively peeling minimal elements under the
  minor order. */
void compute_levels( function_catalog& cat );

} // namespace minorlab
