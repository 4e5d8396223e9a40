/*!
  \file irreducibility.hpp
  \brief Arity gap, the pair equivalence on identified functions, lower
  covers, and the join-irreducibility deciders, with an independent
  brute-force oracle.
*/

#pragma once

#include "minorlab/canonical.hpp"
#include "minorlab/hypergraph.hpp"
#include "minorlab/truth_table.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace minorlab
{

struct var_pair
{
  int i, j; /* i < j, 1-based */

  bool operator==( const var_pair& other ) const { return i == other.i && j == other.j; }
  bool operator<( const var_pair& other ) const
  {
    return i != other.i ? i < other.i : j < other.j;
  }
};

/*! \brief The partition of the essential-variable pairs of a function under
  "identified functions are equivalent", with the essential-arity drop of
  each pair. */
struct pair_partition
{
  std::vector<var_pair> pairs;               /* all 2-subsets of Ess f, lex order */
  std::vector<int> drops;                    /* parallel: ess f - ess f_{i=j} */
  std::vector<std::vector<var_pair>> classes; /* partition of pairs under ~=, each sorted */

  int class_of( const var_pair& p ) const;
  int drop_of( const var_pair& p ) const;
};

/*! \brief Minimal essential-arity drop over all pair identifications; always
  1 or 2.  Undefined (throws) below two essential variables. */
int gap( const truth_table& f );

/*! \brief Partitions the essential pairs of f; equivalence goes through
  canonical forms up to ess 8 and through isomorphism of the reduced
  Zhegalkin hypergraphs beyond. */
pair_partition pair_classes( const truth_table& f );

struct cover_report
{
  int ess = 0;
  int gap = 0;                        /* 1 or 2 */
  std::vector<var_pair> c_f;          /* pairs achieving the maximal drop */
  std::vector<truth_table> lower_cover_classes; /* one compacted representative each */
  bool join_irreducible = false;
  std::optional<std::pair<var_pair, var_pair>> witness; /* when reducible */
};

/*! \brief Join-irreducibility and lower-cover structure of f: f is
  join-irreducible exactly when the maximal-drop pairs form a single
  equivalence class. */
cover_report make_cover_report( const truth_table& f );

struct gap2_shape
{
  int case_number; /* 1..4 */
  int m;           /* case 1 only: number of summed variables */
  bool c;          /* the additive constant */
};

/*! \brief Matches f, up to equivalence, against the four gap-two shapes;
  nullopt exactly when gap(f) == 1. */
std::optional<gap2_shape> gap2_classify( const truth_table& f );

/*! \brief Ground-truth join-irreducibility: builds all strict-minor classes
  by identification-closure BFS and counts the maximal ones.  Capped at
  essential arity 6. */
bool brute_force_ji( const truth_table& f );

/* ------------------------------------------------------------------ */
/* hypergraph side                                                     */

/*! \brief Vertex pairs of the reduced vertex set whose contraction leaves no
  newly isolated vertex; exactly the pairs with essential-arity drop 1. */
std::vector<var_pair> dh_set( const hypergraph& h );

/*! \brief Pair partition computed on the hypergraph itself: contractions are
  grouped by isomorphism of their reduced results. */
pair_partition hyper_pair_classes( const hypergraph& h );

/*! \brief Join-irreducibility of f_h: either the drop-1 pairs form one
  equivalence class, or there are none and the reduced hypergraph is one of
  the gap-two polynomial shapes. */
bool is_join_irreducible_h( const hypergraph& h );

/* cover report computed through hypergraph contractions */
cover_report make_cover_report_h( const hypergraph& h );

} // namespace minorlab
