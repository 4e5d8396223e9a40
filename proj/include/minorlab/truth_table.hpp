/*!
  \file truth_table.hpp
  \brief Boolean functions as explicit truth tables, plus variable maps.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace minorlab
{

/*! \brief A Boolean function of arity n as a packed vector of 2^n bits.

  Bit index a = sum a_i * 2^(i-1) holds f(a_1,...,a_n); variable x_1 is the
  least significant bit of the index.  Arity is capped at 16.
*/
class truth_table
{
public:
  static constexpr int max_arity = 16;

  explicit truth_table( int arity = 0 );

  /*! \brief Builds a table from the integer whose bit a is f(a). */
  static truth_table from_value( int arity, uint64_t value );
  static truth_table constant( int arity, bool value );
  /*! \brief The projection (a_1,...,a_n) -> a_var. */
  static truth_table projection( int arity, int var );

  int arity() const { return arity_; }
  uint32_t num_bits() const { return 1u << arity_; }

  bool bit( uint32_t a ) const
  {
    return ( words_[a >> 6] >> ( a & 63u ) ) & 1u;
  }

  void set_bit( uint32_t a, bool v )
  {
    if ( v )
      words_[a >> 6] |= uint64_t( 1 ) << ( a & 63u );
    else
      words_[a >> 6] &= ~( uint64_t( 1 ) << ( a & 63u ) );
  }

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  bool is_constant() const;

  /* big-endian hex of the 2^n table bits, zero-padded, lowercase */
  std::string to_hex() const;
  static truth_table from_hex( int arity, const std::string& hex );

  bool operator==( const truth_table& other ) const
  {
    return arity_ == other.arity_ && words_ == other.words_;
  }
  bool operator!=( const truth_table& other ) const { return !( *this == other ); }
  /* orders by (arity, table value); the tie-break order used for canonical forms */
  bool operator<( const truth_table& other ) const;

private:
  int arity_;
  std::vector<uint64_t> words_;
};

/*! \brief A total map sigma : {1..n} -> {1..m} between variable index sets.

  Encodes simple-minor substitutions and hypergraph quotient maps alike; it
  need not be injective or surjective.
*/
struct var_map
{
  int codomain_size = 0;
  std::vector<int> image; /* image[i-1] in 1..codomain_size */

  var_map() = default;
  var_map( std::vector<int> img, int codomain );

  int domain_size() const { return static_cast<int>( image.size() ); }
  int operator()( int i ) const { return image[i - 1]; }

  static var_map identity( int n );
  /* (this o inner): domain of inner, codomain of this */
  var_map compose_after( const var_map& inner ) const;

  bool operator==( const var_map& other ) const
  {
    return codomain_size == other.codomain_size && image == other.image;
  }
};

/*! \brief f_{i=j}: the value at a is f with coordinate i overwritten by a_j.

  Keeps the arity; x_i is left dangling as an inessential variable when
  i != j, and identify(f, i, i) returns f bit for bit.
*/
truth_table identify( const truth_table& f, int i, int j );

/*! \brief g(a_1,...,a_m) = f(a_{sigma(1)},...,a_{sigma(n)}).

  Subsumes identification, permutation and dummy addition in one operation.
*/
truth_table apply_map( const truth_table& f, const var_map& sigma );

/*! \brief Indices i for which some pair of assignments differing only at i
  gives different f-values. */
std::vector<int> essential_vars( const truth_table& f );

/* bitmask form of essential_vars (bit i-1 set iff x_i essential) */
uint32_t essential_mask( const truth_table& f );

int essential_arity( const truth_table& f );

/*! \brief Drops inessential variables, compacting indices order-preservingly. */
truth_table compact( const truth_table& f );

struct truth_table_hash
{
  size_t operator()( const truth_table& t ) const;
};

} // namespace minorlab
