#include "minorlab/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minorlab
{

namespace
{

std::vector<uint64_t> zero_words( int arity )
{
  const size_t nbits = size_t( 1 ) << arity;
  return std::vector<uint64_t>( nbits <= 64 ? 1 : nbits / 64, 0u );
}

} // namespace

truth_table::truth_table( int arity ) : arity_( arity )
{
  if ( arity < 0 || arity > max_arity )
    throw std::invalid_argument( "truth_table: arity must be in 0..16" );
  words_ = zero_words( arity );
}

truth_table truth_table::from_value( int arity, uint64_t value )
{
  truth_table t( arity );
  if ( arity > 6 )
    throw std::invalid_argument( "truth_table::from_value: arity must be <= 6" );
  if ( arity < 6 && ( value >> ( uint64_t( 1 ) << arity ) ) != 0 )
    throw std::invalid_argument( "truth_table::from_value: value exceeds 2^(2^n)-1" );
  t.words_[0] = value;
  return t;
}

truth_table truth_table::constant( int arity, bool value )
{
  truth_table t( arity );
  if ( value )
  {
    for ( auto& w : t.words_ )
      w = ~uint64_t( 0 );
    if ( t.num_bits() < 64 )
      t.words_[0] = ( uint64_t( 1 ) << t.num_bits() ) - 1;
  }
  return t;
}

truth_table truth_table::projection( int arity, int var )
{
  if ( var < 1 || var > arity )
    throw std::out_of_range( "truth_table::projection: variable out of range" );
  truth_table t( arity );
  for ( uint32_t a = 0; a < t.num_bits(); ++a )
    t.set_bit( a, ( a >> ( var - 1 ) ) & 1u );
  return t;
}

bool truth_table::is_constant() const
{
  return *this == constant( arity_, bit( 0 ) );
}

std::string truth_table::to_hex() const
{
  const uint32_t nbits = num_bits();
  const uint32_t digits = nbits <= 4 ? 1 : nbits / 4;
  std::string out( digits, '0' );
  for ( uint32_t d = 0; d < digits; ++d )
  {
    uint32_t nibble = 0;
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint32_t pos = 4 * ( digits - 1 - d ) + b;
      if ( pos < nbits && bit( pos ) )
        nibble |= 1u << b;
    }
    out[d] = "0123456789abcdef"[nibble];
  }
  return out;
}

truth_table truth_table::from_hex( int arity, const std::string& hex )
{
  truth_table t( arity );
  if ( hex.empty() )
    throw std::invalid_argument( "truth_table::from_hex: empty hex string" );
  const uint32_t nbits = t.num_bits();
  for ( size_t d = 0; d < hex.size(); ++d )
  {
    const char c = hex[hex.size() - 1 - d];
    uint32_t nibble;
    if ( c >= '0' && c <= '9' )
      nibble = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      nibble = 10 + ( c - 'a' );
    else if ( c >= 'A' && c <= 'F' )
      nibble = 10 + ( c - 'A' );
    else
      throw std::invalid_argument( "truth_table::from_hex: invalid hex digit" );
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint32_t pos = uint32_t( 4 * d + b );
      if ( nibble & ( 1u << b ) )
      {
        if ( pos >= nbits )
          throw std::invalid_argument( "truth_table::from_hex: value exceeds table size" );
        t.set_bit( pos, true );
      }
    }
  }
  return t;
}

bool truth_table::operator<( const truth_table& other ) const
{
  if ( arity_ != other.arity_ )
    return arity_ < other.arity_;
  for ( size_t i = words_.size(); i-- > 0; )
  {
    if ( words_[i] != other.words_[i] )
      return words_[i] < other.words_[i];
  }
  return false;
}

var_map::var_map( std::vector<int> img, int codomain )
    : codomain_size( codomain ), image( std::move( img ) )
{
  if ( codomain < 0 )
    throw std::invalid_argument( "var_map: negative codomain" );
  for ( int v : image )
  {
    if ( v < 1 || v > codomain )
      throw std::invalid_argument( "var_map: image entry out of codomain" );
  }
}

var_map var_map::identity( int n )
{
  std::vector<int> img( n );
  for ( int i = 0; i < n; ++i )
    img[i] = i + 1;
  return var_map( std::move( img ), n );
}

var_map var_map::compose_after( const var_map& inner ) const
{
  if ( inner.codomain_size != domain_size() )
    throw std::invalid_argument( "var_map::compose_after: size mismatch" );
  std::vector<int> img( inner.image.size() );
  for ( size_t i = 0; i < img.size(); ++i )
    img[i] = image[inner.image[i] - 1];
  return var_map( std::move( img ), codomain_size );
}

truth_table identify( const truth_table& f, int i, int j )
{
  const int n = f.arity();
  if ( i < 1 || i > n || j < 1 || j > n )
    throw std::out_of_range( "identify: variable index out of range" );
  if ( i == j )
    return f;
  truth_table g( n );
  const uint32_t bi = 1u << ( i - 1 );
  for ( uint32_t a = 0; a < g.num_bits(); ++a )
  {
    const uint32_t b = ( ( a >> ( j - 1 ) ) & 1u ) ? ( a | bi ) : ( a & ~bi );
    g.set_bit( a, f.bit( b ) );
  }
  return g;
}

truth_table apply_map( const truth_table& f, const var_map& sigma )
{
  if ( sigma.domain_size() != f.arity() )
    throw std::invalid_argument( "apply_map: map domain must equal arity" );
  if ( sigma.codomain_size > truth_table::max_arity )
    throw std::invalid_argument( "apply_map: codomain exceeds arity cap" );
  truth_table g( sigma.codomain_size );
  const int n = f.arity();
  for ( uint32_t a = 0; a < g.num_bits(); ++a )
  {
    uint32_t b = 0;
    for ( int i = 1; i <= n; ++i )
    {
      if ( ( a >> ( sigma( i ) - 1 ) ) & 1u )
        b |= 1u << ( i - 1 );
    }
    g.set_bit( a, f.bit( b ) );
  }
  return g;
}

uint32_t essential_mask( const truth_table& f )
{
  uint32_t mask = 0;
  for ( int i = 1; i <= f.arity(); ++i )
  {
    const uint32_t bi = 1u << ( i - 1 );
    for ( uint32_t a = 0; a < f.num_bits(); ++a )
    {
      if ( f.bit( a ) != f.bit( a ^ bi ) )
      {
        mask |= bi;
        break;
      }
    }
  }
  return mask;
}

std::vector<int> essential_vars( const truth_table& f )
{
  std::vector<int> vars;
  const uint32_t mask = essential_mask( f );
  for ( int i = 1; i <= f.arity(); ++i )
  {
    if ( mask & ( 1u << ( i - 1 ) ) )
      vars.push_back( i );
  }
  return vars;
}

int essential_arity( const truth_table& f )
{
  return std::popcount( essential_mask( f ) );
}

truth_table compact( const truth_table& f )
{
  const auto ess = essential_vars( f );
  truth_table g( static_cast<int>( ess.size() ) );
  for ( uint32_t a = 0; a < g.num_bits(); ++a )
  {
    uint32_t b = 0;
    for ( size_t k = 0; k < ess.size(); ++k )
    {
      if ( ( a >> k ) & 1u )
        b |= 1u << ( ess[k] - 1 );
    }
    g.set_bit( a, f.bit( b ) );
  }
  return g;
}

size_t truth_table_hash::operator()( const truth_table& t ) const
{
  size_t h = std::hash<int>()( t.arity() );
  for ( uint64_t w : t.words() )
    h ^= std::hash<uint64_t>()( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  return h;
}

} // namespace minorlab
