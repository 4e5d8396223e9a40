/*!
  \file suites.hpp
  \brief Named exhaustive/sampled verification suites; each reproduces one of
  the classification theorems at desk scale and reports failures with
  reproducing inputs.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minorlab
{

struct suite_options
{
  uint64_t seed = 0x5eedbeef;
  int jobs = 1;
  bool extended = false; /* enables the 13-point triple-system workload */
};

struct suite_failure
{
  std::string input;   /* reproducing input, in the text formats */
  std::string message;
};

struct suite_result
{
  std::string name;
  bool seeded = false;
  uint64_t seed = 0;
  uint64_t checks = 0;
  std::vector<suite_failure> failures;

  bool ok() const { return failures.empty(); }
};

/* salomaa | gap2 | lowercover | correspondence | graphs6 | loops5 | steiner
   | quasiorder */
const std::vector<std::string>& suite_names();

suite_result run_suite( const std::string& name, const suite_options& opt = {} );

/* deterministic generator for the sampled suites (splitmix64) */
struct det_rng
{
  uint64_t state;

  explicit det_rng( uint64_t seed ) : state( seed ) {}

  uint64_t next()
  {
    uint64_t z = ( state += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

  uint64_t below( uint64_t n ) { return next() % n; }
};

} // namespace minorlab
