#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycles {

// Exact rational used for positions along polygon sides.  128-bit limbs so
// intermediate midpoint/offset computations cannot silently overflow; the
// canonical respacing keeps stored denominators small anyway.
using Int = boost::multiprecision::int128_t;
using Rat = boost::rational<Int>;

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

enum class errc {
  unsupported_surface,
  invalid_curve,
  invalid_class,
  invalid_vertex,
  degenerate_position,
  not_homologous,
  illegal_surgery,
  nothing_to_do,
  out_of_range,
  no_cusp,
  too_large,
  cap_exceeded,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace cycles
