#pragma once
// Exact rational scalars. Thin layer over GMP's mpq_class: always canonical
// (lowest terms, positive denominator, zero is 0/1).
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// Serialize as "p" or "p/q".
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parse "p" or "p/q" (arbitrary precision).
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && r.get_den() == 0))
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace hq
