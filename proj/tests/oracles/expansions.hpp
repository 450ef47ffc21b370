#pragma once

// The low-degree boundaries written out term by term.

#include <map>
#include <vector>

#include "ternlab/tern_table.hpp"

namespace oracle {

using Tuple = std::vector<ternlab::Element>;
using Combination = std::map<Tuple, long>;

inline void put(Combination& c, const Tuple& t, long k) {
  if ((c[t] += k) == 0) c.erase(t);
}

inline Combination boundary1(const ternlab::TernTable& T, Tuple x) {
  const auto a = x[0], b = x[1], c = x[2];
  const auto abc = T(a, b, c);
  Combination out;
  put(out, {b, c}, 1);
  put(out, {a, abc}, -1);
  put(out, {abc, c}, -1);
  put(out, {a, b}, 1);
  return out;
}

inline Combination boundary2(const ternlab::TernTable& T, Tuple x) {
  const auto a = x[0], b = x[1], c = x[2], d = x[3];
  const auto abc = T(a, b, c), bcd = T(b, c, d);
  Combination out;
  put(out, {b, c, d}, 1);
  put(out, {a, abc, T(abc, c, d)}, -1);
  put(out, {abc, c, d}, -1);
  put(out, {a, b, bcd}, 1);
  put(out, {T(a, b, bcd), bcd, d}, 1);
  put(out, {a, b, c}, -1);
  return out;
}

inline Combination boundary3(const ternlab::TernTable& T, Tuple x) {
  const auto a = x[0], b = x[1], c = x[2], d = x[3], e = x[4];
  const auto abc = T(a, b, c), bcd = T(b, c, d), cde = T(c, d, e);
  const auto abc_cd = T(abc, c, d);
  const auto bc_cde = T(b, c, cde);
  Combination out;
  put(out, {b, c, d, e}, 1);
  put(out, {a, abc, abc_cd, T(abc_cd, d, e)}, -1);
  put(out, {abc, c, d, e}, -1);
  put(out, {a, b, bcd, T(bcd, d, e)}, 1);
  put(out, {T(a, b, bcd), bcd, d, e}, 1);
  put(out, {a, b, c, cde}, -1);
  put(out, {T(a, b, bc_cde), bc_cde, cde, e}, -1);
  put(out, {a, b, c, d}, 1);
  return out;
}

}  // namespace oracle
