#include <numeric>

#include "hitforge/pb_gate.hpp"

namespace hitforge {

CoverSpec make_cover(const MPolyQ& f) {
  CoverSpec c;
  for (Var v : f.variables()) {
    if (is_torus_var(v)) {
      c.r = std::max(c.r, static_cast<unsigned>(var_index(v)) + 1);
    } else if (v == Var::s) {
      c.has_additive = true;
    } else if (v != Var::y) {
      throw InputError("cover may only involve x1..x9, s and y, found " + std::string(var_name(v)));
    }
  }
  c.d = f.degree(Var::y);
  if (c.d < 1) throw InputError("cover must have positive degree in y");
  c.f = f.primitive_integral();
  if (!(squarefree_part(c.f) == c.f)) throw InputError("cover polynomial has a repeated factor");
  return c;
}

unsigned lcm_upto(unsigned d) {
  unsigned out = 1;
  for (unsigned i = 2; i <= d; ++i) out = std::lcm(out, i);
  return out;
}

}  // namespace hitforge
