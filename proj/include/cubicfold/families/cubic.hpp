#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "cubicfold/mpoly/linear_section.hpp"
#include "cubicfold/mpoly/parser.hpp"

namespace cubicfold {

/// A cubic form, possibly cut by linear equations in a bigger ambient space. `form` is the
/// working model in dim(section) variables; `ambient_form` is the cubic as written.
struct CubicFourfold {
  std::string name;
  std::size_t ambient_vars = 6;
  std::optional<LinearSection> section;
  CycPoly ambient_form;
  CycPoly form;
  unsigned field_order = 1;          // coefficients lie in Q(zeta_field_order)
  std::set<std::int64_t> surds;      // square roots occurring in the coefficients
  std::vector<CycPoly> auxiliary;    // further equations in the same variables (K3 models)

  std::size_t nvars() const { return form.nvars(); }

  static CubicFourfold plain(std::string name, CycPoly f, std::set<std::int64_t> surds = {}) {
    CubicFourfold x;
    x.name = std::move(name);
    x.ambient_vars = f.nvars();
    x.ambient_form = f;
    x.form = std::move(f);
    x.surds = std::move(surds);
    x.field_order = field_order_of(x.form);
    x.check();
    return x;
  }

  static CubicFourfold sectioned(std::string name, CycPoly ambient, LinearSection s) {
    CubicFourfold x;
    x.name = std::move(name);
    x.ambient_vars = ambient.nvars();
    x.ambient_form = std::move(ambient);
    x.form = restrict_to_linear_section(x.ambient_form, s);
    x.section = std::move(s);
    x.field_order = field_order_of(x.form);
    x.check();
    return x;
  }

  static unsigned field_order_of(const CycPoly& f) {
    unsigned o = 1;
    for (const auto& [m, c] : f.terms())
      if (!c.is_rational()) o = std::lcm(o, c.order());
    return o;
  }

  void check() const {
    if (form.is_zero() || !form.is_homogeneous(3)) throw std::invalid_argument("cubic form must be nonzero and homogeneous of degree 3");
    if (section && !(restrict_to_linear_section(ambient_form, *section) == form))
      throw std::invalid_argument("reduced model inconsistent with the linear section");
  }
};

}  // namespace cubicfold
