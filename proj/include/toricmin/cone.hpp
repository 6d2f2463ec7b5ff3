#pragma once

#include <vector>

#include "toricmin/linalg.hpp"

namespace toricmin {

// A rational polyhedral cone given by lattice generators. All cones used by
// the library are simplicial; smooth cones additionally have |det| = 1.
struct Cone {
  std::vector<IntVector> generators;

  std::size_t dim() const { return generators.empty() ? 0 : generators[0].size(); }
  std::size_t size() const { return generators.size(); }

  // Columns are the generators.
  IntMatrix generator_matrix() const;
  bool is_simplicial_full() const;
  bool is_smooth() const;

  // w in the cone (closed), for real w given in the same lattice.
  bool contains(const Point &w) const;
  // Coefficients of w in the generator basis (full simplicial cones only).
  Point coordinates(const Point &w) const;

  friend bool operator==(const Cone &a, const Cone &b);
};

// The dual basis of a smooth full-dimensional cone, in generator order:
// <dual[i], gen[j]> = delta_ij. Throws NonSmoothCone otherwise.
std::vector<IntVector> dual_basis(const Cone &c);

// Dual cone of a smooth cone, generated by the dual basis.
Cone dual_cone(const Cone &c);

// Same generator set, ignoring order.
bool same_generators(const Cone &a, const Cone &b);

IntVector primitive(const IntVector &v);

}  // namespace toricmin
