#ifndef SWCURV_SEGRE_HPP
#define SWCURV_SEGRE_HPP

#include <string>
#include <vector>

#include "matrix.hpp"

namespace swcurv {

/// Jordan-block descriptor. A complex_pair block stands for a conjugate pair
/// of blocks of the given size (so it accounts for 2*size dimensions) and is
/// rendered as the digit twice, the second with a trailing '~'
/// (e.g. the pair of 1-blocks in {111 1-bar} renders "11~").
struct SegreBlock {
  int size = 1;
  bool complex_pair = false;
  int eigen_group = 0;
};

struct SegreType {
  std::vector<SegreBlock> blocks;

  bool degenerate() const;  // some eigenvalue carries >= 2 blocks
  int dimension() const;    // sum of sizes, complex pairs counting double

  // Canonical machine rendering, e.g. "{(11)(11)}", "{1111~}".
  std::string render() const;
  static SegreType parse(const std::string& s);

  void normalize();
  bool operator==(const SegreType& o) const;
  bool operator!=(const SegreType& o) const { return !(*this == o); }
};

struct Table1Entry {
  SegreType type;
  bool neutral_only;  // only admissible for neutral signature (2,2)
};

// The 20 admissible Segre types of the Ricci operator in dimension 4.
std::vector<Table1Entry> table1_catalog();

// Segre type of a (not necessarily symmetric) operator matrix over Q(sqrt(d)).
// Eigenvalues lying in the field are handled exactly (Jordan structure from
// exact rank sequences); the rest fall back to numerics at the given
// tolerance. Throws IndeterminateError when two numeric roots are separated
// by less than 10x the tolerance without being merged.
SegreType segre_type_of(const Matrix& op, double tolerance = 1e-9);

}  // namespace swcurv

#endif
