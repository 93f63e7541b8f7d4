#pragma once

#include <string>
#include <vector>

#include "fewnomial/gale.hpp"
#include "fewnomial/master.hpp"
#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Affine hyperplane arrangement in R^k (k <= 2) given by the vanishing loci of
/// degree-1 forms, extended by the hyperplane at infinity for face bookkeeping.
struct Arrangement {
  int k = 0;
  std::vector<LinearForm> forms;

  int m() const { return static_cast<int>(forms.size()); }
  /// Index used for the hyperplane at infinity in face member lists.
  int infinity_index() const { return m(); }
};

Arrangement make_arrangement(const std::vector<LinearForm>& forms);
Arrangement make_arrangement(const MasterSystem& ms);

struct Violation {
  std::string what;
  std::vector<int> members;
};

/// Empty when the extended arrangement is in general position: nonconstant
/// pairwise-distinct forms, no parallels, no three concurrent lines.
std::vector<Violation> genericity_check(const Arrangement& a);

/// Codimension-j faces of the extended generic arrangement: binomial(n+k+1, j).
Int face_count(int n, int k, int j);

struct Face {
  std::vector<int> members;  // j hyperplane indices; infinity_index() may appear
  bool at_infinity = false;
  QVec point;  // representative point (finite) or direction (at infinity)
};

/// All codimension-j faces, finite ones first; requires a generic arrangement.
std::vector<Face> enumerate_faces(const Arrangement& a, int j);

struct Chamber {
  std::vector<int> signs;  // +1 / -1 per form
  QVec sample;             // interior rational point
  bool unbounded = false;
};

/// Connected components of the complement, each with an exact interior sample.
std::vector<Chamber> chambers(const Arrangement& a);

/// Chambers whose closure (in the projective compactification) meets the face.
std::vector<int> incident_chambers(const Arrangement& a, const std::vector<Chamber>& ch,
                                   const Face& face);

/// Signs of the forms at a point; 0 entries flag points too close to a form.
std::vector<int> sign_vector(const Arrangement& a, const QVec& y);
std::vector<int> sign_vector_d(const Arrangement& a, const std::vector<double>& y, double tol);

/// Does the (possibly unbounded) chamber recede in direction u or -u?
bool recedes_along(const Arrangement& a, const Chamber& c, const QVec& u);

}  // namespace fewnomial
