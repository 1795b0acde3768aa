#pragma once
// Point configurations used across the test suite.

#include "tropdisc/matrix.hpp"

namespace examples {

using tropdisc::IntMatrix;

// second Veronese of the plane, homogenized coordinates: the discriminant is
// the 3x3 symmetric determinant, a degree-3 hypersurface in P^5
inline const IntMatrix veronese{{1, 1, 1, 1, 1, 1},
                                {0, 1, 2, 0, 1, 0},
                                {0, 0, 0, 1, 1, 2}};

// reference Gale dual (rows): kernel lattice of the Veronese configuration
inline const IntMatrix veronese_gale_t{{1, -2, 1, 0, 0, 0},
                                       {1, -1, 0, -1, 1, 0},
                                       {1, 0, 0, -2, 0, 1}};

// cubic-and-line system; discriminant x1 x6^3 - x2 x5 x6^2 + x3 x5^2 x6 - x4 x5^3
inline const IntMatrix k4{{1, 1, 1, 1, 0, 0},
                          {0, 0, 0, 0, 1, 1},
                          {0, 1, 2, 3, 0, 1}};

// mixed discriminant of two bivariate quadrinomials; degree 126
inline const IntMatrix mixed_disc{{1, 1, 1, 1, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 1, 1, 1, 1},
                                  {2, 3, 5, 7, 11, 13, 17, 19},
                                  {19, 17, 13, 11, 7, 5, 3, 2}};

// Cayley configuration of three univariate quadrics; codimension 2, degree 6
inline const IntMatrix three_quadrics{{1, 1, 1, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 1, 1, 1, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 1, 1, 1},
                                      {0, 1, 2, 0, 1, 2, 0, 1, 2}};

// monomial-in-linear-forms map: U realizes the graphic matroid of K_4 minus
// an edge (Bergman complex K_{3,3}), V pushes it to a surface of degree 28
inline const IntMatrix uv_u{{1, -1, 0, 0},
                            {1, 0, -1, 0},
                            {0, 1, -1, 0},
                            {0, 1, 0, -1},
                            {0, 0, 1, -1}};

inline const IntMatrix uv_v{{3, 3, 0, 0, 0},
                            {2, 0, 2, 2, 0},
                            {0, 2, 2, 0, 2},
                            {0, 0, 0, 3, 3}};

// Cayley configuration of four plane triangles; codimension 2, resultant
// degree 12 (sum of the four mixed volumes of triples of triangles)
inline const IntMatrix four_triangles{{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
                                      {0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1},
                                      {0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1}};

// two-block Boolean configuration: lattice is the rank-2 Boolean lattice
inline const IntMatrix boolean2{{1, 1, 0, 0},
                                {0, 0, 1, 1}};

} // namespace examples
