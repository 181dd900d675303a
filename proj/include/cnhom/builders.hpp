#pragma once

#include "cnhom/face_complex.hpp"

namespace cnhom {

/** [0,1]: two boundary hyperfaces (left, right) meeting nowhere; codim 1. */
FaceComplex interval();

/** Disk: a single boundary hyperface; codim 1. */
FaceComplex disk();

/**
 * k-gon (k >= 2): edges e1..ek, vertex vi on edges i and i+1 (cyclically, so
 * vk sits on e1 and ek); codim 2. k = 2 is the bigon, whose two vertices share
 * the index set {1, 2}. Throws std::invalid_argument for k < 2.
 */
FaceComplex polygon(int k);

/**
 * n-simplex (n >= 1): hyperfaces 1..n+1, one face per nonempty proper subset
 * of them; codim n. Throws std::invalid_argument for n < 1.
 */
FaceComplex simplex(int n);

/**
 * Cartesian product. Hyperfaces of x keep their indices; hyperfaces of y are
 * shifted by x.num_hyperfaces(). Faces are pairs with labels joined by "x";
 * incidences are inherited from either factor. The result is validated.
 */
FaceComplex product(const FaceComplex& x, const FaceComplex& y);

/** n-fold product of the interval (n >= 1); codim n, 3^n faces. */
FaceComplex hypercube(int n);

}  // namespace cnhom
