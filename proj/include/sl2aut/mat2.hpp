#pragma once

#include <array>

#include "sl2aut/elements.hpp"
#include "sl2aut/errors.hpp"

namespace sl2aut {

/// 2x2 matrix over any exact element type K, row-major.
template <class K>
struct Mat2 {
  std::array<K, 4> e;  // e11 e12 e21 e22

  static Mat2 of(K a, K b, K c, K d) {
    return Mat2{{std::move(a), std::move(b), std::move(c), std::move(d)}};
  }
  static Mat2 identity(const K& model) {
    K o = elem_from_int(model, 1);
    K z = elem_from_int(model, 0);
    return of(o, z, z, o);
  }

  const K& e11() const { return e[0]; }
  const K& e12() const { return e[1]; }
  const K& e21() const { return e[2]; }
  const K& e22() const { return e[3]; }

  K det() const { return e[0] * e[3] - e[1] * e[2]; }
  K trace() const { return e[0] + e[3]; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return of(x.e[0] * y.e[0] + x.e[1] * y.e[2],
              x.e[0] * y.e[1] + x.e[1] * y.e[3],
              x.e[2] * y.e[0] + x.e[3] * y.e[2],
              x.e[2] * y.e[1] + x.e[3] * y.e[3]);
  }
  Mat2 operator-() const { return of(-e[0], -e[1], -e[2], -e[3]); }

  Mat2 scaled(const K& s) const {
    return of(e[0] * s, e[1] * s, e[2] * s, e[3] * s);
  }

  Mat2 inverse() const {
    K d = det();
    if (elem_is_zero(d)) throw DomainError("Mat2: singular matrix");
    K di = elem_from_int(d, 1) / d;
    return of(e[3] * di, -(e[1] * di), -(e[2] * di), e[0] * di);
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.e[0] == y.e[0] && x.e[1] == y.e[1] && x.e[2] == y.e[2] &&
           x.e[3] == y.e[3];
  }
};

}  // namespace sl2aut
