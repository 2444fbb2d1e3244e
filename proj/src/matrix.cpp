#include "tri3d4/matrix.hpp"

#include <utility>

namespace tri3d4 {

Mat8 identity8() {
  Mat8 m;
  for (int i = 1; i <= 8; ++i) m(i, i) = Fq3{1};
  return m;
}

Mat8 mat_add(const FieldTower& F, const Mat8& x, const Mat8& y) {
  Mat8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

Mat8 mat_sub(const FieldTower& F, const Mat8& x, const Mat8& y) {
  Mat8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

Mat8 mat_scale(const FieldTower& F, Fq3 s, const Mat8& x) {
  Mat8 r;
  for (int i = 0; i < 64; ++i) r.a[i] = F.mul(s, x.a[i]);
  return r;
}

Mat8 mat_mul(const FieldTower& F, const Mat8& x, const Mat8& y) {
  Mat8 r;
  for (int i = 1; i <= 8; ++i)
    for (int k = 1; k <= 8; ++k) {
      const Fq3 xik = x(i, k);
      if (xik.v == 0) continue;
      for (int j = 1; j <= 8; ++j) r(i, j) = F.add(r(i, j), F.mul(xik, y(k, j)));
    }
  return r;
}

Mat8 transpose(const Mat8& x) {
  Mat8 r;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) r(i, j) = x(j, i);
  return r;
}

bool is_upper_unitriangular(const Mat8& x) {
  for (int i = 1; i <= 8; ++i) {
    if (x(i, i).v != 1) return false;
    for (int j = 1; j < i; ++j)
      if (x(i, j).v != 0) return false;
  }
  return true;
}

Mat8 unitri_mul(const FieldTower& F, const Mat8& x, const Mat8& y) {
  Mat8 r = identity8();
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      Fq3 s = F.add(x(i, j), y(i, j));
      for (int k = i + 1; k < j; ++k) s = F.add(s, F.mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

Mat8 unitri_inv(const FieldTower& F, const Mat8& x) {
  // Solve x * r = I column by column from the bottom.
  Mat8 r = identity8();
  for (int j = 1; j <= 8; ++j)
    for (int i = j - 1; i >= 1; --i) {
      Fq3 s{0};
      for (int k = i + 1; k <= j; ++k) s = F.add(s, F.mul(x(i, k), r(k, j)));
      r(i, j) = F.neg(s);
    }
  return r;
}

Mat8 mat_inv(const FieldTower& F, const Mat8& x) {
  Mat8 a = x, r = identity8();
  for (int c = 1; c <= 8; ++c) {
    int pivot = 0;
    for (int i = c; i <= 8; ++i)
      if (a(i, c).v != 0) {
        pivot = i;
        break;
      }
    if (pivot == 0) throw Error(ErrorKind::DivisionByZero, "singular matrix");
    if (pivot != c)
      for (int j = 1; j <= 8; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(r(pivot, j), r(c, j));
      }
    const Fq3 s = F.inv(a(c, c));
    for (int j = 1; j <= 8; ++j) {
      a(c, j) = F.mul(s, a(c, j));
      r(c, j) = F.mul(s, r(c, j));
    }
    for (int i = 1; i <= 8; ++i) {
      if (i == c || a(i, c).v == 0) continue;
      const Fq3 f = a(i, c);
      for (int j = 1; j <= 8; ++j) {
        a(i, j) = F.sub(a(i, j), F.mul(f, a(c, j)));
        r(i, j) = F.sub(r(i, j), F.mul(f, r(c, j)));
      }
    }
  }
  return r;
}

}  // namespace tri3d4
