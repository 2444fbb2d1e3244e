#pragma once

#include <array>

#include "tri3d4/field_tower.hpp"

namespace tri3d4 {

// 8x8 matrix over F_{q^3}. Accessors are 1-based to match the usual (i, j) entry labels.
struct Mat8 {
  std::array<Fq3, 64> a{};

  Fq3& operator()(int i, int j) { return a[(i - 1) * 8 + (j - 1)]; }
  Fq3 operator()(int i, int j) const { return a[(i - 1) * 8 + (j - 1)]; }
  friend bool operator==(const Mat8&, const Mat8&) = default;
};

Mat8 identity8();
Mat8 mat_add(const FieldTower& F, const Mat8& x, const Mat8& y);
Mat8 mat_sub(const FieldTower& F, const Mat8& x, const Mat8& y);
Mat8 mat_scale(const FieldTower& F, Fq3 s, const Mat8& x);
Mat8 mat_mul(const FieldTower& F, const Mat8& x, const Mat8& y);
Mat8 transpose(const Mat8& x);

bool is_upper_unitriangular(const Mat8& x);
// Product of two upper unitriangular matrices, skipping the known zeros.
Mat8 unitri_mul(const FieldTower& F, const Mat8& x, const Mat8& y);
// Inverse of an upper unitriangular matrix by back substitution.
Mat8 unitri_inv(const FieldTower& F, const Mat8& x);
// General inverse by Gauss-Jordan; throws DivisionByZero when singular.
Mat8 mat_inv(const FieldTower& F, const Mat8& x);

}  // namespace tri3d4
