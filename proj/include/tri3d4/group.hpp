#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tri3d4/chevalley.hpp"
#include "tri3d4/random.hpp"

namespace tri3d4 {

UElem root_uelem(const FieldTower& F, int i, Fq3 t);

// Reads t1..t6 off the first two rows; throws NotInU unless m is exactly the closed-form matrix.
UElem extract_params(const FieldTower& F, const Mat8& m);
bool in_u(const FieldTower& F, const Mat8& m);

UElem u_mul(const FieldTower& F, const UElem& a, const UElem& b);
UElem u_inv(const FieldTower& F, const UElem& a);
UElem u_conj(const FieldTower& F, const UElem& u, const UElem& g);  // g^{-1} u g

// [x_i(ti), x_j(tj)] = x_i^{-1} x_j^{-1} x_i x_j through matrices
UElem commutator(const FieldTower& F, int i, Fq3 ti, int j, Fq3 tj);
// The same commutator from the tabulated relations of the root subgroups.
UElem commutator_formula(const FieldTower& F, int i, Fq3 ti, int j, Fq3 tj);

// x_i(b) for b running through an F_p-basis of the parameter field; these generate U.
struct RootGen {
  int i;
  Fq3 t;
};
std::vector<RootGen> generators(const FieldTower& F);

// Intermediate group G: upper unitriangular with the linked entries of the twisted shape.
bool in_g(const FieldTower& F, const Mat8& m);

struct GFactor {
  int i, j;
  Fq3 t;
};
// Positions of the J-double-dot set in row-major order.
const std::vector<std::pair<int, int>>& g_positions();
bool g_position_in_fq(int i, int j);
Mat8 g_factor_matrix(const FieldTower& F, int i, int j, Fq3 t);
Mat8 g_compose(const FieldTower& F, const std::vector<GFactor>& factors);
// Parameters of m as the row-major product over all positions; throws NotInG.
std::vector<GFactor> g_decompose(const FieldTower& F, const Mat8& m);

std::uint64_t u_order(const FieldTower& F);
UElem u_from_index(const FieldTower& F, std::uint64_t index);
std::uint64_t u_index(const FieldTower& F, const UElem& u);
// Visits all of U in index order; throws TooLarge beyond 2^24 elements.
void enumerate_u(const FieldTower& F, const std::function<void(const UElem&)>& visit);

UElem random_u(const FieldTower& F, Rng& rng);
std::vector<GFactor> random_g_factors(const FieldTower& F, Rng& rng);
Mat8 random_g(const FieldTower& F, Rng& rng);

}  // namespace tri3d4
