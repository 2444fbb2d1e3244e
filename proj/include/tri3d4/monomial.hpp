#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tri3d4/cyclotomic.hpp"
#include "tri3d4/group.hpp"

namespace tri3d4 {

// An element of V. The (1,4) coordinate is a15^q and is never stored.
struct Pattern {
  Fq3 a12{};
  Fq3 a13{};
  Fq3 a15{};
  Fq a16{};
  Fq a17{};
  Fq a23{};
  friend constexpr auto operator<=>(const Pattern&, const Pattern&) = default;
};

inline Fq3 a14(const FieldTower& F, const Pattern& A) { return F.frob(A.a15); }

Mat8 to_matrix(const FieldTower& F, const Pattern& A);
Pattern pattern_add(const FieldTower& F, const Pattern& A, const Pattern& B);
Pattern pattern_sub(const FieldTower& F, const Pattern& A, const Pattern& B);
bool is_zero(const Pattern& A);

// Zeroes every entry outside J.
Mat8 pi_J(const Mat8& m);
// Projection of V0 onto V along the complement cut out by kappa_q.
Pattern pi(const FieldTower& F, const Mat8& m);
bool in_v(const FieldTower& F, const Mat8& m);
bool in_v_perp(const FieldTower& F, const Mat8& m);

Fq3 kappa(const FieldTower& F, const Mat8& a, const Mat8& b);
Fq kappa_q(const FieldTower& F, const Mat8& a, const Mat8& b);
Fq kappa_q(const FieldTower& F, const Pattern& A, const Pattern& B);

// f(g) = pi(g)
Pattern cocycle_f(const FieldTower& F, const Mat8& g);
Pattern f_closed(const FieldTower& F, const UElem& u);
UElem f_inverse(const FieldTower& F, const Pattern& A);

// A o g = pi(A g)
Pattern act_circ(const FieldTower& F, const Pattern& A, const Mat8& g);
// A . g = pi(A g^{-T}), with g^{-T} taken literally as inverse then transpose
Pattern act_dot(const FieldTower& F, const Pattern& A, const Mat8& g);
// Same action when the inverse h = g^{-1} is already known.
Pattern act_dot_inv(const FieldTower& F, const Pattern& A, const Mat8& h);
Pattern act_dot(const FieldTower& F, const Pattern& A, const UElem& u);
// u . A = A - pi_q(t1 A13) e23
Pattern act_left(const FieldTower& F, const UElem& u, const Pattern& A);
Pattern act_left_matrix(const FieldTower& F, const UElem& u, const Pattern& A);

// chi_A(u) = theta(kappa_q(A, f(u)))
std::uint32_t chi_exponent(const FieldTower& F, const Pattern& A, const UElem& u);
CycInt chi(const FieldTower& F, const Pattern& A, const UElem& u);

std::uint64_t pattern_count(const FieldTower& F);
Pattern pattern_from_index(const FieldTower& F, std::uint64_t index);
std::uint64_t pattern_index(const FieldTower& F, const Pattern& A);
Pattern random_pattern(const FieldTower& F, Rng& rng);

// Canonical F_q-basis of V (12 patterns) and the Gram matrix of kappa_q on it.
std::vector<Pattern> v_basis(const FieldTower& F);
std::vector<std::vector<Fq>> gram_matrix(const FieldTower& F);
std::size_t fq_rank(const FieldTower& F, std::vector<std::vector<Fq>> m);

}  // namespace tri3d4
