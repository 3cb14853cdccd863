#pragma once

#include <vector>

#include "poscurv/numeric.hpp"

// Weyl-group orders of classical groups and Euler characteristics of the
// rank-one symmetric spaces and low-rank real Grassmannians, with the
// chi(G/H) = |W(G)|/|W(H)| quotient cross-check.
namespace poscurv::lie {

enum class Family : unsigned char { A, B, C, D, torus };

struct GroupFactor {
  Family family;
  long rank;
};

struct GroupDescriptor {
  std::vector<GroupFactor> factors;

  // Validates ranks; D_1 is normalized to a torus factor.
  static GroupDescriptor simple(Family f, long rank);
  static GroupDescriptor product(std::vector<GroupFactor> fs);
};

// |W(A_k)| = (k+1)!, |W(B_k)| = |W(C_k)| = 2^k k!, |W(D_k)| = 2^{k-1} k!,
// torus factors contribute 1; products multiply.
BigInt weyl_order(const GroupDescriptor& g);

// Weyl-group descriptor of SO(k): B_{(k-1)/2} for odd k, D_{k/2} for even k,
// with SO(2) a torus and SO(1) trivial.
GroupDescriptor so_group(long k);

enum class SpaceKind : unsigned char {
  sphere,
  complex_projective,
  quaternionic_projective,
  cayley_plane,
  real_grassmannian,
  product
};

struct SpaceDescriptor {
  SpaceKind kind;
  long a = 0;  // sphere dim / projective index / grassmannian p
  long b = 0;  // grassmannian m
  std::vector<SpaceDescriptor> factors;

  static SpaceDescriptor sphere(long d);
  static SpaceDescriptor complex_projective(long m);
  static SpaceDescriptor quaternionic_projective(long m);
  static SpaceDescriptor cayley_plane();
  static SpaceDescriptor real_grassmannian(long p, long m);  // p in {2, 3}
  static SpaceDescriptor product(std::vector<SpaceDescriptor> fs);
};

// Exact chi. Grassmannians are computed both by the closed formula
// (m+2 / m+1 by parity) and by the Weyl quotient; disagreement is a logic
// error. real_grassmannian(3, m) requires even m.
BigInt euler_characteristic(const SpaceDescriptor& s);

long dimension(const SpaceDescriptor& s);

}  // namespace poscurv::lie
