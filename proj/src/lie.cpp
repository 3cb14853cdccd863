#include "poscurv/lie.hpp"

#include <stdexcept>

namespace poscurv::lie {

namespace {

BigInt factorial(long k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

GroupFactor normalize(Family f, long rank) {
  if (f == Family::torus) {
    if (rank < 0) throw domain_error("group: torus rank must be >= 0");
    return GroupFactor{f, rank};
  }
  if (rank < 1) throw domain_error("group: rank must be >= 1 for families A-D");
  if (f == Family::D && rank == 1) return GroupFactor{Family::torus, 1};
  return GroupFactor{f, rank};
}

BigInt factor_weyl_order(const GroupFactor& g) {
  switch (g.family) {
    case Family::A:
      return factorial(g.rank + 1);
    case Family::B:
    case Family::C:
      return pow_int(2, static_cast<unsigned long>(g.rank)) * factorial(g.rank);
    case Family::D:
      return pow_int(2, static_cast<unsigned long>(g.rank - 1)) * factorial(g.rank);
    case Family::torus:
      return BigInt(1);
  }
  throw domain_error("group: unknown family");
}

}  // namespace

GroupDescriptor GroupDescriptor::simple(Family f, long rank) {
  return GroupDescriptor{{normalize(f, rank)}};
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupFactor> fs) {
  GroupDescriptor g;
  g.factors.reserve(fs.size());
  for (const auto& f : fs) g.factors.push_back(normalize(f.family, f.rank));
  return g;
}

BigInt weyl_order(const GroupDescriptor& g) {
  BigInt order = 1;
  for (const auto& f : g.factors) order *= factor_weyl_order(f);
  return order;
}

GroupDescriptor so_group(long k) {
  if (k < 1) throw domain_error("so_group: k must be >= 1");
  if (k == 1) return GroupDescriptor::simple(Family::torus, 0);  // trivial group
  if (k == 2) return GroupDescriptor::simple(Family::torus, 1);
  if (k % 2 == 1) return GroupDescriptor::simple(Family::B, (k - 1) / 2);
  return GroupDescriptor::simple(Family::D, k / 2);
}

SpaceDescriptor SpaceDescriptor::sphere(long d) {
  if (d < 0) throw domain_error("sphere: dimension must be >= 0");
  return SpaceDescriptor{SpaceKind::sphere, d, 0, {}};
}
SpaceDescriptor SpaceDescriptor::complex_projective(long m) {
  if (m < 1) throw domain_error("complex_projective: index must be >= 1");
  return SpaceDescriptor{SpaceKind::complex_projective, m, 0, {}};
}
SpaceDescriptor SpaceDescriptor::quaternionic_projective(long m) {
  if (m < 1) throw domain_error("quaternionic_projective: index must be >= 1");
  return SpaceDescriptor{SpaceKind::quaternionic_projective, m, 0, {}};
}
SpaceDescriptor SpaceDescriptor::cayley_plane() {
  return SpaceDescriptor{SpaceKind::cayley_plane, 0, 0, {}};
}
SpaceDescriptor SpaceDescriptor::real_grassmannian(long p, long m) {
  if (p != 2 && p != 3) throw domain_error("real_grassmannian: p must be 2 or 3");
  if (m < 1) throw domain_error("real_grassmannian: m must be >= 1");
  if (p == 3 && m % 2 != 0)
    throw domain_error("real_grassmannian: p = 3 requires even m (unequal rank otherwise)");
  return SpaceDescriptor{SpaceKind::real_grassmannian, p, m, {}};
}
SpaceDescriptor SpaceDescriptor::product(std::vector<SpaceDescriptor> fs) {
  if (fs.empty()) throw domain_error("product: needs at least one factor");
  SpaceDescriptor s{SpaceKind::product, 0, 0, std::move(fs)};
  return s;
}

namespace {

BigInt grassmannian_chi(long p, long m) {
  BigInt formula;
  if (p == 2)
    formula = m % 2 == 0 ? m + 2 : m + 1;
  else
    formula = m + 2;  // even m enforced at construction
  BigInt quotient = weyl_order(so_group(p + m));
  BigInt h = weyl_order(so_group(p)) * weyl_order(so_group(m));
  if (quotient % h != 0 || quotient / h != formula)
    throw std::logic_error("grassmannian chi: closed formula and Weyl quotient disagree");
  return formula;
}

}  // namespace

BigInt euler_characteristic(const SpaceDescriptor& s) {
  switch (s.kind) {
    case SpaceKind::sphere:
      return BigInt(s.a % 2 == 0 ? 2 : 0);
    case SpaceKind::complex_projective:
      return BigInt(s.a + 1);
    case SpaceKind::quaternionic_projective:
      return BigInt(s.a + 1);
    case SpaceKind::cayley_plane:
      return BigInt(3);  // standard value; not derived here
    case SpaceKind::real_grassmannian:
      return grassmannian_chi(s.a, s.b);
    case SpaceKind::product: {
      BigInt chi = 1;
      for (const auto& f : s.factors) chi *= euler_characteristic(f);
      return chi;
    }
  }
  throw domain_error("euler_characteristic: unknown space kind");
}

long dimension(const SpaceDescriptor& s) {
  switch (s.kind) {
    case SpaceKind::sphere:
      return s.a;
    case SpaceKind::complex_projective:
      return 2 * s.a;
    case SpaceKind::quaternionic_projective:
      return 4 * s.a;
    case SpaceKind::cayley_plane:
      return 16;
    case SpaceKind::real_grassmannian:
      return s.a * s.b;
    case SpaceKind::product: {
      long d = 0;
      for (const auto& f : s.factors) d += dimension(f);
      return d;
    }
  }
  throw domain_error("dimension: unknown space kind");
}

}  // namespace poscurv::lie
