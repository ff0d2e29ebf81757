#include "toricjl/jump_loci.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricjl {

bool SubspaceFamily::contains_subset(VertexSet w) const {
  return std::any_of(members.begin(), members.end(), [w](VertexSet m) { return (w & ~m) == 0; });
}

SubspaceFamily strata(const SimplicialComplex& l, const FieldSpec& k, std::size_t i, std::size_t d, std::size_t cap) {
  if (i < 1 || d < 1) throw std::invalid_argument("strata: i and d must be at least 1");
  const std::vector<std::size_t> verts = face_vertices(l.vertices());
  const std::size_t n = verts.size();
  if (n > cap)
    throw std::invalid_argument("strata: " + std::to_string(n) + " vertices exceed the enumeration cap of " +
                                std::to_string(cap) + "; use resonance_membership for targeted queries");
  auto expand = [&](std::uint64_t mask) {
    VertexSet w = 0;
    for (std::size_t b = 0; b < n; ++b)
      if ((mask >> b) & 1) w |= singleton(verts[b]);
    return w;
  };

  SubspaceFamily fam{i, d, k, {}};
  std::vector<bool> qualified(std::size_t(1) << n, false);
  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) by_size[face_size(mask)].push_back(mask);

  for (std::size_t s = n + 1; s-- > 0;)
    for (std::uint64_t mask : by_size[s]) {
      if (qualified[mask]) continue;
      const VertexSet w = expand(mask);
      const auto beta = aomoto_betti_direct(l, indicator_class(w, l.ambient_size()), k, i);
      if (beta[i] < d) continue;
      fam.members.push_back(w);
      for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        qualified[sub] = true;
        if (sub == 0) break;
      }
    }
  std::sort(fam.members.begin(), fam.members.end(),
            [](VertexSet a, VertexSet b) { return face_vertices(a) < face_vertices(b); });
  return fam;
}

bool resonance_membership(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k, std::size_t i,
                          std::size_t d) {
  return aomoto_betti_direct(l, z, k, i)[i] >= d;
}

std::vector<std::size_t> local_system_betti(const SimplicialComplex& l, const std::vector<Rational>& rho,
                                            const FieldSpec& k, std::size_t i_max) {
  if (rho.size() < l.ambient_size()) throw std::invalid_argument("local system needs one value per vertex");
  DegreeOneClass z(rho.size(), Rational(0));
  with_scalar(k, [&]<class T>(std::type_identity<T>) {
    for (std::size_t v = 0; v < rho.size(); ++v) {
      if (is_zero(scalar<T>(rho[v], k)))
        throw std::invalid_argument("local system value at vertex " + std::to_string(v) + " is not a unit");
      z[v] = rho[v] - 1;
    }
  });
  return aomoto_betti_direct(l, z, k, i_max);
}

}  // namespace toricjl
