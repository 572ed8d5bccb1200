#include "goursat/distributivity.hpp"

namespace goursat {

LatticeVerdict is_distributive(const CongruenceLattice& lattice) {
  const std::size_t m = lattice.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t lhs = lattice.meet(a, lattice.join(b, c));
        const std::size_t rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c));
        if (lhs != rhs) return LatticeVerdict{false, std::array<std::size_t, 3>{a, b, c}};
      }
  return {};
}

namespace {

// Runs `value(q, r, s)` -> (lhs, rhs) over all r, s, then quotient.
template <typename Fn>
ImageVerdict sweep_quotients(const FiniteAlgebra& alg, const CongruenceLattice& lat, Fn&& value) {
  std::vector<QuotientMap> quotients;
  for (const auto& theta : lat.elements()) quotients.push_back(quotient(alg, theta));
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j)
      for (std::size_t t = 0; t < lat.size(); ++t) {
        auto [lhs, rhs] = value(quotients[t], i, j);
        if (lhs != rhs)
          return ImageVerdict{false, ImageWitness{lat[t], lat[i], lat[j], std::move(lhs), std::move(rhs)}};
      }
  return {};
}

}  // namespace

ImageVerdict image_meet_check(const FiniteAlgebra& alg, const LatticeOptions& options) {
  const CongruenceLattice lat = con_lattice(alg, options);
  return sweep_quotients(alg, lat, [&](const QuotientMap& q, std::size_t i, std::size_t j) {
    return std::pair{direct_image(q, lat[lat.meet(i, j)]),
                     direct_image(q, lat[i]).meet(direct_image(q, lat[j]))};
  });
}

ImageVerdict check_axiom7(const FiniteAlgebra& alg, const SubvarietySpec& v, const LatticeOptions& options) {
  const ClosureOperator op(v);
  const CongruenceLattice lat = con_lattice(alg, options);
  std::vector<Partition> closures;
  for (const auto& s : lat.elements()) closures.push_back(op.closure(alg, s));
  return sweep_quotients(alg, lat, [&](const QuotientMap& q, std::size_t i, std::size_t j) {
    Partition lhs = direct_image(q, closures[lat.meet(i, j)]);
    Partition rhs = op.closure(q.target, direct_image(q, lat[i]))
                        .meet(op.closure(q.target, direct_image(q, lat[j])));
    return std::pair{std::move(lhs), std::move(rhs)};
  });
}

MeetIdentityVerdict closure_meet_identity_check(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                                const LatticeOptions& options) {
  const CongruenceLattice lat = con_lattice(alg, options);
  if (!is_distributive(lat).holds) return MeetIdentityVerdict{false, true, std::nullopt};
  const ClosureOperator op(v);
  std::vector<Partition> closures;
  for (const auto& s : lat.elements()) closures.push_back(op.closure(alg, s));
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j)
      if (!(closures[i].meet(closures[j]) == closures[lat.meet(i, j)]))
        return MeetIdentityVerdict{true, false, std::array<Partition, 2>{lat[i], lat[j]}};
  return {};
}

bool DistReport::consistent() const {
  return lattice_distributive.holds == image_meet.holds && image_meet.holds == axiom7.holds;
}

DistReport distributivity_report(const FiniteAlgebra& alg, const SubvarietySpec& v,
                                 const LatticeOptions& options) {
  CongruenceLattice lat = con_lattice(alg, options);
  LatticeVerdict dist = is_distributive(lat);
  ImageVerdict im = image_meet_check(alg, options);
  ImageVerdict ax7 = check_axiom7(alg, v, options);
  return DistReport{alg.name(), v.name, std::move(lat), std::move(dist), std::move(im), std::move(ax7)};
}

}  // namespace goursat
