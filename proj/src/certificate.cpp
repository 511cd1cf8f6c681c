#include "mrees/certificate.hpp"

#include "mrees/presentation.hpp"

#include <algorithm>

namespace mrees {

Certificate certify(const LeveledFamily& fam) {
  Certificate cert;
  cert.mode = fam.mode();
  cert.closure = is_closed_under_comparability(fam);
  cert.characterization = characterize(fam);
  cert.closed = cert.closure.closed;
  if (!cert.closed) return cert;

  const Basis basis = build_basis(fam);
  const auto& g = basis.elements();
  cert.basis_size = basis.size();
  cert.quadratic = std::all_of(g.begin(), g.end(), [](const MarkedBinomial& b) {
    return b.lead.degree() == 2 && b.trail.degree() == 2;
  });
  cert.squarefree_leads =
      std::all_of(g.begin(), g.end(), [](const MarkedBinomial& b) { return b.lead.is_squarefree(); });
  if (!*cert.quadratic || !*cert.squarefree_leads) return cert;

  cert.conclusions = {"koszul", "normal_domain", "cohen_macaulay"};
  cert.citations = {
      "koszul: the defining ideal has a quadratic Groebner basis (G-quadratic), hence the "
      "algebra is Koszul (Froberg)",
      "normal_domain: the toric defining ideal has a squarefree initial ideal, hence the "
      "semigroup ring is normal (Sturmfels)",
      "cohen_macaulay: a normal affine semigroup ring is Cohen-Macaulay (Hochster)",
  };
  if (fam.mode() == FamilyMode::fiber)
    cert.citations.push_back(
        "fiber mode: conclusions concern the semigroup ring generated by u_ij * x_{n+i}^(m - d_i)");
  else
    cert.citations.push_back(
        "rees mode: conclusions concern the multi-Rees algebra generated by u_ij * t_i");
  return cert;
}

} // namespace mrees
