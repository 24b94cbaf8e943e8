#ifndef SRCOT_TAYLOR_HPP
#define SRCOT_TAYLOR_HPP

#include <string>
#include <vector>

#include "srcot/complex.hpp"
#include "srcot/linalg.hpp"

namespace srcot {

/// Head of the monomial-ideal resolution: one generator e_p per non-face p,
/// relations r_{p,q} = x^{q\p} e_p - x^{p\q} e_q, second syzygies
/// r_{p,q,r} = x^{r\(p u q)} e_{p,q} - x^{q\(p u r)} e_{p,r} + x^{p\(q u r)} e_{q,r}.
struct TaylorData {
    std::vector<Face> generators;  // all non-faces, canonical order
};

/// Builds the data and spot-checks the two structural identities: applying
/// e_p -> x^p kills every relation, and the syzygy maps to zero in the
/// free module on the e_p, both at the exponent level.
TaylorData taylor(const SimplicialComplex& x, const Caps& caps = default_caps());

/// Solution spaces of the direct linear systems on M_{a-b}. All dimensions
/// are zero when the b-exponent is not squarefree.
struct MLevelSolution {
    std::vector<Face> m;                     // M_{a-b}, canonical order
    std::vector<std::vector<Rational>> hom;  // basis, values on m
    int t1 = 0;
    int t2 = 0;
};

MLevelSolution m_solution(const SimplicialComplex& x, const ExponentVector& a,
                          const ExponentVector& b,
                          const Caps& caps = default_caps());

int hom_via_m(const SimplicialComplex& x, const ExponentVector& a,
              const ExponentVector& b, const Caps& caps = default_caps());
int t1_via_m(const SimplicialComplex& x, const ExponentVector& a,
             const ExponentVector& b, const Caps& caps = default_caps());
int t2_via_m(const SimplicialComplex& x, const ExponentVector& a,
             const ExponentVector& b, const Caps& caps = default_caps());

/// "x0 x1^2" style rendering with vertex names; empty string for degree 0.
std::string render_monomial(const SimplicialComplex& x, const ExponentVector& e);

/// First-order perturbations of the minimal ideal generators induced by a
/// degree-(a - b) cocycle lambda on N_{a-b} (values in canonical N order,
/// vanishing on ~N). One rendered equation per minimal non-face p whose
/// perturbation coefficient is nonzero.
std::vector<std::string> perturbed_equations(const SimplicialComplex& x,
                                             const ExponentVector& a, Face b,
                                             const std::vector<Rational>& lambda,
                                             const Caps& caps = default_caps());

} // namespace srcot

#endif
