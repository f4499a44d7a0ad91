#pragma once

#include "vngeom/group.hpp"
#include "vngeom/numerics.hpp"

// Elements of the group algebra C[G] are coefficient vectors a with
// a = sum_s a[s] lambda_s.
namespace vngeom::algebra {

CVector unit(const FiniteGroup& g);
CVector basis(const FiniteGroup& g, Elem s);

/// (ab)[u] = sum_{st = u} a[s] b[t]
CVector multiply(const FiniteGroup& g, const CVector& a, const CVector& b);
/// a*[s] = conj(a[s^-1])
CVector adjoint(const FiniteGroup& g, const CVector& a);
/// Normalized trace tau(a) = a[e].
Complex trace(const FiniteGroup& g, const CVector& a);
/// tau(ab) = sum_s a[s] b[s^-1]
Complex trace_of_product(const FiniteGroup& g, const CVector& a, const CVector& b);

/// Left regular image L(a) = sum_s a[s] lambda_s, entry (r, c) = a[r c^-1].
CMatrix regular_image(const FiniteGroup& g, const CVector& a);
/// Inverse of regular_image on its range: the identity column of M.
CVector from_regular_image(const FiniteGroup& g, const CMatrix& m);

CVector random_element(const FiniteGroup& g, Rng& rng);
CVector random_self_adjoint(const FiniteGroup& g, Rng& rng);

void require_size(const FiniteGroup& g, const CVector& a, const char* what);

}  // namespace vngeom::algebra
