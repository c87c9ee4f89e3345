"""Tour of the algebra layer: products, duality, and the even subalgebra.

Run with: python3 demos/01_algebra_basics.py
"""

import numpy as np

from threesphere import (
    E_X,
    E_XY,
    E_Y,
    E_Z,
    LEFT_HANDED,
    PSEUDOSCALAR,
    RIGHT_HANDED,
    EvenElement,
    Vector3,
    bivector_identity_residual,
    dual_bivector,
    even_product,
    geometric_product,
    wedge,
)

# The eight-dimensional algebra is generated by three orthonormal vectors.
# Parallel vectors multiply to a scalar, orthogonal ones to a bivector.
print("e_x e_x =", geometric_product(E_X, E_X))
print("e_x e_y =", geometric_product(E_X, E_Y))
print("e_x ^ e_y =", wedge(E_X, E_Y))

# The unit volume element squares to -1 and turns vectors into the
# bivectors of the planes perpendicular to them.
print("volume^2 =", geometric_product(PSEUDOSCALAR, PSEUDOSCALAR))
print("volume e_z =", geometric_product(PSEUDOSCALAR, E_Z))

# The same duality lives on the even side of the algebra, parameterized
# by an orientation: the left-handed dual is the negated right-handed one.
direction = Vector3(0.6, 0.8, 0.0)
print("right dual:", dual_bivector(RIGHT_HANDED, direction))
print("left dual: ", dual_bivector(LEFT_HANDED, direction))

# Unit bivectors multiply like quaternion units with the opposite sign
# convention: (dual e_x)(dual e_y) = -(dual e_z).
ix = dual_bivector(RIGHT_HANDED, Vector3(1, 0, 0))
iy = dual_bivector(RIGHT_HANDED, Vector3(0, 1, 0))
print("(dual e_x)(dual e_y) =", even_product(ix, iy))

# For generic directions the product of two duals is minus the dot
# product minus the dual of the (orientation-matched) cross product.
# The packaged residual is zero to machine precision for either
# orientation; here is the worst over a thousand random direction pairs.
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(1000):
    a = Vector3(*rng.standard_normal(3))
    b = Vector3(*rng.standard_normal(3))
    for handed in (RIGHT_HANDED, LEFT_HANDED):
        residual = bivector_identity_residual(handed, a, b)
        worst = max(worst, max(abs(c) for c in residual.coeffs))
print(f"worst identity residual over 1000 pairs: {worst:.3e}")

# The even part is closed: multiplying two generic scalar-plus-bivector
# elements never produces a vector or trivector term, and the norm is
# multiplicative, which is what makes the unit elements a 3-sphere.
p = EvenElement(0.3, -0.4, 0.1, 0.9)
q = EvenElement(-0.7, 0.2, 0.5, 0.4)
pq = even_product(p, q)
print("product:", pq.coeffs)
print("norm(pq) - norm(p) norm(q) =", pq.norm() - p.norm() * q.norm())
print("embedded product odd part:", geometric_product(p.embed(), q.embed()).coeffs[1:4])
print("as multivector:", E_XY + 2 * E_X)
