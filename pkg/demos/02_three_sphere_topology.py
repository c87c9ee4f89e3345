"""The 3-sphere closes under multiplication; its equator does not.

Also shows the two constructions built on that fact: factorizing any
3-sphere point into unit factors, and the stereographic projection that
distinguishes the 2-sphere from the plane.

Run with: python3 demos/02_three_sphere_topology.py
"""

import math

import numpy as np

from threesphere import (
    EvenElement,
    PlanePoint,
    S2Point,
    Vector3,
    even_product,
    factorize_s3_point,
    is_equatorial,
    is_unit_s3,
    NorthPoleError,
    s2_nonclosure_witness,
    stereographic_project,
    stereographic_unproject,
)

rng = np.random.default_rng(7)

# Any two unit even elements multiply to another unit even element.
w1, w2 = rng.standard_normal(4), rng.standard_normal(4)
p = EvenElement(*(w1 / np.sqrt(w1 @ w1)))
q = EvenElement(*(w2 / np.sqrt(w2 @ w2)))
print("p, q on the sphere:", is_unit_s3(p), is_unit_s3(q))
print("pq on the sphere:  ", is_unit_s3(even_product(p, q)))

# The equator (pure unit bivectors) is not closed: unless the two
# directions are orthogonal, the product picks up a scalar part equal
# to minus their dot product.
a = Vector3(1.0, 0.0, 0.0)
b = Vector3(math.sqrt(2) / 2, math.sqrt(2) / 2, 0.0)
witness = s2_nonclosure_witness(a, b)
print("equatorial product:", witness.coeffs)
print("still equatorial?  ", is_equatorial(witness), "(scalar part -a.b =", witness.s, ")")

# Going the other way, any point of the 3-sphere factors into as many
# unit pieces as you like; multiplying them back recovers the target.
target = even_product(p, q)
factors = factorize_s3_point(target, 6, seed=42)
product = factors[0]
for f in factors[1:]:
    product = even_product(product, f)
gap = max(abs(x - y) for x, y in zip(product.coeffs, target.coeffs))
print(f"six unit factors, reassembly gap {gap:.3e}")

# The stereographic projection maps the 2-sphere minus one point onto
# the whole plane; the round trip is exact to machine precision.
point = S2Point.from_direction(0.3, -1.2, 0.5)
image = stereographic_project(point)
back = stereographic_unproject(image)
print("sphere -> plane -> sphere:", (back.x - point.x, back.y - point.y, back.z - point.z))

# The missing point is the projection pole itself.
try:
    stereographic_project(S2Point(0.0, 0.0, 1.0))
except NorthPoleError as exc:
    print("north pole:", exc)

print("plane origin comes from the south pole:", stereographic_unproject(PlanePoint(0.0, 0.0)))
