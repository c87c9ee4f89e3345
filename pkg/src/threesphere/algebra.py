"""Dense Clifford algebra of Euclidean 3-space and its even subalgebra.

The full algebra is eight dimensional.  A :class:`Multivector` stores its
coefficients in the fixed order

    ``(1, e_x, e_y, e_z, e_y^e_z, e_z^e_x, e_x^e_y, e_x^e_y^e_z)``

where the orthonormal vectors square to ``+1`` and anticommute; that rule
determines every other basis product.  The bivectors are stored in the
order dual to the vectors, so that multiplying a vector by the unit
volume element is a plain componentwise copy.

The even part (scalar plus the three bivectors) is closed under the
geometric product and is isomorphic to the quaternions; its unit elements
form the 3-sphere, and the pure unit bivectors form the equatorial
2-sphere inside it.  :class:`Handedness` picks the orientation of the
volume element.  The multiplication table itself is fixed right-handed;
the left-handed convention is obtained by carrying the orientation sign
through the vector-to-bivector duality and through the cross-product term
of the oriented product (see :func:`oriented_even_product`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Multivector",
    "Vector3",
    "Handedness",
    "EvenElement",
    "RIGHT_HANDED",
    "LEFT_HANDED",
    "ONE",
    "E_X",
    "E_Y",
    "E_Z",
    "E_YZ",
    "E_ZX",
    "E_XY",
    "PSEUDOSCALAR",
    "geometric_product",
    "wedge",
    "grade_projection",
    "dual_bivector",
    "even_product",
    "oriented_even_product",
    "bivector_identity_residual",
]

_BLADE_NAMES = ("1", "e_x", "e_y", "e_z", "e_yz", "e_zx", "e_xy", "e_xyz")

# Canonical bitmask of each basis blade (bit0 = x, bit1 = y, bit2 = z) and
# its sign relative to ascending-generator order: e_z^e_x is stored, which
# is minus the canonical e_x^e_z.
_BASIS_MASKS = (0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111)
_BASIS_SIGNS = (1, 1, 1, 1, 1, -1, 1, 1)
_GRADES = (0, 1, 1, 1, 2, 2, 2, 3)


def _reordering_sign(lhs_mask: int, rhs_mask: int) -> int:
    """Sign from sorting the concatenated generators into ascending order."""
    lhs_mask >>= 1
    swaps = 0
    while lhs_mask:
        swaps += (lhs_mask & rhs_mask).bit_count()
        lhs_mask >>= 1
    return -1 if swaps & 1 else 1


def _build_tables():
    index_of = {mask: i for i, mask in enumerate(_BASIS_MASKS)}
    product = []
    exterior = []
    for i in range(8):
        product_row = []
        exterior_row = []
        for j in range(8):
            mask_i, mask_j = _BASIS_MASKS[i], _BASIS_MASKS[j]
            k = index_of[mask_i ^ mask_j]
            sign = (
                _BASIS_SIGNS[i]
                * _BASIS_SIGNS[j]
                * _reordering_sign(mask_i, mask_j)
                * _BASIS_SIGNS[k]
            )
            product_row.append((sign, k))
            # The exterior product keeps only the grade-raising part, which
            # for basis blades means the generator sets must be disjoint.
            exterior_row.append((sign, k) if mask_i & mask_j == 0 else (0, k))
        product.append(tuple(product_row))
        exterior.append(tuple(exterior_row))
    return tuple(product), tuple(exterior)


_PRODUCT_TABLE, _WEDGE_TABLE = _build_tables()


@dataclass(frozen=True)
class Multivector:
    """Element of the eight-dimensional algebra, dense coefficient form."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != 8:
            raise ValueError("a multivector needs exactly 8 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        return cls((value, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def vector(cls, x: float, y: float, z: float) -> "Multivector":
        return cls((0.0, x, y, z, 0.0, 0.0, 0.0, 0.0))

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Multivector":
        return Multivector(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float)):
            return Multivector(tuple(a * other for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __str__(self) -> str:
        terms = [
            f"{c:g}*{name}" if name != "1" else f"{c:g}"
            for c, name in zip(self.coeffs, _BLADE_NAMES)
            if c != 0.0
        ]
        return " + ".join(terms) if terms else "0"


def geometric_product(lhs: Multivector, rhs: Multivector) -> Multivector:
    """Full geometric product, driven by the precomputed 8x8 blade table."""
    out = [0.0] * 8
    a = lhs.coeffs
    b = rhs.coeffs
    for i in range(8):
        ai = a[i]
        if ai == 0.0:
            continue
        row = _PRODUCT_TABLE[i]
        for j in range(8):
            bj = b[j]
            if bj == 0.0:
                continue
            sign, k = row[j]
            out[k] += sign * ai * bj
    return Multivector(tuple(out))


def wedge(lhs: Multivector, rhs: Multivector) -> Multivector:
    """Exterior (grade-raising) part of the geometric product.

    For vectors ``u`` and ``v`` this is the antisymmetric half
    ``(uv - vu) / 2``; for higher blades it keeps exactly the terms whose
    grade is the sum of the factor grades.
    """
    out = [0.0] * 8
    a = lhs.coeffs
    b = rhs.coeffs
    for i in range(8):
        ai = a[i]
        if ai == 0.0:
            continue
        row = _WEDGE_TABLE[i]
        for j in range(8):
            bj = b[j]
            if bj == 0.0:
                continue
            sign, k = row[j]
            if sign:
                out[k] += sign * ai * bj
    return Multivector(tuple(out))


def grade_projection(m: Multivector, k: int) -> Multivector:
    """Grade-``k`` part of ``m``; the four parts sum back to ``m`` exactly."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade index must be 0..3, got {k!r}")
    return Multivector(tuple(c if g == k else 0.0 for c, g in zip(m.coeffs, _GRADES)))


def _basis(i: int) -> Multivector:
    return Multivector(tuple(1.0 if j == i else 0.0 for j in range(8)))


ONE = _basis(0)
E_X = _basis(1)
E_Y = _basis(2)
E_Z = _basis(3)
E_YZ = _basis(4)
E_ZX = _basis(5)
E_XY = _basis(6)
PSEUDOSCALAR = _basis(7)


@dataclass(frozen=True)
class Vector3:
    """Direction in Euclidean 3-space."""

    x: float
    y: float
    z: float

    def dot(self, other: "Vector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vector3") -> "Vector3":
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def scaled(self, factor: float) -> "Vector3":
        return Vector3(factor * self.x, factor * self.y, factor * self.z)

    def normalized(self) -> "Vector3":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return self.scaled(1.0 / n)

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def as_multivector(self) -> Multivector:
        return Multivector.vector(self.x, self.y, self.z)


@dataclass(frozen=True)
class Handedness:
    """Orientation of the volume element: +1 right-handed, -1 left-handed.

    Negation is an involution; only the two values exist.
    """

    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"handedness sign must be +1 or -1, got {self.sign!r}")

    def __neg__(self) -> "Handedness":
        return Handedness(-self.sign)

    def as_multivector(self) -> Multivector:
        """The signed unit volume element this orientation stands for."""
        return Multivector((0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, float(self.sign)))


RIGHT_HANDED = Handedness(1)
LEFT_HANDED = Handedness(-1)


@dataclass(frozen=True)
class EvenElement:
    """Scalar plus bivector: one point of the quaternion-like even part.

    ``norm_squared() == 1`` puts the element on the unit 3-sphere; a unit
    element with zero scalar part sits on the equatorial 2-sphere.
    """

    s: float
    b_yz: float
    b_zx: float
    b_xy: float

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "b_yz", float(self.b_yz))
        object.__setattr__(self, "b_zx", float(self.b_zx))
        object.__setattr__(self, "b_xy", float(self.b_xy))

    @classmethod
    def scalar(cls, value: float) -> "EvenElement":
        return cls(value, 0.0, 0.0, 0.0)

    @classmethod
    def from_multivector(cls, m: Multivector, atol: float = 1e-12) -> "EvenElement":
        """Read an even element back out of the full algebra.

        Rejects input whose vector or trivector coefficients exceed
        ``atol``; embedding and reading back is the identity.
        """
        odd = max(abs(m.coeffs[i]) for i in (1, 2, 3, 7))
        if odd > atol:
            raise ValueError(f"multivector has odd-grade content {odd:g} beyond {atol:g}")
        return cls(m.coeffs[0], m.coeffs[4], m.coeffs[5], m.coeffs[6])

    def embed(self) -> Multivector:
        return Multivector((self.s, 0.0, 0.0, 0.0, self.b_yz, self.b_zx, self.b_xy, 0.0))

    @property
    def coeffs(self) -> tuple:
        return (self.s, self.b_yz, self.b_zx, self.b_xy)

    def norm_squared(self) -> float:
        return self.s * self.s + self.b_yz * self.b_yz + self.b_zx * self.b_zx + self.b_xy * self.b_xy

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def conjugate(self) -> "EvenElement":
        """Reversion: negates the bivector part, inverts unit elements."""
        return EvenElement(self.s, -self.b_yz, -self.b_zx, -self.b_xy)

    def inverse(self) -> "EvenElement":
        ns = self.norm_squared()
        if ns == 0.0:
            raise ValueError("the zero element has no inverse")
        return EvenElement(self.s / ns, -self.b_yz / ns, -self.b_zx / ns, -self.b_xy / ns)

    def normalized(self) -> "EvenElement":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero element")
        return EvenElement(self.s / n, self.b_yz / n, self.b_zx / n, self.b_xy / n)

    def __add__(self, other: "EvenElement") -> "EvenElement":
        return EvenElement(
            self.s + other.s,
            self.b_yz + other.b_yz,
            self.b_zx + other.b_zx,
            self.b_xy + other.b_xy,
        )

    def __sub__(self, other: "EvenElement") -> "EvenElement":
        return EvenElement(
            self.s - other.s,
            self.b_yz - other.b_yz,
            self.b_zx - other.b_zx,
            self.b_xy - other.b_xy,
        )

    def __neg__(self) -> "EvenElement":
        return EvenElement(-self.s, -self.b_yz, -self.b_zx, -self.b_xy)

    def __mul__(self, other):
        if isinstance(other, EvenElement):
            return even_product(self, other)
        if isinstance(other, (int, float)):
            return EvenElement(self.s * other, self.b_yz * other, self.b_zx * other, self.b_xy * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented


def dual_bivector(handedness: Handedness, direction: Vector3) -> EvenElement:
    """Bivector dual to ``direction`` under the given orientation.

    With right-handed orientation the components copy straight across:
    ``x -> e_yz``, ``y -> e_zx``, ``z -> e_xy``; the left-handed dual is
    the negation.  The scalar part is exactly zero, so unit directions
    land on the equatorial 2-sphere.
    """
    sign = float(handedness.sign)
    return EvenElement(0.0, sign * direction.x, sign * direction.y, sign * direction.z)


def even_product(lhs: EvenElement, rhs: EvenElement) -> EvenElement:
    """Product of even elements in the fixed right-handed convention.

    Agrees with :func:`geometric_product` after embedding; unit bivectors
    obey ``(dual e_j)(dual e_k) = -delta_jk - eps_jkl (dual e_l)``, and the
    norm is multiplicative, which is exactly the closure of the 3-sphere.
    """
    s1, u1, u2, u3 = lhs.s, lhs.b_yz, lhs.b_zx, lhs.b_xy
    s2, v1, v2, v3 = rhs.s, rhs.b_yz, rhs.b_zx, rhs.b_xy
    return EvenElement(
        s1 * s2 - (u1 * v1 + u2 * v2 + u3 * v3),
        s1 * v1 + s2 * u1 - (u2 * v3 - u3 * v2),
        s1 * v2 + s2 * u2 - (u3 * v1 - u1 * v3),
        s1 * v3 + s2 * u3 - (u1 * v2 - u2 * v1),
    )


def oriented_even_product(handedness: Handedness, lhs: EvenElement, rhs: EvenElement) -> EvenElement:
    """Product of even elements taken in the basis the orientation selects.

    Re-expressing both factors in the basis of left-handed bivectors,
    multiplying with the fixed table, and mapping back flips the sign of
    the cross-product term only.  Right-handed orientation therefore
    reduces to :func:`even_product`; either way the scalar part and the
    norm are unchanged, so closure of the 3-sphere is orientation-free.
    """
    h = float(handedness.sign)
    s1, u1, u2, u3 = lhs.s, lhs.b_yz, lhs.b_zx, lhs.b_xy
    s2, v1, v2, v3 = rhs.s, rhs.b_yz, rhs.b_zx, rhs.b_xy
    return EvenElement(
        s1 * s2 - (u1 * v1 + u2 * v2 + u3 * v3),
        s1 * v1 + s2 * u1 - h * (u2 * v3 - u3 * v2),
        s1 * v2 + s2 * u2 - h * (u3 * v1 - u1 * v3),
        s1 * v3 + s2 * u3 - h * (u1 * v2 - u2 * v1),
    )


def bivector_identity_residual(handedness: Handedness, a: Vector3, b: Vector3) -> EvenElement:
    """Residual of the dual-bivector product identity; zero for all inputs.

    The product of the duals of ``a`` and ``b`` equals minus their dot
    product minus the dual of their cross product, provided the cross
    product is taken with the same handedness that defines the duals.
    The returned element is that product plus the dot and cross terms, so
    every coefficient vanishes up to rounding.
    """
    product = even_product(dual_bivector(handedness, a), dual_bivector(handedness, b))
    oriented_cross = a.cross(b).scaled(float(handedness.sign))
    return product + EvenElement.scalar(a.dot(b)) + dual_bivector(handedness, oriented_cross)
