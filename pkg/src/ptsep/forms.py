"""Multihomogeneous forms as coefficient vectors over the monomial basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .degrees import MultiDegree, SpaceShape, degree_add, monomial_basis
from .errors import LengthMismatch
from .points import ProjPoint


def eval_exponent(exps: tuple[int, ...], point: ProjPoint) -> int:
    """Value of a flat exponent tuple at the point's integer representative."""
    if len(exps) != sum(len(vec) for vec in point.eval_coords):
        raise LengthMismatch("exponent tuple does not match the point's ambient space")
    val = 1
    pos = 0
    for vec in point.eval_coords:
        for c in vec:
            e = exps[pos]
            if e:
                val *= c**e
            pos += 1
    return val


@dataclass(frozen=True)
class MultiForm:
    """A nonzero multihomogeneous polynomial of one fixed multidegree."""

    shape: SpaceShape
    degree: MultiDegree
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = len(monomial_basis(self.shape, self.degree))
        if len(self.coeffs) != n:
            raise LengthMismatch(
                f"degree {self.degree} needs {n} coefficients, got {len(self.coeffs)}"
            )
        if all(c == 0 for c in self.coeffs):
            raise ValueError("zero form")

    @classmethod
    def from_coeffs(cls, shape: SpaceShape, degree: MultiDegree, coeffs) -> "MultiForm":
        return cls(shape, degree, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def from_monomials(
        cls, shape: SpaceShape, degree: MultiDegree, terms: dict[tuple[int, ...], Fraction]
    ) -> "MultiForm":
        basis = monomial_basis(shape, degree)
        coeffs = [Fraction(terms.get(m, 0)) for m in basis]
        return cls(shape, degree, tuple(coeffs))

    @classmethod
    def constant_one(cls, shape: SpaceShape) -> "MultiForm":
        return cls(shape, shape.zero(), (Fraction(1),))

    def monomials(self) -> dict[tuple[int, ...], Fraction]:
        basis = monomial_basis(self.shape, self.degree)
        return {m: c for m, c in zip(basis, self.coeffs) if c != 0}

    def evaluate(self, point: ProjPoint) -> Fraction:
        """Exact value at the point's integer evaluation representative."""
        basis = monomial_basis(self.shape, self.degree)
        total = Fraction(0)
        for m, c in zip(basis, self.coeffs):
            if c:
                total += c * eval_exponent(m, point)
        return total

    def normalized(self) -> "MultiForm":
        """Scale so the first nonzero coefficient (in basis order) is 1."""
        lead = next(c for c in self.coeffs if c)
        if lead == 1:
            return self
        return MultiForm(self.shape, self.degree, tuple(c / lead for c in self.coeffs))

    def __mul__(self, other: "MultiForm") -> "MultiForm":
        if self.shape != other.shape:
            raise LengthMismatch("forms live over different shapes")
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.monomials().items():
            for m2, c2 in other.monomials().items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiForm.from_monomials(
            self.shape, degree_add(self.degree, other.degree), out
        )

    def is_proportional_to(self, other: "MultiForm") -> bool:
        return (
            self.degree == other.degree
            and self.normalized().coeffs == other.normalized().coeffs
        )


def linear_form(shape: SpaceShape, factor: int, coeffs) -> MultiForm:
    """The form sum_l coeffs[l] * x_{factor,l} of degree e_factor."""
    n = shape.dims[factor]
    if len(coeffs) != n + 1:
        raise LengthMismatch(f"factor {factor} has {n + 1} variables")
    offset = shape.block_offsets()[factor]
    terms = {}
    for l, c in enumerate(coeffs):
        if c:
            exps = [0] * shape.num_vars
            exps[offset + l] = 1
            terms[tuple(exps)] = Fraction(c)
    return MultiForm.from_monomials(shape, shape.unit(factor), terms)


def vanishing_linear_form(shape: SpaceShape, factor: int, coords) -> MultiForm:
    """For a P^1 factor, the unique (up to scalar) linear form through [a : b].

    That form is b*x0 - a*x1.
    """
    if shape.dims[factor] != 1:
        raise LengthMismatch("vanishing form shortcut needs a P^1 factor")
    a, b = (Fraction(c) for c in coords)
    return linear_form(shape, factor, (b, -a))


def product_of_forms(forms) -> MultiForm:
    forms = list(forms)
    out = forms[0]
    for f in forms[1:]:
        out = out * f
    return out
