"""q-dimensions of highest-weight crystals, their residues mod q^n - 1,
and principal specializations of Schur polynomials.

The q-dimension of the crystal with highest weight L is the Weyl-type product
over positive roots of (1 - q^((beta, L + rho))) / (1 - q^((beta, rho))).
All arithmetic is exact: each factor 1 - q^k is decomposed into cyclotomic
polynomials and the net exponent of every cyclotomic is nonnegative, so the
quotient is assembled by multiplication only, never polynomial division.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cartan import (
    CartanDatum,
    Root,
    Weight,
    copairing,
    corho_pairing,
    is_dominant,
    pairing,
    rho_pairing,
)
from .errors import (
    CongruenceMismatch,
    ConditionViolated,
    InternalNegativeExponent,
    NonIntegerB,
    NotDominant,
    ShapeTooLong,
)
from .partitions import Partition, as_partition
from .qpoly import (
    ONE,
    IntPoly,
    cyclotomic,
    divisors,
    mobius,
    orbit_basis_element,
    poly_to_json_coeffs,
    rem_mod,
)


def _pair_fns(datum: CartanDatum, dual: bool):
    """Weight pairing and rho pairing, classical or coroot-side."""
    if dual:
        return (
            lambda beta, lam: copairing(datum, beta, lam),
            lambda beta: corho_pairing(datum, beta),
        )
    return (
        lambda beta, lam: pairing(datum, beta, lam),
        lambda beta: rho_pairing(datum, beta),
    )


def _require_dominant(lam: Weight) -> None:
    if not is_dominant(lam):
        raise NotDominant(f"{lam} has a negative coordinate")


def _cyclotomic_exponents(datum: CartanDatum, lam: Weight, dual: bool) -> Counter:
    """Net exponent of each cyclotomic polynomial in the q-dimension product."""
    pair, rho = _pair_fns(datum, dual)
    net: Counter = Counter()
    for beta in datum.positive_roots:
        den = rho(beta)
        num = pair(beta, lam) + den
        for d in divisors(num):
            net[d] += 1
        for d in divisors(den):
            net[d] -= 1
    for d, e in net.items():
        if e < 0:
            raise InternalNegativeExponent(f"cyclotomic {d} has net exponent {e}")
    return net


def _qdim(datum: CartanDatum, lam: Weight, dual: bool) -> IntPoly:
    _require_dominant(lam)
    out = ONE
    for d, e in sorted(_cyclotomic_exponents(datum, lam, dual).items()):
        if e:
            out = out * cyclotomic(d) ** e
    return out


def qdim(datum: CartanDatum, lam: Weight) -> IntPoly:
    """q-dimension of the highest-weight crystal B(lam).

    Monic palindromic polynomial of degree 2 (rho, lam) whose value at 1 is
    the classical Weyl dimension.
    """
    return _qdim(datum, lam, dual=False)


def qdim_dual(datum: CartanDatum, lam: Weight) -> IntPoly:
    """Coroot-side variant using <beta^vee, .> exponents; agrees with qdim
    whenever all roots share one length."""
    return _qdim(datum, lam, dual=True)


def weyl_dim(datum: CartanDatum, lam: Weight) -> int:
    """Classical dimension: product over positive roots of
    (beta, lam + rho) / (beta, rho)."""
    _require_dominant(lam)
    out = Fraction(1)
    for beta in datum.positive_roots:
        den = rho_pairing(datum, beta)
        out *= Fraction(pairing(datum, beta, lam) + den, den)
    if out.denominator != 1:
        raise CongruenceMismatch(f"Weyl dimension {out} is not an integer")
    return out.numerator


def positive_roots_divisible(datum: CartanDatum, d: int, dual: bool = False) -> tuple[Root, ...]:
    """Positive roots whose rho pairing (or coroot height, if dual) d divides."""
    _, rho = _pair_fns(datum, dual)
    return tuple(beta for beta in datum.positive_roots if rho(beta) % d == 0)


def divisibility_condition(datum: CartanDatum, lam: Weight, n: int, dual: bool = False) -> bool:
    """Whether n divides (beta, lam) for every positive root beta
    (or n | <beta^vee, lam> when dual).

    For a partition weight in type A this is exactly divisibility of every
    difference of padded parts by n.
    """
    pair, _ = _pair_fns(datum, dual)
    return all(pair(beta, lam) % n == 0 for beta in datum.positive_roots)


@dataclass(frozen=True)
class CongruenceResult:
    """Residue of a q-dimension mod q^n - 1 together with its orbit-count data.

    ``b`` maps each divisor d of n to the count b_d of crystal elements fixed
    by the d-th power structure, and ``a`` to the orbit counts a_d solving
    b_d = sum of e * a_e over divisors e of d. The residue always equals
    sum of a_d * (q^n - 1)/(q^(n/d) - 1).
    """

    n: int
    b: dict[int, int]
    a: dict[int, int]
    residue: IntPoly
    dual: bool = False

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dual": self.dual,
            "b": {str(d): str(v) for d, v in self.b.items()},
            "a": {str(d): str(v) for d, v in self.a.items()},
            "residue": poly_to_json_coeffs(self.residue),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CongruenceResult":
        return cls(
            n=int(data["n"]),
            b={int(d): int(v) for d, v in data["b"].items()},
            a={int(d): int(v) for d, v in data["a"].items()},
            residue=IntPoly([int(c) for c in data["residue"]]),
            dual=bool(data.get("dual", False)),
        )


def _residue_mod_qn(datum: CartanDatum, lam: Weight, n: int, dual: bool) -> IntPoly:
    """q-dimension reduced mod q^n - 1, accumulated factor by factor so the
    full polynomial is never materialized."""
    modulus = IntPoly.monomial(n) - ONE
    out = ONE
    for d, e in sorted(_cyclotomic_exponents(datum, lam, dual).items()):
        phi = cyclotomic(d)
        for _ in range(e):
            out = rem_mod(out * phi, modulus)
    return out


def congruence(datum: CartanDatum, lam: Weight, n: int, dual: bool = False) -> CongruenceResult:
    """Residue of (dual) qdim mod q^n - 1 decomposed over the orbit basis.

    Requires lam dominant and the divisibility condition for n; the fixed
    counts b_d come from the Weyl-type product over the selected roots, the
    orbit counts a_d by Mobius inversion, and the residue is cross-checked
    against the reconstruction from the a_d.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    _require_dominant(lam)
    if not divisibility_condition(datum, lam, n, dual):
        raise ConditionViolated(f"weight {lam} fails the divisibility condition for n={n}")
    pair, rho = _pair_fns(datum, dual)

    b: dict[int, int] = {}
    for d in divisors(n):
        prod = Fraction(1)
        for beta in positive_roots_divisible(datum, n // d, dual):
            r = rho(beta)
            prod *= Fraction(pair(beta, lam) + r, r)
        if prod.denominator != 1:
            raise NonIntegerB(f"b_{d} = {prod} is not an integer")
        b[d] = prod.numerator

    a: dict[int, int] = {}
    for d in divisors(n):
        s = sum(mobius(d // e) * b[e] for e in divisors(d))
        if s % d:
            raise CongruenceMismatch(f"Mobius sum {s} for d={d} is not divisible by {d}")
        a[d] = s // d
        if a[d] < 0:
            raise CongruenceMismatch(f"orbit count a_{d} = {a[d]} is negative")

    residue = _residue_mod_qn(datum, lam, n, dual)
    recon = IntPoly()
    for d, coeff in a.items():
        recon = recon + coeff * orbit_basis_element(n, d)
    if recon != residue:
        raise CongruenceMismatch(
            f"residue {residue} differs from orbit reconstruction {recon}"
        )
    return CongruenceResult(n=n, b=b, a=a, residue=residue, dual=dual)


def kappa(lam: Partition) -> int:
    """Minimal charge statistic: sum of (i - 1) * lam_i over rows."""
    lam = as_partition(lam)
    return sum(i * part for i, part in enumerate(lam))


def principal_specialization(lam: Partition, m: int) -> IntPoly:
    """Schur polynomial of lam at 1, q, ..., q^(m-1), divided by q^kappa(lam).

    Computed as the pairwise product over 1 <= i < j <= m of
    (1 - q^(l_i - l_j)) / (1 - q^(j - i)) with l_i = lam_i + m - i, using the
    same cyclotomic bookkeeping as the q-dimension. Nonnegative coefficients;
    the value at 1 counts semistandard fillings.
    """
    lam = as_partition(lam)
    if len(lam) > m:
        raise ShapeTooLong(f"{len(lam)} parts will not fit into {m} letters")
    padded = lam + (0,) * (m - len(lam))
    shifted = [padded[i] + m - 1 - i for i in range(m)]
    net: Counter = Counter()
    for i in range(m):
        for j in range(i + 1, m):
            for d in divisors(shifted[i] - shifted[j]):
                net[d] += 1
            for d in divisors(j - i):
                net[d] -= 1
    out = ONE
    for d, e in sorted(net.items()):
        if e < 0:
            raise InternalNegativeExponent(f"cyclotomic {d} has net exponent {e}")
        if e:
            out = out * cyclotomic(d) ** e
    return out
