"""Binary cyclic codes of length 2^m - 1 given by their defining sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .cosets import DefiningSet, weight_defining_set
from .gf2matrix import BinaryMatrix, rref
from .gf2poly import BinaryPolynomial, FieldContext, minimal_polynomial, poly_divmod, x_pow_n_minus_1


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code ``<g(x)>`` in GF(2)[x]/(x^n - 1).

    ``defining_set`` holds the exponents ``i`` with ``g(alpha**i) = 0``.
    """

    n: int
    defining_set: DefiningSet
    generator: BinaryPolynomial
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.defining_set.n != self.n:
            raise ValueError("defining set modulus does not match code length")
        if self.generator.degree != len(self.defining_set):
            raise ValueError("generator degree must equal the defining-set size")

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    k = dimension

    @property
    def check_polynomial(self) -> BinaryPolynomial:
        q, r = poly_divmod(x_pow_n_minus_1(self.n), self.generator)
        assert not r
        return q

    def to_record(self, with_properties: bool = True) -> dict:
        rec = {
            "n": self.n,
            "k": self.dimension,
            "defining_set_size": len(self.defining_set),
            "generator_hex": self.generator.to_hex(),
        }
        if with_properties:
            ext = extend(self)
            rec["properties"] = {
                "self_dual_extended": is_self_dual(ext),
                "doubly_even_extended": is_doubly_even(ext),
            }
        return rec

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<CyclicCode {label}[{self.n}, {self.dimension}]>"


def from_defining_set(ctx: FieldContext, T: DefiningSet | Iterable[int], name: str = "") -> CyclicCode:
    """Generator = product of the minimal polynomials of the cosets inside ``T``."""
    if not isinstance(T, DefiningSet):
        T = DefiningSet(ctx.n, T)
    if T.n != ctx.n:
        raise ValueError(f"defining set is modulo {T.n}, field gives n = {ctx.n}")
    if not T.is_conjugate_closed():
        raise ValueError("defining set is not conjugate-closed (not a union of cyclotomic cosets)")
    g = 1
    for coset in T.cosets():
        g = (BinaryPolynomial(g) * minimal_polynomial(ctx, coset)).value
    return CyclicCode(ctx.n, T, BinaryPolynomial(g), name)


def weight_class_code(ctx: FieldContext, r: int, S: Iterable[int]) -> CyclicCode:
    """The code whose defining set is ``T_[r,m,S]``."""
    S = tuple(sorted(set(S)))
    T = weight_defining_set(r, ctx.m, S)
    return from_defining_set(ctx, T, name=f"C[{r},{ctx.m},{{{','.join(map(str, S))}}}]")


def _bits_to_int(bits) -> int:
    if isinstance(bits, (int, np.integer)):
        return int(bits)
    if isinstance(bits, BinaryPolynomial):
        return bits.value
    return BinaryPolynomial.from_bits(bits).value


def _int_to_bits(v: int, length: int) -> np.ndarray:
    return np.array([(v >> j) & 1 for j in range(length)], dtype=np.uint8)


def encode(code: CyclicCode, message: Sequence[int]) -> np.ndarray:
    """Non-systematic encoding ``c(x) = m(x) g(x)``."""
    if len(message) != code.dimension:
        raise ValueError(f"message length {len(message)} != dimension {code.dimension}")
    c = (BinaryPolynomial.from_bits(message) * code.generator).value
    return _int_to_bits(c, code.n)


def contains(code: CyclicCode, word) -> bool:
    """True iff the generator divides the word polynomial."""
    if not isinstance(word, (int, np.integer, BinaryPolynomial)) and len(word) != code.n:
        return False
    v = _bits_to_int(word)
    if v >> code.n:
        return False
    return not poly_divmod(v, code.generator)[1]


@dataclass(frozen=True)
class SystematicMatrix(BinaryMatrix):
    """RREF generator matrix; row ``i`` has its pivot (an identity column) at ``pivots[i]``."""

    pivots: tuple[int, ...] = ()


def generator_matrix(code: CyclicCode, systematic: bool = False,
                     column_order: Sequence[int] | None = None) -> BinaryMatrix:
    """``k x n`` generator matrix.

    The cyclic form has rows ``x^j g(x)``.  The systematic form is the RREF of
    that, with pivots chosen greedily along ``column_order``.
    """
    k, g = code.dimension, code.generator.value
    if k < 1:
        raise ValueError("the zero code has no generator matrix")
    rows = tuple(g << j for j in range(k))
    if not systematic:
        return BinaryMatrix(rows, code.n)
    red, piv = rref(rows, code.n, column_order)
    return SystematicMatrix(tuple(red), code.n, tuple(piv))


def check_matrix(code: CyclicCode) -> BinaryMatrix:
    """``(n-k) x n`` parity-check matrix built from the reciprocal check polynomial."""
    h = code.check_polynomial.reciprocal().value
    return BinaryMatrix(tuple(h << j for j in range(code.n - code.dimension)), code.n)


def dual(code: CyclicCode) -> CyclicCode:
    """Dual code: defining set ``-(Z_n \\ T)``, generator the reciprocal check polynomial."""
    n = code.n
    T = code.defining_set.complement()
    T = DefiningSet(n, (-T.members) % n)
    g = code.check_polynomial.reciprocal()
    name = f"{code.name}^perp" if code.name else ""
    if name.endswith("^perp^perp"):
        name = name[: -len("^perp^perp")]
    return CyclicCode(n, T, g, name)


def even_weight_subcode(code: CyclicCode) -> CyclicCode:
    """Defining set ``T | {0}``; raises ValueError if 0 is already in ``T``."""
    if 0 in code.defining_set:
        raise ValueError("code is already even-like (0 in defining set)")
    T = code.defining_set | [0]
    g = code.generator * BinaryPolynomial(0b11)
    return CyclicCode(code.n, T, g, f"{code.name}_even" if code.name else "")


@dataclass(frozen=True)
class ExtendedCodeView:
    """Code extended by an overall parity coordinate in position ``n``."""

    base: CyclicCode
    generator_matrix: BinaryMatrix

    @property
    def length(self) -> int:
        return self.base.n + 1

    n = length

    @property
    def dimension(self) -> int:
        return self.base.dimension

    k = dimension

    def extend_word(self, word) -> int:
        v = _bits_to_int(word)
        return v | ((v.bit_count() & 1) << self.base.n)


def extend(code: CyclicCode) -> ExtendedCodeView:
    return ExtendedCodeView(code, generator_matrix(code).append_parity_column())


def is_self_dual(ext: ExtendedCodeView) -> bool:
    G = ext.generator_matrix
    return 2 * ext.dimension == ext.length and G.gram_is_zero()


def is_doubly_even(ext: ExtendedCodeView | BinaryMatrix) -> bool:
    """Every basis row has weight 0 mod 4 and every pair of rows meets evenly.

    Those two conditions force every codeword weight to be 0 mod 4, since
    ``wt(a + b) = wt(a) + wt(b) - 2 wt(a & b)``.
    """
    G = ext.generator_matrix if isinstance(ext, ExtendedCodeView) else ext
    if any(r.bit_count() % 4 for r in G.rows):
        return False
    rows = G.rows
    return all((rows[i] & rows[j]).bit_count() % 2 == 0
               for i in range(len(rows)) for j in range(i + 1, len(rows)))
