"""Exact linear algebra over the rationals or a prime field.

Every homology number in this package is a rank of an integer matrix over
some coefficient field, so these routines are exact by construction:
fraction-free (Bareiss) elimination on Python integers in characteristic 0,
modular elimination for F_p.  Matrices stay small (a few hundred rows at
the outside); nothing here tries to be asymptotically clever.

A matrix is a list of rows, each row a list of ints.  Row vectors act on
the left: the chain groups in chains.py store one basis element per row,
so the image of a boundary operator is the row space of its matrix and
the cycles form the left kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals when char == 0, else F_char.

    >>> Field.parse("Q")
    Field(char=0)
    >>> str(Field.parse("Fp:7"))
    'Fp:7'
    """

    char: int = 0

    def __post_init__(self) -> None:
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(
                f"field characteristic must be 0 or a prime, got {self.char}"
            )

    @staticmethod
    def parse(text: str) -> "Field":
        if text == "Q":
            return Field(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"invalid field descriptor {text!r}") from None
            return Field(p)
        raise ValueError(
            f"invalid field descriptor {text!r} (expected 'Q' or 'Fp:<prime>')"
        )

    def __str__(self) -> str:
        return "Q" if self.char == 0 else f"Fp:{self.char}"


RATIONALS = Field(0)


def matrix_rank(rows: list[list[int]], field: Field) -> int:
    """Rank of an integer matrix over the given field."""
    if not rows or not rows[0]:
        return 0
    if field.char == 0:
        return _rank_bareiss([list(r) for r in rows])
    return _rank_mod_p([[x % field.char for x in r] for r in rows], field.char)


def _rank_bareiss(m: list[list[int]]) -> int:
    # One-step fraction-free elimination: after the k-th pivot every entry
    # is a (k+1)x(k+1) minor of the original matrix, so the division by the
    # previous pivot is exact (Sylvester's identity; Bareiss 1968).
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - factor * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        top = [(x * inv) % p for x in m[rank]]
        m[rank] = top
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            if factor:
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - factor * top[c]) % p
        rank += 1
    return rank


def left_kernel_basis(rows: list[list[int]], field: Field) -> list[list[int]]:
    """Integer row vectors spanning {x : x . M = 0} over the field.

    Over the rationals the vectors are scaled to integers (same span).
    Over F_p entries lie in [0, p).  The empty list means the kernel is 0.
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    if ncols == 0:
        return [[1 if j == i else 0 for j in range(nrows)] for i in range(nrows)]
    # Solve M^T y = 0 by reduced row echelon form over the field.
    if field.char == 0:
        mt = [[Fraction(rows[r][c]) for r in range(nrows)] for c in range(ncols)]
        zero, one = Fraction(0), Fraction(1)

        def inv(x: Fraction) -> Fraction:
            return one / x

        def norm(x: Fraction) -> Fraction:
            return x

    else:
        p = field.char
        mt = [[rows[r][c] % p for r in range(nrows)] for c in range(ncols)]
        zero, one = 0, 1

        def inv(x: int) -> int:
            return pow(x, -1, p)

        def norm(x: int) -> int:
            return x % p

    pivots: list[int] = []
    rank = 0
    for col in range(nrows):
        piv = next((r for r in range(rank, ncols) if mt[r][col] != zero), None)
        if piv is None:
            continue
        mt[rank], mt[piv] = mt[piv], mt[rank]
        scale = inv(mt[rank][col])
        mt[rank] = [norm(x * scale) for x in mt[rank]]
        for r in range(ncols):
            if r != rank and mt[r][col] != zero:
                factor = mt[r][col]
                mt[r] = [norm(a - factor * b) for a, b in zip(mt[r], mt[rank])]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    basis: list[list[int]] = []
    for free in range(nrows):
        if free in pivot_set:
            continue
        vec = [zero] * nrows
        vec[free] = one
        for i, col in enumerate(pivots):
            vec[col] = norm(-mt[i][free])
        if field.char == 0:
            lcm = 1
            for x in vec:
                if x.denominator != 1:
                    lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
            basis.append([int(x * lcm) for x in vec])
        else:
            basis.append([int(x) for x in vec])
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
