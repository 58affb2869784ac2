"""Root data for the dual groups in play, with their standard twists.

A RootDatum records the character lattice of a maximal torus of the dual
group together with the root and coroot vectors; the pairing is always the
dot product because the presets pick dual bases.  Three preset families are
provided, named by the INPUT group (the datum built is that of the dual):

* ``preset("GL", n)``  -> dual GL_n: lattice Z^n in the coordinate basis,
  roots e_i - e_j, coroots the same vectors.
* ``preset("SL", n)``  -> dual PGL_n: adjoint datum of type A_{n-1} in the
  simple-root basis; roots are 0/1 consecutive-block vectors, coroots are
  sums of Cartan matrix columns.  The center here is trivial.
* ``preset("PGL", n)`` -> dual SL_n: simply connected datum in the
  fundamental-weight basis, the mirror image of the adjoint one; the center
  character group is Z/n.

A WeylTwist is a finite-order automorphism of the character lattice (the
candidates for a Frobenius action); the factory checks unimodularity and
that the root set is permuted.
"""

from __future__ import annotations

from .abgroups import FinGenAbGroup, cokernel
from .errors import InvalidArgument, InvalidRank, UnsupportedFamily
from .lattice import IntMatrix

FAMILIES = ("GL", "SL", "PGL")


class RootDatum:
    """A based root datum with dot-product pairing.

    >>> gl2 = preset("GL", 2)
    >>> gl2.rank, len(gl2.roots)
    (2, 2)
    >>> gl2.roots[0]
    (1, -1)
    """

    __slots__ = ("rank", "roots", "coroots", "name", "_preset")

    def __init__(self, rank, roots, coroots, name, _preset=None):
        self.rank = rank
        self.roots = tuple(tuple(a) for a in roots)
        self.coroots = tuple(tuple(a) for a in coroots)
        self.name = name
        self._preset = _preset

    def pairing(self, char: tuple[int, ...], cochar: tuple[int, ...]) -> int:
        if len(char) != self.rank or len(cochar) != self.rank:
            raise InvalidArgument("pairing arguments must have length equal to the rank")
        return sum(a * b for a, b in zip(char, cochar))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "charLatticeRank": self.rank,
            "roots": [list(a) for a in self.roots],
            "cocharLatticeRank": self.rank,
            "coroots": [list(a) for a in self.coroots],
            "pairing": "dot",
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootDatum):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.roots == other.roots
            and self.coroots == other.coroots
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.roots, self.coroots))

    def __repr__(self) -> str:
        return f"RootDatum({self.name!r}, rank={self.rank}, roots={len(self.roots)})"


class WeylTwist:
    """A lattice automorphism used to twist Frobenius."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: IntMatrix):
        if not matrix.is_square:
            raise InvalidArgument("a twist must be a square matrix")
        self.matrix = matrix

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylTwist):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"WeylTwist({self.matrix!r})"


def _cartan_a(m: int) -> list[list[int]]:
    """Cartan matrix of type A_m."""
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(m)] for i in range(m)]


def _block_vector(m: int, i: int, j: int) -> list[int]:
    """The 0/1 vector supported on positions i..j (inclusive)."""
    return [1 if i <= k <= j else 0 for k in range(m)]


def _cartan_block_sum(cartan: list[list[int]], i: int, j: int) -> list[int]:
    """Sum of Cartan columns i..j (inclusive)."""
    m = len(cartan)
    return [sum(cartan[k][c] for c in range(i, j + 1)) for k in range(m)]


def preset(family: str, n: int) -> RootDatum:
    """The root datum of the dual group of ``family``_n; see module docstring."""
    if family not in FAMILIES:
        raise UnsupportedFamily(
            f"unsupported family {family!r}",
            hint=f"choose one of {', '.join(FAMILIES)}",
        )
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidRank(f"n must be an integer, got {n!r}")
    if family == "GL":
        if n < 1:
            raise InvalidRank(f"GL needs n >= 1, got {n}")
        pos = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                pos.append(tuple(v))
        roots = pos + [tuple(-x for x in v) for v in pos]
        return RootDatum(n, roots, roots, f"GL_{n}", _preset=("gl", n))
    if n < 2:
        raise InvalidRank(f"{family} needs n >= 2, got {n}")
    m = n - 1
    cartan = _cartan_a(m)
    blocks = [(i, j) for i in range(m) for j in range(i, m)]
    ones = [_block_vector(m, i, j) for i, j in blocks]
    sums = [_cartan_block_sum(cartan, i, j) for i, j in blocks]
    if family == "SL":
        # dual group PGL_n: adjoint datum, simple-root basis
        pos_roots, pos_coroots, name, tag = ones, sums, f"PGL_{n}", ("adjoint", n)
    else:
        # dual group SL_n: simply connected datum, fundamental-weight basis
        pos_roots, pos_coroots, name, tag = sums, ones, f"SL_{n}", ("sc", n)
    roots = [tuple(v) for v in pos_roots] + [tuple(-x for x in v) for v in pos_roots]
    coroots = [tuple(v) for v in pos_coroots] + [tuple(-x for x in v) for v in pos_coroots]
    return RootDatum(m, roots, coroots, name, _preset=tag)


def center_char_group(rd: RootDatum) -> FinGenAbGroup:
    """Character group of the center: the lattice modulo the root lattice.

    >>> center_char_group(preset("GL", 2))
    FinGenAbGroup(free_rank=1, invariant_factors=())
    >>> center_char_group(preset("PGL", 2))
    FinGenAbGroup(free_rank=0, invariant_factors=(2,))
    """
    return cokernel(IntMatrix.from_columns([list(a) for a in rd.roots], rows=rd.rank))


def _simple_system(rd: RootDatum) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    kind, n = rd._preset
    if kind == "gl":
        simples, cosimples = [], []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            simples.append(tuple(v))
            cosimples.append(tuple(v))
        return simples, cosimples
    m = n - 1
    cartan = _cartan_a(m)
    ones = [tuple(_block_vector(m, i, i)) for i in range(m)]
    sums = [tuple(_cartan_block_sum(cartan, i, i)) for i in range(m)]
    if kind == "adjoint":
        return list(ones), list(sums)
    return list(sums), list(ones)


def _reflection(rank: int, root: tuple[int, ...], coroot: tuple[int, ...]) -> IntMatrix:
    """s_alpha(x) = x - <x, alpha_vee> alpha as a matrix on the lattice."""
    return IntMatrix(
        [
            [(1 if i == j else 0) - root[i] * coroot[j] for j in range(rank)]
            for i in range(rank)
        ],
        cols=rank,
    )


def coxeter_twist(rd: RootDatum) -> WeylTwist:
    """The standard Coxeter element of a preset datum, as a lattice matrix.

    For GL_n this is the n-cycle permutation matrix (order n); for the rank-1
    A_1 data it is (-1); in general it is the ordered product of the simple
    reflections and has order equal to the Coxeter number n.

    >>> coxeter_twist(preset("GL", 2)).matrix
    IntMatrix([[0, 1], [1, 0]])
    """
    if rd._preset is None:
        raise UnsupportedFamily(
            "coxeter_twist needs a preset datum",
            hint="hand-built data can use weyl_twist with an explicit matrix",
        )
    kind, n = rd._preset
    if kind == "gl":
        return WeylTwist(
            IntMatrix(
                [[1 if i == (j + 1) % n else 0 for j in range(n)] for i in range(n)],
                cols=n,
            )
        )
    simples, cosimples = _simple_system(rd)
    w = IntMatrix.identity(rd.rank)
    for root, coroot in zip(simples, cosimples):
        w = w @ _reflection(rd.rank, root, coroot)
    return WeylTwist(w)


def identity_twist(rd: RootDatum) -> WeylTwist:
    return WeylTwist(IntMatrix.identity(rd.rank))


def weyl_twist(rd: RootDatum, matrix: IntMatrix) -> WeylTwist:
    """Validate a raw lattice matrix as a twist for the given datum."""
    if matrix.rows != rd.rank or matrix.cols != rd.rank:
        raise InvalidArgument(
            f"twist must be {rd.rank}x{rd.rank} for {rd.name}, got {matrix.rows}x{matrix.cols}"
        )
    if not matrix.is_unimodular():
        raise InvalidArgument(
            "twist matrix is not unimodular",
            hint="the determinant must be 1 or -1",
        )
    root_set = set(rd.roots)
    for alpha in rd.roots:
        image = tuple(sum(matrix[i, j] * alpha[j] for j in range(rd.rank)) for i in range(rd.rank))
        if image not in root_set:
            raise InvalidArgument(
                f"twist does not permute the roots: image of {alpha} is {image}",
            )
    return WeylTwist(matrix)


def validate(rd: RootDatum) -> list[str]:
    """Check the root-datum axioms; return a list of violations (never raises).

    >>> validate(preset("GL", 3))
    []
    """
    problems = []
    if rd.rank < 0:
        problems.append(f"rank must be nonnegative, got {rd.rank}")
        return problems
    if len(rd.roots) != len(rd.coroots):
        problems.append(
            f"{len(rd.roots)} roots but {len(rd.coroots)} coroots"
        )
        return problems
    for vecs, label in ((rd.roots, "root"), (rd.coroots, "coroot")):
        for a in vecs:
            if len(a) != rd.rank:
                problems.append(f"{label} {a} does not have length {rd.rank}")
                return problems
            if not any(a):
                problems.append(f"zero {label} is not allowed")
    if len(set(rd.roots)) != len(rd.roots):
        problems.append("duplicate roots")
    for alpha, alpha_vee in zip(rd.roots, rd.coroots):
        pair = rd.pairing(alpha, alpha_vee)
        if pair != 2:
            problems.append(f"<{alpha}, {alpha_vee}> = {pair}, expected 2")
    if problems:
        return problems
    root_set = set(rd.roots)
    for alpha, alpha_vee in zip(rd.roots, rd.coroots):
        for beta in rd.roots:
            image = tuple(
                b - rd.pairing(beta, alpha_vee) * a for a, b in zip(alpha, beta)
            )
            if image not in root_set:
                problems.append(
                    f"reflection in {alpha} maps {beta} outside the root set"
                )
                break
    return problems
