"""The block side of the comparison, and the matcher that certifies it.

For a twisted maximal torus the finite fixed-point group is computed on the
cocharacter lattice as coker(q w - id); its ell-primary part is the block
invariant.  For GL_n the relevant block has a one-dimensional free direction
(the unramified twisting line) and cyclic ell-part Z/ell^k with
k = v_ell(q^n - 1); those values come from the finite torus of order
q^n - 1, so the descriptor can be cross-checked against finite_torus on the
transposed twist; the transpose-cokernel law is exactly what makes the two
sides of the comparison agree.

The matcher compares the mu invariant of a parameter component against the
block torsion, records whether the free ranks agree, tags the report with
the integer grading common to both sides, and raises an applicability flag
when q is not above the Coxeter number (the regime where the block-to-torus
dictionary is unconditional).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroups import FinGenAbGroup, cokernel
from .arith import check_admissible, valuation
from .cocycles import ComponentDescriptor
from .errors import DimensionMismatch, InfiniteGroup, InternalError
from .lattice import IntMatrix
from .rootdata import WeylTwist

GRADING_INDEX = "Z"
GRADING_IDENTIFICATIONS = ("X*(Z(G-hat))", "pi_1(G)_Gamma")


def finite_torus(rank: int, twist: WeylTwist, q: int) -> FinGenAbGroup:
    """Fixed points of q-twisted Frobenius on a torus, via cocharacters.

    The cocharacter lattice carries the twist w; the finite torus is
    coker(q w - id).  For the GL_n shift twist this is cyclic of order
    q^n - 1; for the rank-one twist w = -1 it is Z/(q + 1).

    >>> from .rootdata import preset, coxeter_twist
    >>> finite_torus(2, coxeter_twist(preset("GL", 2)), 11)
    FinGenAbGroup(free_rank=0, invariant_factors=(120,))
    """
    if twist.rank != rank:
        raise DimensionMismatch(
            f"twist is {twist.rank}x{twist.rank} but the torus has rank {rank}"
        )
    group = cokernel(q * twist.matrix - IntMatrix.identity(rank))
    if group.free_rank != 0:
        raise InternalError(
            "finite torus came out infinite; the twist cannot be of finite order"
        )
    return group


def ell_block_invariant(t: FinGenAbGroup, ell: int) -> FinGenAbGroup:
    """The ell-primary part of a finite torus; the group must be finite."""
    if not t.is_finite:
        raise InfiniteGroup(
            "the ell-block invariant needs a finite group",
            hint="take the finite torus first",
        )
    return t.ell_primary(ell)


@dataclass(frozen=True)
class ApplicabilityFlag:
    """One recorded hypothesis check, e.g. q above the Coxeter number."""

    code: str
    holds: bool
    detail: str

    def to_json(self) -> dict:
        return {"code": self.code, "holds": self.holds, "detail": self.detail}


def _coxeter_bound_flag(q: int, coxeter_number: int) -> ApplicabilityFlag:
    return ApplicabilityFlag(
        code="q-above-coxeter-number",
        holds=q > coxeter_number,
        detail=f"q = {q}, Coxeter number = {coxeter_number}",
    )


@dataclass(frozen=True)
class BlockDescriptor:
    """Shape of one block: ell-part, free direction, ambient finite torus."""

    torsion: FinGenAbGroup
    free_rank: int
    finite_torus_order: int
    k: int
    applicability: tuple[ApplicabilityFlag, ...] = ()

    def to_json(self) -> dict:
        return {
            "torsion": self.torsion.to_json(),
            "freeRank": self.free_rank,
            "finiteTorusOrder": self.finite_torus_order,
            "k": self.k,
            "applicabilityFlags": [f.to_json() for f in self.applicability],
        }


def gln_block_descriptor(n: int, q: int, ell: int) -> BlockDescriptor:
    """The depth-zero block data for GL_n at an elliptic torus.

    The elliptic finite torus has order q^n - 1; the block carries its
    ell-part Z/ell^k and one free direction.

    >>> gln_block_descriptor(2, 11, 5).torsion
    FinGenAbGroup(free_rank=0, invariant_factors=(5,))
    """
    if n < 1:
        raise DimensionMismatch(f"n must be positive, got {n}")
    check_admissible(q, ell)
    order = q**n - 1
    k = valuation(order, ell)
    return BlockDescriptor(
        torsion=FinGenAbGroup.cyclic(ell**k),
        free_rank=1,
        finite_torus_order=order,
        k=k,
        applicability=(_coxeter_bound_flag(q, n),),
    )


def torus_block_descriptor(
    rank: int,
    twist: WeylTwist,
    q: int,
    ell: int,
    *,
    free_rank: int = 0,
    coxeter_number: int | None = None,
) -> BlockDescriptor:
    """Block data computed honestly from a twisted torus (semisimple inputs).

    The twist is the action on the cocharacter lattice (for a twist given on
    characters, pass the transpose).  ``free_rank`` is 0 for semisimple
    groups; GL_n callers should prefer gln_block_descriptor.
    """
    check_admissible(q, ell)
    t = finite_torus(rank, twist, q)
    order = t.order()
    k = valuation(order, ell) if order > 1 else 0
    flags = () if coxeter_number is None else (_coxeter_bound_flag(q, coxeter_number),)
    return BlockDescriptor(
        torsion=ell_block_invariant(t, ell),
        free_rank=free_rank,
        finite_torus_order=order,
        k=k,
        applicability=flags,
    )


@dataclass(frozen=True)
class MatchReport:
    """Verdict of the component-to-block comparison."""

    mu_char_group: FinGenAbGroup
    block_torsion: FinGenAbGroup
    isomorphic: bool
    free_ranks_agree: bool
    grading_index: str
    applicability_flags: tuple[ApplicabilityFlag, ...]
    context_mismatch: bool

    def to_json(self) -> dict:
        return {
            "muCharGroup": self.mu_char_group.to_json(),
            "blockTorsion": self.block_torsion.to_json(),
            "isomorphic": self.isomorphic,
            "freeRanksAgree": self.free_ranks_agree,
            "grading": {
                "index": self.grading_index,
                "identifications": list(GRADING_IDENTIFICATIONS),
            },
            "applicabilityFlags": [f.to_json() for f in self.applicability_flags],
            "contextMismatch": self.context_mismatch,
        }


def match_sides(component: ComponentDescriptor, block: BlockDescriptor) -> MatchReport:
    """Compare the two computations of the same invariant.

    The parameter side contributes the character group of its mu factor, the
    block side its torsion; the groups are in normal form, so isomorphism is
    plain equality.  A context mismatch (the two sides built from different
    ambient finite tori) is flagged but does not block the comparison.

    >>> from .rootdata import preset, coxeter_twist
    >>> from .cocycles import component_descriptor
    >>> c = component_descriptor(preset("GL", 2), coxeter_twist(preset("GL", 2)), 11, 5)
    >>> match_sides(c, gln_block_descriptor(2, 11, 5)).isomorphic
    True
    """
    mu_chars = component.mu.char_group
    isomorphic = mu_chars == block.torsion
    free_agree = component.orbit_torus_rank == block.free_rank
    fixed_order = component.fixed_scheme.char_group.order()
    context_mismatch = fixed_order is not None and fixed_order != block.finite_torus_order
    return MatchReport(
        mu_char_group=mu_chars,
        block_torsion=block.torsion,
        isomorphic=isomorphic,
        free_ranks_agree=free_agree,
        grading_index=GRADING_INDEX,
        applicability_flags=block.applicability,
        context_mismatch=context_mismatch,
    )


@dataclass(frozen=True)
class CategoricalSummary:
    """The computable shadow of the depth-zero comparison for GL_n.

    Both sides decompose into cells indexed by the same integer grading,
    each cell carrying one free direction and the cyclic ell-part; this
    record aggregates the component, the block, and their match.
    """

    n: int
    q: int
    ell: int
    grading_index: str
    cell_free_rank: int
    cell_torsion: FinGenAbGroup
    component: ComponentDescriptor
    block: BlockDescriptor
    match: MatchReport

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "ell": self.ell,
            "gradingIndex": self.grading_index,
            "cell": {
                "freeRank": self.cell_free_rank,
                "torsion": self.cell_torsion.to_json(),
            },
            "component": self.component.to_json(),
            "block": self.block.to_json(),
            "match": self.match.to_json(),
        }


def categorical_summary(n: int, q: int, ell: int) -> CategoricalSummary:
    """Assemble the full GL_n comparison at one (n, q, ell)."""
    from .cocycles import component_descriptor
    from .rootdata import coxeter_twist, preset

    rd = preset("GL", n)
    component = component_descriptor(rd, coxeter_twist(rd), q, ell)
    block = gln_block_descriptor(n, q, ell)
    report = match_sides(component, block)
    return CategoricalSummary(
        n=n,
        q=q,
        ell=ell,
        grading_index=GRADING_INDEX,
        cell_free_rank=block.free_rank,
        cell_torsion=block.torsion,
        component=component,
        block=block,
        match=report,
    )
