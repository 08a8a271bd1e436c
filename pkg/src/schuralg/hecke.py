"""Truncation by the idempotent of the all-ones weight.

With omega = (1, ..., 1, 0, ..., 0) (d ones, requiring n >= d), the
corner subalgebra 1_omega . S . 1_omega has dimension d! — it realizes
the group algebra of the symmetric group on d letters in classical mode
and its Hecke deformation in quantum mode.  This module computes the
truncated family from the three-part basis, certifies its rank, and
(for n = d) checks that either family of corner products of the simple
raising and lowering generators generates the whole truncation.
"""

import time
from dataclasses import dataclass, field
from math import factorial

from .bases import RankAccumulator, enumerate_basis, rank_of_family
from .errors import HypothesisError
from .rootvectors import eval_label
from .tensormodel import generator_action, weight_idempotent
from .verify import CheckReport

__all__ = [
    "TruncationResult",
    "omega_weight",
    "omega_truncation",
    "check_hecke_generation",
    "hecke_summary",
    "CLOSURE_ROUND_CAP",
]

CLOSURE_ROUND_CAP = 10


@dataclass
class TruncationResult:
    """Nonzero corner images of the basis and their exact rank."""

    omega: tuple
    family: list = field(default_factory=list)
    dim: int = 0
    generation_pass: bool = None


def omega_weight(model):
    """The weight with d ones, padded by zeros; needs n >= d."""
    if model.n < model.d:
        raise HypothesisError(
            f"the truncation needs n >= d, got n={model.n}, d={model.d}"
        )
    return (1,) * model.d + (0,) * (model.n - model.d)


def omega_truncation(model):
    """Corner images 1_omega b 1_omega of the B1 family, with rank."""
    omega = omega_weight(model)
    proj = weight_idempotent(model, omega)
    family = []
    for label in enumerate_basis(model.n, model.d, "B1"):
        op = proj @ eval_label(model, label) @ proj
        if not op.is_zero():
            family.append(op)
    dim = rank_of_family(model, family)
    return TruncationResult(omega=omega, family=family, dim=dim)


def _closure_rank(model, generators, target):
    """Rank of the unital closure of ``generators`` under products.

    Representatives that grow the rank are kept and multiplied pairwise
    each round until the rank stabilizes, reaches ``target``, or the
    round cap is hit.  Returns (rank, rounds used).
    """
    acc = RankAccumulator(model)
    reps = []

    def feed(op):
        if not op.is_zero() and acc.add(op):
            reps.append(op)
            return True
        return False

    for op in generators:
        feed(op)
    rounds = 0
    while acc.rank < target and rounds < CLOSURE_ROUND_CAP:
        rounds += 1
        grew = False
        current = list(reps)
        for x in current:
            for y in current:
                if feed(x @ y):
                    grew = True
        if not grew:
            break
    return acc.rank, rounds


def check_hecke_generation(model):
    """For n = d: both corner generator families span the truncation."""
    if model.n != model.d:
        raise HypothesisError(
            f"the generation statement needs n = d, got n={model.n}, d={model.d}"
        )
    t0 = time.perf_counter()
    rep = CheckReport("hecke-generation", model.n, model.d, model.mode)
    proj = weight_idempotent(model, omega_weight(model))
    target = factorial(model.d)
    esym, fsym = ("E", "F") if model.mode == "quantum" else ("e", "f")
    for item_id, first, second in (("EF", esym, fsym), ("FE", fsym, esym)):
        gens = [proj]
        for i in range(1, model.n):
            a = generator_action(model, first, i)
            b = generator_action(model, second, i)
            gens.append(proj @ a @ b @ proj)
        rank, rounds = _closure_rank(model, gens, target)
        rep.add(
            item_id,
            rank == target,
            detail=f"rank {rank} of {target} after {rounds} round(s)",
        )
    rep.seconds = time.perf_counter() - t0
    return rep


def hecke_summary(model):
    """Dimension and generation summary used by reports and the CLI."""
    result = omega_truncation(model)
    expected = factorial(model.d)
    squared_closed = True
    if result.family:
        acc = RankAccumulator(model)
        reps = []
        for op in result.family:
            if acc.add(op):
                reps.append(op)
        base = acc.rank
        for x in reps:
            for y in reps:
                acc.add(x @ y)
        squared_closed = acc.rank == base
    data = {
        "omega": list(result.omega),
        "dim": result.dim,
        "expected": expected,
        "closed_under_product": squared_closed,
        "generation": None,
        "pass": result.dim == expected and squared_closed,
    }
    if model.n == model.d:
        rep = check_hecke_generation(model)
        flags = {item.id: item.ok for item in rep.items}
        result.generation_pass = rep.passed
        data["generation"] = {"EF": flags["EF"], "FE": flags["FE"]}
        data["pass"] = data["pass"] and rep.passed
    return data
