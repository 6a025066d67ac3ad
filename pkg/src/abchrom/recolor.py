"""Recoloring steps, the (acyclic) recoloring algorithm, and minimality checks."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .coloring import Coloring, bichromatic_cycle_pairs, check_size, closes_cycle, is_acyclic, is_proper, trivial_coloring
from .errors import NotAcyclicError, NotProperError
from .witness import DEFAULT_SEARCH_BUDGET, _assign, class_certificates, is_b_vertex, missing_colors

VARIANTS = ("proper", "acyclic")
STRATEGIES = ("lowest", "random", "largest")


@dataclass(frozen=True)
class RecoloringOutcome:
    """Result of trying to remove ``removed_color``.

    ``result`` is None when the class cannot be removed. Otherwise it has k-1
    colors, relabeled order-preservingly (colors above the removed one shift
    down by one); ``assignment_log`` lists (vertex, new color) in the original
    labels.
    """

    result: Coloring | None
    removed_color: int
    assignment_log: tuple[tuple[int, int], ...] = field(default=())

    @property
    def present(self) -> bool:
        return self.result is not None


def _collapse(c: Coloring, i: int, assignment: dict[int, int]) -> Coloring:
    out = []
    for v, x in enumerate(c.colors):
        x = assignment.get(v, x)
        out.append(x - 1 if x > i else x)
    return Coloring(tuple(out), c.k - 1)


def _class_has_b_vertex(g, c, members):
    return any(is_b_vertex(g, c, v) for v in members)


def recoloring_step(g, c: Coloring, i: int, rng: random.Random | None = None) -> RecoloringOutcome:
    """Proper recoloring step: possible iff class i has no b-vertex."""
    check_size(g, c)
    members = c.color_class(i)
    if not members or _class_has_b_vertex(g, c, members):
        return RecoloringOutcome(None, i)
    chosen = {}
    for v in members:
        opts = missing_colors(g, c, v)
        chosen[v] = rng.choice(opts) if rng is not None else opts[0]
    log = tuple(sorted(chosen.items()))
    return RecoloringOutcome(_collapse(c, i, chosen), i, log)


def acyclic_recoloring_step(g, c: Coloring, i: int, *, budget: int = DEFAULT_SEARCH_BUDGET,
                            rng: random.Random | None = None) -> RecoloringOutcome:
    """Acyclic recoloring step by backtracking over the vertices of class i.

    Vertices go in index order, candidate colors ascending (shuffled when an
    rng is given). Exceeding ``budget`` raises BudgetExceeded.
    """
    check_size(g, c)
    members = c.color_class(i)
    if not members:
        return RecoloringOutcome(None, i)
    options = []
    for v in members:
        # a path blocking x for v avoids color i, so it survives any recoloring of class i
        opts = [x for x in missing_colors(g, c, v) if not closes_cycle(g, c.colors, v, x)]
        if not opts:
            return RecoloringOutcome(None, i)
        if rng is not None:
            rng.shuffle(opts)
        options.append(opts)
    found = _assign(g, list(c.colors), members, options, budget)
    if found is None:
        return RecoloringOutcome(None, i)
    chosen = dict(zip(members, found))
    return RecoloringOutcome(_collapse(c, i, chosen), i, tuple(sorted(chosen.items())))


def _step(g, c, i, variant, rng, budget):
    if variant == "proper":
        return recoloring_step(g, c, i, rng=rng)
    return acyclic_recoloring_step(g, c, i, budget=budget, rng=rng)


def _class_order(c: Coloring, strategy: str, rng: random.Random) -> list[int]:
    ids = list(range(1, c.k + 1))
    if strategy == "lowest":
        return ids
    if strategy == "largest":
        sizes = c.classes()
        return sorted(ids, key=lambda i: (-len(sizes[i]), i))
    if strategy == "random":
        rng.shuffle(ids)
        return ids
    raise ValueError(f"unknown strategy {strategy!r}")


def run_recoloring_algorithm(g, start: Coloring | None = None, variant: str = "acyclic",
                             strategy: str = "lowest", seed: int | None = None, *,
                             random_choice: bool = False, budget: int = DEFAULT_SEARCH_BUDGET,
                             trace: list | None = None) -> Coloring:
    """Apply steps of the chosen variant until none is possible.

    ``strategy`` picks which removable class goes next; ``random_choice`` makes
    the per-vertex color choice seeded-random instead of smallest-first.
    Each performed step is appended to ``trace`` as a RecoloringOutcome.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    c = trivial_coloring(g) if start is None else start
    check_size(g, c)
    if not is_proper(g, c):
        raise NotProperError("start coloring is not proper")
    if variant == "acyclic" and not is_acyclic(g, c):
        raise NotAcyclicError("start coloring is not acyclic")
    rng = random.Random(seed)
    pick_rng = rng if random_choice else None
    while True:
        for i in _class_order(c, strategy, rng):
            out = _step(g, c, i, variant, pick_rng, budget)
            if out.present:
                if trace is not None:
                    trace.append(out)
                c = out.result
                break
        else:
            return c


def is_minimal_by_definition(g, c: Coloring, variant: str = "acyclic", *, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Ground truth: no color class admits a step of the given variant."""
    check_size(g, c)
    if variant == "proper":
        return all(_class_has_b_vertex(g, c, m) for m in c.classes().values())
    if not is_acyclic(g, c):
        raise NotAcyclicError("acyclic minimality needs an acyclic coloring")
    for i, members in c.classes().items():
        if _class_has_b_vertex(g, c, members):
            continue
        if _product_size(g, c, members) <= BRUTE_FORCE_LIMIT:
            if _removable_brute_force(g, c, i, members):
                return False
        elif acyclic_recoloring_step(g, c, i, budget=budget).present:
            return False
    return True


BRUTE_FORCE_LIMIT = 4096


def _product_size(g, c, members):
    size = 1
    for v in members:
        size *= len(missing_colors(g, c, v))
    return size


def _removable_brute_force(g, c, i, members):
    """Try every joint reassignment of class i and re-run the full acyclicity check.

    Kept free of the incremental pruning used by acyclic_recoloring_step so it
    can serve as an independent reference.
    """
    base = list(c.colors)
    for combo in itertools.product(*(missing_colors(g, c, v) for v in members)):
        for v, x in zip(members, combo):
            base[v] = x
        if not bichromatic_cycle_pairs(g, base):
            return True
    return False


def is_minimal_by_witnesses(g, c: Coloring) -> bool:
    """Every color class holds an acyclic b-vertex."""
    certs = class_certificates(g, c, first_only=True)
    return all(certs.values())
