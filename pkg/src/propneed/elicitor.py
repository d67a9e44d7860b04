"""Direct need by detach-and-recheck, and greedy attachment minimization.

An item directly needs attachment ``(c, p)`` when it verifies in the full
environment but fails once that single attachment is detached, all others
left in place.  Properties that are only *jointly* needed (each one
redundant given the other) therefore do not show up as direct needs; use
:func:`minimize_attachments` to see one sufficient subset instead.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .corpus import Attachment, Environment, Item, Library, detach
from .errors import BaselineFailed
from .verifier import DEFAULT_BUDGET, Verdict, check

Checker = Callable[..., Verdict]


@dataclass(frozen=True)
class NeedSet:
    item: str
    pairs: frozenset[Attachment]
    mode: str = "direct"

    def sorted(self) -> list[Attachment]:
        return sorted(self.pairs, key=Attachment.sort_key)

    def __str__(self) -> str:
        return " ".join([self.item, self.mode, *map(str, self.sorted())])


def _resolve(item: Item | str, lib: Library) -> Item:
    return lib.item(item) if isinstance(item, str) else item


def applicable_attachments(item: Item | str, lib: Library) -> list[Attachment]:
    """Attachments on constructors the item imports, in (constructor, property) order."""
    item = _resolve(item, lib)
    return lib.environment.restrict(item.imports).sorted()


def direct_needs(
    item: Item | str,
    lib: Library,
    *,
    budget: int = DEFAULT_BUDGET,
    checker: Checker = check,
) -> NeedSet:
    item = _resolve(item, lib)
    if not checker(item, lib, None, budget=budget).verified:
        raise BaselineFailed(item.id)
    env = lib.environment
    needed = frozenset(
        att
        for att in applicable_attachments(item, lib)
        if checker(item, lib, detach(env, att.constructor, att.property), budget=budget).failed
    )
    return NeedSet(item.id, needed, "direct")


def minimize_attachments(
    item: Item | str,
    lib: Library,
    *,
    budget: int = DEFAULT_BUDGET,
    checker: Checker = check,
) -> Environment:
    """Greedily drop attachments (in sorted order) while the item still verifies.

    One pass is enough: a kept attachment failed to be dropped from a larger
    environment, and removing axioms never turns a failure into a success.
    """
    item = _resolve(item, lib)
    if not checker(item, lib, None, budget=budget).verified:
        raise BaselineFailed(item.id)
    env = lib.environment.restrict(item.imports)
    for att in env.sorted():
        trial = detach(env, att.constructor, att.property)
        if checker(item, lib, trial, budget=budget).verified:
            env = trial
    return env


def _direct_task(args) -> NeedSet:
    item_id, lib, budget = args
    return direct_needs(item_id, lib, budget=budget)


def elicit_all(lib: Library, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> dict[str, NeedSet]:
    """Direct need sets for every item, keyed in library order."""
    ids = lib.item_ids()
    tasks = [(i, lib, budget) for i in ids]
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_direct_task, tasks))
    else:
        results = [_direct_task(t) for t in tasks]
    return dict(zip(ids, results))
