"""Vectorized fallback for the assignment scanner (used when the compiled
extension is unavailable)."""
from __future__ import annotations

import numpy as np

from .program import AND, ATOM, IFF, IMPLIES, NOT, OR

CHUNK = 1 << 15


class Scanner:
    """Find the least assignment mask satisfying every program.

    ``ops``/``args``/``starts`` are produced by :func:`program.flatten`.
    """

    def __init__(self, ops, args, starts, n_atoms: int):
        self.n_atoms = n_atoms
        self.programs = [
            list(zip(ops[lo:hi], args[lo:hi])) for lo, hi in zip(starts[:-1], starts[1:])
        ]

    @staticmethod
    def _bit(masks: np.ndarray, k: int) -> np.ndarray:
        return ((masks >> np.int64(k)) & 1).astype(bool)

    def _eval(self, code, masks: np.ndarray) -> np.ndarray:
        stack: list[np.ndarray] = []
        for op, arg in code:
            if op == ATOM:
                stack.append(self._bit(masks, arg))
            elif op == NOT:
                stack.append(~stack.pop())
            elif op == AND or op == OR:
                vals = stack[-arg:]
                del stack[-arg:]
                acc = vals[0].copy()
                for v in vals[1:]:
                    if op == AND:
                        acc &= v
                    else:
                        acc |= v
                stack.append(acc)
            elif op == IMPLIES:
                b, a = stack.pop(), stack.pop()
                stack.append(~a | b)
            elif op == IFF:
                b, a = stack.pop(), stack.pop()
                stack.append(a == b)
        return stack[0]

    def next(self, start: int, stop: int, ties=()) -> int:
        lo = start
        while lo < stop:
            hi = min(stop, lo + CHUNK)
            masks = np.arange(lo, hi, dtype=np.int64)
            for i, j in ties:
                masks = masks[self._bit(masks, i) == self._bit(masks, j)]
            for code in self.programs:
                if not masks.size:
                    break
                masks = masks[self._eval(code, masks)]
            if masks.size:
                return int(masks[0])
            lo = hi
        return -1
