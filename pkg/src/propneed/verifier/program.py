"""Compile formulas into postfix programs over atom bits.

Each program is a list of ``(opcode, arg)`` pairs evaluated on a stack of
booleans; bit ``arg`` of the assignment mask is the value of atom ``arg``.
"""
from __future__ import annotations

from ..logic import And, Eq, Formula, Iff, Implies, Not, Or, Pred

ATOM, NOT, AND, OR, IMPLIES, IFF = range(6)


def compile_formula(f: Formula, bit: dict) -> list[tuple[int, int]]:
    if isinstance(f, (Pred, Eq)):
        return [(ATOM, bit[f])]
    if isinstance(f, Not):
        return compile_formula(f.arg, bit) + [(NOT, 0)]
    if isinstance(f, (And, Or)):
        code = [op for g in f.args for op in compile_formula(g, bit)]
        return code + [(AND if isinstance(f, And) else OR, len(f.args))]
    op = IMPLIES if isinstance(f, Implies) else IFF
    return compile_formula(f.lhs, bit) + compile_formula(f.rhs, bit) + [(op, 2)]


def max_depth(code: list[tuple[int, int]]) -> int:
    depth = best = 0
    for op, arg in code:
        if op == ATOM:
            depth += 1
        elif op != NOT:
            depth -= arg - 1
        best = max(best, depth)
    return best


def flatten(programs: list[list[tuple[int, int]]]) -> tuple[list[int], list[int], list[int]]:
    """Concatenate programs into ``(ops, args, starts)`` with ``len(programs) + 1`` starts."""
    ops, args, starts = [], [], [0]
    for code in programs:
        for op, arg in code:
            ops.append(op)
            args.append(arg)
        starts.append(len(ops))
    return ops, args, starts


def lowest_bits(ops, args, starts) -> list[int]:
    """Lowest atom bit read by each program (0 for programs reading none)."""
    out = []
    for lo, hi in zip(starts[:-1], starts[1:]):
        bits = [args[k] for k in range(lo, hi) if ops[k] == ATOM]
        out.append(min(bits, default=0))
    return out
