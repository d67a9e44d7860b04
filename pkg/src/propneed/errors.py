"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class PropneedError(Exception):
    pass


class AttachmentNotFound(PropneedError, KeyError):
    def __init__(self, constructor: str, prop: str):
        super().__init__(f"no attachment ({constructor} {prop})")
        self.constructor = constructor
        self.prop = prop

    def __str__(self) -> str:
        return self.args[0]


class ParseError(PropneedError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line else ""
        super().__init__(where + message)


class ValidationError(PropneedError):
    """A library failed validation; ``diagnostics`` lists every violation."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class BudgetExceeded(PropneedError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{needed} axiom instances exceed budget {budget}")


class OracleBoundExceeded(PropneedError):
    def __init__(self, atoms: int, bound: int):
        self.atoms = atoms
        self.bound = bound
        super().__init__(f"{atoms} atoms exceed oracle bound {bound}")


class MalformedItem(PropneedError):
    pass


class BaselineFailed(PropneedError):
    def __init__(self, item: str):
        self.item = item
        super().__init__(f"item {item} does not verify in its full environment")


class UnknownItem(PropneedError, KeyError):
    def __init__(self, item: str):
        super().__init__(f"unknown item {item}")
        self.item = item

    def __str__(self) -> str:
        return self.args[0]


class MissingDirectEntry(PropneedError, KeyError):
    def __init__(self, item: str):
        super().__init__(f"no direct need set for item {item}")
        self.item = item

    def __str__(self) -> str:
        return self.args[0]
