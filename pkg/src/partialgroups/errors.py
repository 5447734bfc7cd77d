"""Structured errors raised across the package.

Every error carries its witness data as attributes so callers (and the CLI)
can report the exact violating tuple instead of a bare message.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all structured errors raised by partialgroups."""


class NotClosed(AlgebraError):
    def __init__(self, row: int, col: int, value: int):
        self.witness = (row, col, value)
        super().__init__(f"table[{row}][{col}] = {value} is outside [0, n)")


class NotAssociative(AlgebraError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class NoIdentity(AlgebraError):
    def __init__(self):
        super().__init__("no two-sided identity element in the table")


class NoInverse(AlgebraError):
    def __init__(self, element: int):
        self.witness = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotSubgroup(AlgebraError):
    def __init__(self, clause: str, witness):
        self.clause = clause
        self.witness = witness
        super().__init__(f"not a subgroup: {clause} fails at {witness}")


class OrderCapExceeded(AlgebraError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")


class NotNormal(AlgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"subgroup is not normal, witness {witness}")


class NotInCarrier(AlgebraError):
    def __init__(self, element: int):
        self.witness = element
        super().__init__(f"element {element} is not in the carrier")


class IdentityMissing(AlgebraError):
    def __init__(self):
        super().__init__("the defect set must contain the identity element")


class NotFree(AlgebraError):
    def __init__(self, defect, detail: str = "no supplement subgroup contains the defect set"):
        self.defect = tuple(defect)
        super().__init__(f"defect {self.defect} is not free with the support: {detail}")


class DefectMeetsSupport(AlgebraError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"defect element {witness} lies in the support but is not the identity")


class NotPartialSubgroup(AlgebraError):
    def __init__(self, clause: str, witness):
        self.clause = clause
        self.witness = witness
        super().__init__(f"not a partial subgroup: {clause} fails at {witness}")


class DifferentAmbient(AlgebraError):
    def __init__(self):
        super().__init__("operands live in different ambient partial groups")


class BudgetExceeded(AlgebraError):
    def __init__(self, detail: str):
        super().__init__(f"enumeration budget exceeded: {detail}")


class HypothesisUnmet(AlgebraError):
    def __init__(self, clause: str, witness=None):
        self.clause = clause
        self.witness = witness
        super().__init__(f"hypothesis not met: {clause}" + (f" at {witness}" if witness is not None else ""))


class NotNested(AlgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"subgroup is not contained in the other, witness {witness}")


class UnknownClaim(AlgebraError):
    def __init__(self, claim_id: str):
        self.claim_id = claim_id
        super().__init__(f"unknown claim id {claim_id!r}")


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
