"""Propositional formulas over named atoms, checked by exhaustive truth table.

This is the composition calculus behind the scenario family: a statement
template combines a premise t, two condition atoms p and q, and a conclusion
r into generating problems (t AND p -> r, t AND q -> r), a combined problem
over p OR q (or p XOR q when the conditions exclude each other), and the
inverse problem (t AND r -> p OR q).  Equivalence checking is constraint
relative because the exclusive-disjunction algebra is valid only under the
mutual-exclusivity assumption NOT (p AND q); the engine can demonstrate both
the failure without the constraint and the success with it.

Concrete syntax (ASCII): ``!`` NOT, ``&`` AND, ``|`` OR, ``^`` XOR, ``->``
IMPLIES, ``<->`` IFF; precedence NOT > AND > OR = XOR > IMPLIES > IFF, all
binary connectives left-associative, parentheses allowed.

Truth tables, not SAT: the atom counts here are tiny, and an exhaustive
table is simple to audit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple, Union


class FormulaSyntaxError(ValueError):
    """Malformed formula text; ``position`` is the 1-based token index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at token {position}")
        self.position = position


class AtomBudgetError(ValueError):
    """Too many distinct atoms for exhaustive enumeration."""


class SchemeVerificationError(RuntimeError):
    """Internal consistency check of a composed scheme failed."""


MAX_ATOMS = 20


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Xor:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"


Formula = Union[Atom, Not, And, Or, Xor, Implies, Iff]


def atom_names(formula: Formula) -> frozenset:
    if isinstance(formula, Atom):
        return frozenset((formula.name,))
    if isinstance(formula, Not):
        return atom_names(formula.operand)
    return atom_names(formula.lhs) | atom_names(formula.rhs)


def evaluate(formula: Formula, assignment: Mapping[str, bool]) -> bool:
    if isinstance(formula, Atom):
        return bool(assignment[formula.name])
    if isinstance(formula, Not):
        return not evaluate(formula.operand, assignment)
    a = evaluate(formula.lhs, assignment)
    b = evaluate(formula.rhs, assignment)
    if isinstance(formula, And):
        return a and b
    if isinstance(formula, Or):
        return a or b
    if isinstance(formula, Xor):
        return a != b
    if isinstance(formula, Implies):
        return (not a) or b
    return a == b


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<op><->|->|[!&|^()]))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens: List[Tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise FormulaSyntaxError(
                    f"unexpected character {text[pos:].strip()[0]!r}",
                    len(tokens) + 1)
            break
        pos = m.end()
        if m.group("name"):
            tokens.append(("name", m.group("name")))
        elif m.group("op"):
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Tuple[str, str]]):
        self.tokens = tokens
        self.index = 0

    @property
    def position(self) -> int:
        return self.index + 1

    def peek_op(self) -> Optional[str]:
        if self.index < len(self.tokens) and self.tokens[self.index][0] == "op":
            return self.tokens[self.index][1]
        return None

    def advance(self):
        self.index += 1

    def parse(self) -> Formula:
        node = self.parse_iff()
        if self.index != len(self.tokens):
            raise FormulaSyntaxError(
                f"unexpected {self.tokens[self.index][1]!r}", self.position)
        return node

    def parse_iff(self) -> Formula:
        node = self.parse_implies()
        while self.peek_op() == "<->":
            self.advance()
            node = Iff(node, self.parse_implies())
        return node

    def parse_implies(self) -> Formula:
        node = self.parse_or()
        while self.peek_op() == "->":
            self.advance()
            node = Implies(node, self.parse_or())
        return node

    def parse_or(self) -> Formula:
        node = self.parse_and()
        while self.peek_op() in ("|", "^"):
            op = self.peek_op()
            self.advance()
            rhs = self.parse_and()
            node = Or(node, rhs) if op == "|" else Xor(node, rhs)
        return node

    def parse_and(self) -> Formula:
        node = self.parse_not()
        while self.peek_op() == "&":
            self.advance()
            node = And(node, self.parse_not())
        return node

    def parse_not(self) -> Formula:
        if self.peek_op() == "!":
            self.advance()
            return Not(self.parse_not())
        return self.parse_primary()

    def parse_primary(self) -> Formula:
        if self.index >= len(self.tokens):
            raise FormulaSyntaxError("unexpected end of input", self.position)
        kind, text = self.tokens[self.index]
        if kind == "name":
            self.advance()
            return Atom(text)
        if text == "(":
            self.advance()
            node = self.parse_iff()
            if self.peek_op() != ")":
                raise FormulaSyntaxError("expected ')'", self.position)
            self.advance()
            return node
        raise FormulaSyntaxError(f"expected atom or '(', got {text!r}",
                                 self.position)


def parse_formula(text: str) -> Formula:
    return _Parser(_tokenize(text)).parse()


_PREC = {Iff: 1, Implies: 2, Or: 3, Xor: 3, And: 4, Not: 5, Atom: 6}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", Xor: "^", And: "&"}


def format_formula(formula: Formula) -> str:
    """Minimal-parentheses rendering; parses back to an equal tree."""
    prec = _PREC[type(formula)]
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        inner = format_formula(formula.operand)
        if _PREC[type(formula.operand)] < prec:
            inner = f"({inner})"
        return f"!{inner}"
    lhs = format_formula(formula.lhs)
    if _PREC[type(formula.lhs)] < prec:
        lhs = f"({lhs})"
    rhs = format_formula(formula.rhs)
    # left-associative grammar: equal precedence on the right needs parens
    if _PREC[type(formula.rhs)] <= prec:
        rhs = f"({rhs})"
    return f"{lhs} {_SYMBOL[type(formula)]} {rhs}"


# -- equivalence --------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: Optional[Dict[str, bool]]
    rows: int
    constrained_rows: int

    def __bool__(self) -> bool:
        return self.equivalent


def equivalent(f1: Formula, f2: Formula,
               constraint: Optional[Formula] = None) -> EquivalenceResult:
    """Truth-table equivalence of f1 and f2 over assignments satisfying the
    constraint (all assignments when no constraint is given).

    The first differing assignment, in lexicographic order over sorted atom
    names with false before true, is returned as the witness.
    """
    names = atom_names(f1) | atom_names(f2)
    if constraint is not None:
        names |= atom_names(constraint)
    ordered = sorted(names)
    if len(ordered) > MAX_ATOMS:
        raise AtomBudgetError(
            f"{len(ordered)} atoms exceed the exhaustive budget of {MAX_ATOMS}")
    rows = 0
    constrained = 0
    witness = None
    for values in product((False, True), repeat=len(ordered)):
        rows += 1
        assignment = dict(zip(ordered, values))
        if constraint is not None and not evaluate(constraint, assignment):
            continue
        constrained += 1
        if witness is None and \
                evaluate(f1, assignment) != evaluate(f2, assignment):
            witness = assignment
    return EquivalenceResult(witness is None, witness, rows, constrained)


# -- composition schemes ------------------------------------------------------

@dataclass(frozen=True)
class ProblemScheme:
    """Derived formulas of one premise/conditions/conclusion template."""

    premise: str
    condition_p: str
    condition_q: str
    conclusion: str
    kind: str                 # "inclusive" | "exclusive"
    generating_1: Formula
    generating_2: Formula
    combined: Formula
    inverse: Formula


def compose_scheme(t: str, p: str, q: str, r: str, kind: str) -> ProblemScheme:
    """Build the generating, combined, and inverse formulas for atoms t, p,
    q, r, and verify that the combined problem equals the conjunction of the
    generating ones (for the exclusive kind, under NOT (p AND q))."""
    if kind not in ("inclusive", "exclusive"):
        raise ValueError("kind must be 'inclusive' or 'exclusive'")
    if len({t, p, q, r}) != 4:
        raise ValueError("atoms t, p, q, r must be distinct")
    at, ap, aq, ar = Atom(t), Atom(p), Atom(q), Atom(r)
    disjunction = Or(ap, aq) if kind == "inclusive" else Xor(ap, aq)
    scheme = ProblemScheme(
        premise=t, condition_p=p, condition_q=q, conclusion=r, kind=kind,
        generating_1=Implies(And(at, ap), ar),
        generating_2=Implies(And(at, aq), ar),
        combined=Implies(And(at, disjunction), ar),
        inverse=Implies(And(at, ar), disjunction),
    )
    constraint = None if kind == "inclusive" else Not(And(ap, aq))
    check = equivalent(And(scheme.generating_1, scheme.generating_2),
                       scheme.combined, constraint)
    if not check.equivalent:
        raise SchemeVerificationError(
            f"combined formula not equivalent to generating pair: "
            f"witness {check.witness}")
    return scheme


# -- the named equivalence suite ----------------------------------------------

@dataclass(frozen=True)
class LogicCheck:
    name: str
    result: EquivalenceResult
    constrained: bool

    @property
    def passed(self) -> bool:
        return self.result.equivalent


def verify_scheme_equivalences() -> List[LogicCheck]:
    """The six equivalences underpinning the composition calculus.

    Two unconstrained template identities over {t, p, q, r} (16 rows each)
    and four mutual-exclusivity facts over {p, q} checked under the
    constraint NOT (p AND q) (4 rows, 3 satisfying).
    """
    t, p, q, r = Atom("t"), Atom("p"), Atom("q"), Atom("r")
    not_both = Not(And(p, q))
    pairs = [
        ("combined-inclusive-equals-generating-pair",
         And(Implies(And(t, p), r), Implies(And(t, q), r)),
         Implies(And(t, Or(p, q)), r), None),
        ("combined-exclusive-equals-generating-pair",
         And(Implies(And(t, And(p, Not(q))), r),
             Implies(And(t, And(Not(p), q)), r)),
         Implies(And(t, Xor(p, q)), r), None),
        ("exclusive-reduces-p-and-not-q-to-p",
         And(p, Not(q)), p, not_both),
        ("exclusive-reduces-not-p-and-q-to-q",
         And(Not(p), q), q, not_both),
        ("not-xor-equals-clause-pair",
         Not(Xor(p, q)), And(Or(p, Not(q)), Or(Not(p), q)), not_both),
        ("clause-pair-collapses-to-neither",
         And(Or(p, Not(q)), Or(Not(p), q)), And(Not(p), Not(q)), not_both),
    ]
    return [LogicCheck(name, equivalent(f1, f2, c), c is not None)
            for name, f1, f2, c in pairs]
