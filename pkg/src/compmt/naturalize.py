"""Naturalness filtering: duplicate-lexeme rejection and selectional repair.

Two mechanisms keep generated sentences plausible.  First, any sentence in
which a content lexeme (noun, proper noun, verb or adjective lemma) appears
more than once is rejected outright; the sampler simply draws again.  Second,
verb-noun combinations in two sensitive positions — a verb with its direct
object, and a verb with an inanimate subject — are checked against a
case-frame pair list; an unlicensed noun is replaced in the derivation tree
with a licensed one and the sentence is retranslated.

The pair list is open-world by default: a (verb, role) that the list says
nothing about licenses every noun.  Under strict checking, every pair absent
from the list is a violation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .grammar import GrammarError, LeafNode, ProdNode, Slot
from .bank import analyze, content_lemmas
from .lexdata import CASE_FRAMES

ROLES = ("inanimate_subject", "direct_object")


class UnrepairableRecordError(GrammarError):
    """No admissible replacement noun exists for a selectional violation."""


@dataclass(frozen=True)
class SelViolation:
    verb: str
    role: str
    noun: str
    tag: str = ""  # slot tag of the offending noun, used to locate it


class CaseFrameList:
    """Licensed (verb, role, noun) pairs plus ranked replacement pools.

    Every pool noun is itself a member of `pairs`, so a repair can never
    introduce a new violation for the pair it fixes.
    """

    def __init__(self, rows):
        # rows: iterable of (verb, role, noun, rank)
        self.pairs = set()
        self.pool = {}
        for verb, role, noun, rank in rows:
            if role not in ROLES:
                raise GrammarError(f"unknown case-frame role {role!r}")
            self.pairs.add((verb, role, noun))
            self.pool.setdefault((verb, role), []).append((int(rank), noun))
        for key in self.pool:
            self.pool[key].sort()
        self.covered = set(self.pool)

    def licensed(self, verb, role, noun, strict=False):
        if (verb, role) not in self.covered:
            return not strict
        return (verb, role, noun) in self.pairs

    def ranked(self, verb, role):
        """Pool nouns grouped by rank, best first."""
        groups = []
        for rank, noun in self.pool.get((verb, role), ()):
            if groups and groups[-1][0] == rank:
                groups[-1][1].append(noun)
            else:
                groups.append((rank, [noun]))
        return [nouns for _rank, nouns in groups]


def default_case_frames() -> CaseFrameList:
    rows = []
    for verb, role, nouns in CASE_FRAMES:
        for i, noun in enumerate(nouns):
            rows.append((verb, role, noun, i + 1))
    return CaseFrameList(rows)


def parse_case_frames(text: str) -> CaseFrameList:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise GrammarError(
                f"case-frame line {lineno}: expected 4 columns, got "
                f"{len(cols)}")
        verb, role, noun, rank = cols
        if not rank.isdigit():
            raise GrammarError(f"case-frame line {lineno}: bad rank {rank!r}")
        rows.append((verb, role, noun, int(rank)))
    return CaseFrameList(rows)


def serialize_case_frames(cf: CaseFrameList) -> str:
    lines = ["# verb\trole\tnoun\trank"]
    for (verb, role), entries in sorted(cf.pool.items()):
        for rank, noun in entries:
            lines.append(f"{verb}\t{role}\t{noun}\t{rank}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Checks
# --------------------------------------------------------------------------


def reject_duplicates(tree) -> bool:
    """True iff some content lemma occurs at least twice in the sentence."""
    counts = Counter(content_lemmas(tree))
    return any(c >= 2 for c in counts.values())


def check_selectional(tree, cf: CaseFrameList, strict=False) -> list:
    out = []
    for verb, role, noun, tag in analyze(tree).pairs:
        if not cf.licensed(verb, role, noun, strict=strict):
            out.append(SelViolation(verb, role, noun, tag))
    return out


# --------------------------------------------------------------------------
# Repair
# --------------------------------------------------------------------------


def _locate(tree, violation):
    """The offending leaf and its slot, found by slot tag + lemma."""
    stack = [tree]
    while stack:
        node = stack.pop()
        if not isinstance(node, ProdNode):
            continue
        for sym, child in zip(node.production.rhs, node.children):
            if isinstance(child, LeafNode):
                if isinstance(sym, Slot) and child.tag == violation.tag \
                        and child.entry.lemma == violation.noun:
                    return child, sym
            else:
                stack.append(child)
    raise GrammarError(
        f"offending noun {violation.noun!r} not found in tree")


def _replace_leaf(node, old, new):
    if node is old:
        return new
    if not isinstance(node, ProdNode):
        return node
    children = tuple(_replace_leaf(c, old, new) for c in node.children)
    return ProdNode(node.production, children)


def _pick_replacement(cf, violation, slot, lexicon, present, rng):
    """Highest-ranked admissible pool noun not already in the sentence."""
    for group in cf.ranked(violation.verb, violation.role):
        entries = []
        for noun in group:
            if noun in present:
                continue
            entry = lexicon.by_key.get((noun, slot.pos))
            if entry is not None and slot.admits(entry):
                entries.append(entry)
        if entries:
            if len(entries) == 1:
                return entries[0]
            return rng.choice(sorted(entries, key=lambda e: e.lemma))
    return None


def repair(tree, violations, cf: CaseFrameList, rng, lexicon, strict=False):
    """Replace offending nouns until only multi-constraint residuals remain.

    Returns (tree, residuals).  A noun constrained by several verbs at once
    is repaired to satisfy one of its pairs; the pairs left unlicensed are
    returned rather than retried, mirroring the documented limitation of
    noun replacement.
    """
    if not violations:
        return tree, []
    residual = []
    for _ in range(len(violations) + 8):
        pending = [v for v in check_selectional(tree, cf, strict=strict)
                   if v not in residual]
        if not pending:
            break
        v = pending[0]
        leaf, slot = _locate(tree, v)
        present = set(content_lemmas(tree))
        entry = _pick_replacement(cf, v, slot, lexicon, present, rng)
        if entry is None:
            raise UnrepairableRecordError(
                f"no replacement for {v.noun!r} as {v.role} of {v.verb!r}")
        tree = _replace_leaf(tree, leaf, LeafNode(entry, leaf.bundle,
                                                  leaf.tag))
        # Any violation still involving the replaced noun is a second
        # constraint on the same position; log it instead of looping.
        for o in check_selectional(tree, cf, strict=strict):
            if o.noun == entry.lemma and o.tag == leaf.tag \
                    and o not in residual:
                residual.append(o)
    return tree, residual


def naturalize(tree, cf: CaseFrameList, rng, lexicon, strict=False):
    """Run the selectional check-and-repair cycle on one derivation tree.

    Returns (tree, residuals, changed).  Duplicate-lexeme rejection is the
    caller's job (it resamples rather than repairs).
    """
    violations = check_selectional(tree, cf, strict=strict)
    if not violations:
        return tree, [], False
    fixed, residual = repair(tree, violations, cf, rng, lexicon,
                             strict=strict)
    return fixed, residual, True
