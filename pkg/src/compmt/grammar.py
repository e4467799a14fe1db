"""Weighted context-free grammars over a featured lexicon.

The grammar side of the pipeline: lexical entries with morphological forms,
weighted productions whose right-hand sides mix nonterminals, part-of-speech
slots and literal tokens, plus validation, Zipfian lexical weighting,
seeded sampling, derivation probabilities and construct-depth analysis.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Iterator, Optional

POS_TAGS = (
    "ProperNoun",
    "CommonNoun",
    "Verb",
    "Adjective",
    "Preposition",
    "Determiner",
    "Complementizer",
    "RelPronoun",
    "WhPronoun",
    "Auxiliary",
)

# Morph-feature bundles, encoded compactly.  For verbs:
#   past = past/active/finite        pres = present/active/finite
#   part = past-participle (used after "was", i.e. passive voice)
#   inf  = infinitive (bare form)
# Non-verbs carry a single "base" form.
VERB_BUNDLES = ("past", "pres", "part", "inf")
BASE_BUNDLE = "base"

CONSTRUCTS = ("CP", "PP", "CenterEmbedRC", "Adj")


class GrammarError(Exception):
    """Raised for malformed grammars, lexicons or unsatisfiable sampling."""


class UnsatisfiableConstraintError(GrammarError):
    """Rejection budget exhausted while sampling under constraints."""


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    pos: str
    features: dict = field(default_factory=dict, hash=False)
    forms: dict = field(default_factory=dict, hash=False)
    zipf_rank: int = 1

    def form(self, bundle: str) -> str:
        try:
            return self.forms[bundle]
        except KeyError:
            raise GrammarError(
                f"entry {self.lemma}/{self.pos} has no {bundle!r} form"
            ) from None

    def matches(self, constraints: dict) -> bool:
        for key, want in constraints.items():
            have = self.features.get(key)
            if isinstance(want, (set, frozenset)):
                if isinstance(have, (set, frozenset)):
                    if not (want & have):
                        return False
                elif have not in want:
                    return False
            elif isinstance(have, (set, frozenset)):
                if want not in have:
                    return False
            elif have != want:
                return False
        return True


class Lexicon:
    """Immutable collection of entries indexed by POS and (lemma, pos)."""

    def __init__(self, entries: Iterable[LexEntry]):
        self.entries = tuple(entries)
        self.by_key = {}
        self.by_pos = {}
        for e in self.entries:
            key = (e.lemma, e.pos)
            if key in self.by_key:
                raise GrammarError(f"duplicate lexicon entry {key}")
            self.by_key[key] = e
            self.by_pos.setdefault(e.pos, []).append(e)
        for pos, group in self.by_pos.items():
            group.sort(key=lambda e: e.zipf_rank)
            ranks = [e.zipf_rank for e in group]
            if ranks != list(range(1, len(group) + 1)):
                raise GrammarError(f"zipf ranks for {pos} not contiguous from 1")

    def __len__(self):
        return len(self.entries)

    def get(self, lemma: str, pos: str) -> LexEntry:
        try:
            return self.by_key[(lemma, pos)]
        except KeyError:
            raise GrammarError(f"no lexicon entry for {lemma}/{pos}") from None


@dataclass(frozen=True)
class NT:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Slot:
    """POS slot: filled by a lexical entry surfacing a fixed morph bundle.

    ``tag`` names the grammatical position (used for lexeme restrictions and
    corpus analysis); ``lemmas`` optionally restricts to an explicit set.
    """

    pos: str
    bundle: str
    tag: str
    features: tuple = ()  # tuple of (key, value-or-frozenset) pairs
    lemmas: Optional[frozenset] = None

    def feature_dict(self) -> dict:
        return dict(self.features)

    def admits(self, entry: LexEntry) -> bool:
        if entry.pos != self.pos:
            return False
        if self.lemmas is not None and entry.lemma not in self.lemmas:
            return False
        if self.bundle not in entry.forms:
            return False
        return entry.matches(self.feature_dict())

    def __str__(self):
        parts = [f"tag={self.tag}", f"bundle={self.bundle}"]
        for key, val in self.features:
            if isinstance(val, frozenset):
                parts.append(f"{key}={'|'.join(sorted(val))}")
            else:
                parts.append(f"{key}={val}")
        if self.lemmas is not None:
            parts.append("lemmas=" + "|".join(sorted(self.lemmas)))
        return f"{self.pos}[{','.join(parts)}]"


@dataclass(frozen=True)
class Lit:
    text: str

    def __str__(self):
        return f"'{self.text}'"


Symbol = object  # NT | Slot | Lit


@dataclass(frozen=True)
class Production:
    id: str
    lhs: str
    rhs: tuple
    weight: Fraction = Fraction(1)
    construct: Optional[str] = None  # CP / PP / CenterEmbedRC / Adj
    annot_target: bool = False  # marks a pattern's target constituent

    def __post_init__(self):
        if not self.rhs:
            raise GrammarError(f"production {self.id}: empty rhs")
        if self.weight < 0:
            raise GrammarError(f"production {self.id}: negative weight")


@dataclass(frozen=True)
class ProdNode:
    production: Production
    children: tuple

    @property
    def is_leaf(self):
        return False


@dataclass(frozen=True)
class LeafNode:
    entry: LexEntry
    bundle: str
    tag: str

    @property
    def surface(self):
        return self.entry.form(self.bundle)

    @property
    def is_leaf(self):
        return True


@dataclass(frozen=True)
class LitNode:
    text: str

    @property
    def is_leaf(self):
        return True


def yield_tokens(tree) -> list:
    """Left-to-right leaf surfaces of a derivation tree."""
    out = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, LitNode):
            out.append(node.text)
        elif isinstance(node, LeafNode):
            out.append(node.surface)
        else:
            stack.extend(reversed(node.children))
    return out


def iter_productions(tree) -> Iterator[Production]:
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, ProdNode):
            yield node.production
            stack.extend(node.children)


def iter_leaves(tree) -> Iterator[LeafNode]:
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, LeafNode):
            yield node
        elif isinstance(node, ProdNode):
            stack.extend(reversed(node.children))


def depth_of(tree, construct: str) -> int:
    """Maximum nesting count of ``construct`` within itself in the tree.

    A production tagged with the construct contributes one level; the depth is
    the largest number of tagged productions on any root-to-leaf path.
    """
    if construct not in CONSTRUCTS:
        raise GrammarError(f"unknown construct {construct!r}")

    def walk(node) -> int:
        if not isinstance(node, ProdNode):
            return 0
        here = 1 if node.production.construct == construct else 0
        best = 0
        for child in node.children:
            d = walk(child)
            if d > best:
                best = d
        return here + best

    return walk(tree)


def zipf_weights(n: int, s: float) -> list:
    """Normalized Zipfian probabilities p(k) = k^-s / sum_j j^-s, k = 1..n."""
    if n < 1:
        raise GrammarError("empty lexicon: need at least one item")
    if s <= 0:
        raise GrammarError("zipf exponent must be positive")
    raw = [k ** (-float(s)) for k in range(1, n + 1)]
    total = sum(raw)
    return [w / total for w in raw]


@dataclass
class Violation:
    kind: str
    subject: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.subject} ({self.detail})"


class Pcfg:
    """Weighted CFG plus its lexicon and Zipf exponent for lexical slots."""

    def __init__(self, start: str, productions: Iterable[Production],
                 lexicon: Lexicon, zipf_exponent: float = 1.0):
        self.start = start
        self.productions = tuple(productions)
        self.lexicon = lexicon
        self.zipf_exponent = zipf_exponent
        self.by_lhs = {}
        self.by_id = {}
        for p in self.productions:
            if p.id in self.by_id:
                raise GrammarError(f"duplicate production id {p.id}")
            self.by_id[p.id] = p
            self.by_lhs.setdefault(p.lhs, []).append(p)
        self._slot_cache = {}
        self._sampler_cache = {}

    # -- lexical slot machinery -------------------------------------------

    def slot_candidates(self, slot: Slot) -> list:
        """Entries admitted by the slot, with normalized Zipf probabilities."""
        cached = self._slot_cache.get(slot)
        if cached is None:
            entries = [e for e in self.lexicon.by_pos.get(slot.pos, ())
                       if slot.admits(e)]
            if entries:
                weights = [e.zipf_rank ** (-float(self.zipf_exponent))
                           for e in entries]
                total = sum(weights)
                probs = [w / total for w in weights]
            else:
                probs = []
            cached = (entries, probs)
            self._slot_cache[slot] = cached
        return cached

    def restrict_slots(self, overrides: dict) -> "Pcfg":
        """New grammar with slot tags restricted to the given lemma sets."""
        def remap(sym):
            if isinstance(sym, Slot) and sym.tag in overrides:
                return Slot(sym.pos, sym.bundle, sym.tag, sym.features,
                            frozenset(overrides[sym.tag]))
            return sym

        prods = [
            Production(p.id, p.lhs, tuple(remap(s) for s in p.rhs), p.weight,
                       p.construct, p.annot_target)
            for p in self.productions
        ]
        return Pcfg(self.start, prods, self.lexicon, self.zipf_exponent)

    # -- validation --------------------------------------------------------

    def validate(self) -> list:
        """All invariant violations; empty list means the grammar is sound."""
        violations = []
        for lhs, prods in self.by_lhs.items():
            positive = [p for p in prods if p.weight > 0]
            if positive:
                total = sum((p.weight for p in prods), Fraction(0))
                if abs(float(total) - 1.0) > 1e-9:
                    violations.append(Violation(
                        "non_normalized", lhs, f"lhs {lhs} sums to {float(total)}"))
        # Dangling nonterminals / empty slots.
        for p in self.productions:
            for sym in p.rhs:
                if isinstance(sym, NT) and sym.name not in self.by_lhs:
                    violations.append(Violation(
                        "unproductive", sym.name,
                        f"nonterminal {sym.name} in {p.id} has no productions"))
                elif isinstance(sym, Slot):
                    entries, _ = self.slot_candidates(sym)
                    if not entries:
                        violations.append(Violation(
                            "dangling_slot", p.id,
                            f"slot {sym.tag} admits no lexicon entry"))
        # Productivity: fixpoint over nonterminals that derive a finite string.
        productive = set()
        changed = True
        while changed:
            changed = False
            for p in self.productions:
                if p.lhs in productive or p.weight == 0:
                    continue
                ok = True
                for sym in p.rhs:
                    if isinstance(sym, NT) and sym.name not in productive:
                        ok = False
                        break
                    if isinstance(sym, Slot) and not self.slot_candidates(sym)[0]:
                        ok = False
                        break
                if ok:
                    productive.add(p.lhs)
                    changed = True
        for lhs in self.by_lhs:
            if lhs not in productive:
                violations.append(Violation(
                    "unproductive", lhs, f"unproductive {lhs}"))
        # Reachability from start.
        reachable = {self.start}
        frontier = [self.start]
        while frontier:
            nt = frontier.pop()
            for p in self.by_lhs.get(nt, ()):
                for sym in p.rhs:
                    if isinstance(sym, NT) and sym.name not in reachable:
                        reachable.add(sym.name)
                        frontier.append(sym.name)
        for lhs in self.by_lhs:
            if lhs not in reachable:
                violations.append(Violation(
                    "unreachable", lhs, f"unreachable {lhs}"))
        if self.start not in self.by_lhs:
            violations.append(Violation(
                "unproductive", self.start, f"start symbol {self.start} undefined"))
        # Verb entries must carry the past form the morphology relies on.
        for e in self.lexicon.by_pos.get("Verb", ()):
            if "past" not in e.forms:
                violations.append(Violation(
                    "missing_form", e.lemma, f"verb {e.lemma} lacks a past form"))
        return violations

    # -- sampling ----------------------------------------------------------

    def _prepared(self, lhs: str):
        """Cumulative weights for the positive-weight productions of lhs."""
        cached = self._sampler_cache.get(lhs)
        if cached is None:
            prods = [p for p in self.by_lhs.get(lhs, ()) if p.weight > 0]
            if not prods:
                raise GrammarError(f"no sampleable productions for {lhs}")
            cum = []
            acc = 0.0
            for p in prods:
                acc += float(p.weight)
                cum.append(acc)
            cached = (prods, cum, acc)
            self._sampler_cache[lhs] = cached
        return cached

    def _expand(self, lhs: str, rng: Random):
        prods, cum, total = self._prepared(lhs)
        idx = bisect.bisect_right(cum, rng.random() * total)
        if idx >= len(prods):
            idx = len(prods) - 1
        prod = prods[idx]
        children = []
        for sym in prod.rhs:
            if isinstance(sym, NT):
                children.append(self._expand(sym.name, rng))
            elif isinstance(sym, Slot):
                entries, probs = self.slot_candidates(sym)
                if not entries:
                    raise GrammarError(f"slot {sym.tag} admits no entries")
                r = rng.random()
                acc = 0.0
                pick = entries[-1]
                for e, p in zip(entries, probs):
                    acc += p
                    if r < acc:
                        pick = e
                        break
                children.append(LeafNode(pick, sym.bundle, sym.tag))
            else:
                children.append(LitNode(sym.text))
        return ProdNode(prod, tuple(children))

    def sample_with_rng(self, rng: Random, constraints: "Constraints" = None):
        if constraints is None:
            return self._expand(self.start, rng)
        budget = constraints.budget
        for _ in range(budget):
            tree = self._expand(self.start, rng)
            if constraints.satisfied_by(tree):
                return tree
        raise UnsatisfiableConstraintError(
            f"constraint not satisfied after {budget} attempts: {constraints}")

    def sample(self, rng_seed: int, constraints: "Constraints" = None):
        """Draw one derivation tree; pure in (grammar, seed, constraints)."""
        return self.sample_with_rng(Random(rng_seed), constraints)

    def sample_many(self, rng_seed: int, n: int,
                    constraints: "Constraints" = None) -> list:
        rng = Random(rng_seed)
        return [self.sample_with_rng(rng, constraints) for _ in range(n)]

    # -- probabilities -----------------------------------------------------

    def derivation_probability(self, tree) -> float:
        """Product of normalized rule weights and Zipfian lexical choices."""
        prob = 1.0

        def walk(node):
            nonlocal prob
            prod = node.production
            if prod.id not in self.by_id:
                raise GrammarError(f"foreign production {prod.id}")
            total = sum((p.weight for p in self.by_lhs[prod.lhs]), Fraction(0))
            prob *= float(prod.weight / total)
            for sym, child in zip(prod.rhs, node.children):
                if isinstance(sym, NT):
                    walk(child)
                elif isinstance(sym, Slot):
                    entries, probs = self.slot_candidates(sym)
                    for e, p in zip(entries, probs):
                        if e is child.entry:
                            prob *= p
                            break
                    else:
                        raise GrammarError(
                            f"entry {child.entry.lemma} not admitted by {sym.tag}")

        walk(tree)
        return prob


@dataclass
class Constraints:
    """Restrictions for rejection sampling.

    ``required``/``forbidden`` are production ids; ``depths`` maps a construct
    name to the exact depth the tree must show.
    """

    required: frozenset = frozenset()
    forbidden: frozenset = frozenset()
    depths: tuple = ()  # ((construct, depth), ...)
    budget: int = 10_000

    def satisfied_by(self, tree) -> bool:
        ids = {p.id for p in iter_productions(tree)}
        if self.required - ids:
            return False
        if self.forbidden & ids:
            return False
        for construct, depth in self.depths:
            if depth_of(tree, construct) != depth:
                return False
        return True

    def __str__(self):
        bits = []
        if self.required:
            bits.append("required=" + ",".join(sorted(self.required)))
        if self.forbidden:
            bits.append("forbidden=" + ",".join(sorted(self.forbidden)))
        if self.depths:
            bits.append("depths=" + ",".join(f"{c}={d}" for c, d in self.depths))
        return "; ".join(bits) or "none"


# -- file formats ----------------------------------------------------------

_SLOT_RE = re.compile(r"^([A-Za-z]+)\[(.*)\]$")


def _parse_symbol(token: str):
    if token.startswith("'") and token.endswith("'") and len(token) >= 2:
        return Lit(token[1:-1])
    m = _SLOT_RE.match(token)
    if m and m.group(1) in POS_TAGS:
        pos = m.group(1)
        fields = {}
        for part in m.group(2).split(","):
            if not part:
                continue
            key, _, val = part.partition("=")
            fields[key] = val
        bundle = fields.pop("bundle", BASE_BUNDLE)
        tag = fields.pop("tag", pos.lower())
        lemmas = fields.pop("lemmas", None)
        feats = []
        for key, val in fields.items():
            if "|" in val:
                feats.append((key, frozenset(val.split("|"))))
            else:
                feats.append((key, val))
        return Slot(pos, bundle, tag, tuple(feats),
                    frozenset(lemmas.split("|")) if lemmas else None)
    return NT(token)


def parse_grammar_file(text: str, lexicon: Lexicon, start: str = "ROOT",
                       zipf_exponent: float = 1.0) -> Pcfg:
    """Load the line-oriented grammar format.

    ``<id> <TAB> <lhs> -> <rhs tokens> <TAB> <weight>`` with optional trailing
    ``<TAB> key=value`` metadata (construct/annot tags); ``#`` comments.
    """
    prods = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 3:
            raise GrammarError(f"line {lineno}: expected 3 tab-separated fields")
        pid, rule, weight = parts[0], parts[1], parts[2]
        meta = {}
        for extra in parts[3:]:
            key, _, val = extra.partition("=")
            meta[key] = val
        lhs, _, rhs_text = rule.partition("->")
        lhs = lhs.strip()
        rhs = tuple(_parse_symbol(t) for t in rhs_text.split())
        if not lhs or not rhs:
            raise GrammarError(f"line {lineno}: malformed rule")
        prods.append(Production(
            pid, lhs, rhs, Fraction(weight),
            construct=meta.get("construct"),
            annot_target=meta.get("annot") == "1"))
    return Pcfg(start, prods, lexicon, zipf_exponent)


def serialize_grammar(g: Pcfg) -> str:
    lines = ["# one production per line: id <TAB> lhs -> rhs <TAB> weight"]
    for p in g.productions:
        rhs = " ".join(
            str(s) if not isinstance(s, NT) else s.name for s in p.rhs)
        extras = []
        if p.construct:
            extras.append(f"construct={p.construct}")
        if p.annot_target:
            extras.append("annot=1")
        fields = [p.id, f"{p.lhs} -> {rhs}", str(p.weight)] + extras
        lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def parse_lexicon_tsv(text: str) -> Lexicon:
    """Load the lexicon TSV: lemma, pos, features, forms, zipf_rank."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 5:
            raise GrammarError(f"lexicon line {lineno}: expected 5 columns")
        lemma, pos, feat_s, form_s, rank = cols
        features = {}
        for part in feat_s.split(";"):
            if not part:
                continue
            key, _, val = part.partition("=")
            if "|" in val:
                features[key] = frozenset(val.split("|"))
            else:
                features[key] = val
        forms = {}
        for part in form_s.split(";"):
            if not part:
                continue
            bundle, _, surface = part.partition("=")
            forms[bundle] = surface
        entries.append(LexEntry(lemma, pos, features, forms, int(rank)))
    return Lexicon(entries)


def serialize_lexicon(lexicon: Lexicon) -> str:
    lines = ["# lemma <TAB> pos <TAB> features <TAB> forms <TAB> zipf_rank"]
    for e in lexicon.entries:
        feats = []
        for key, val in sorted(e.features.items()):
            if isinstance(val, (set, frozenset)):
                feats.append(f"{key}={'|'.join(sorted(val))}")
            else:
                feats.append(f"{key}={val}")
        forms = ";".join(f"{b}={s}" for b, s in sorted(e.forms.items()))
        lines.append("\t".join(
            [e.lemma, e.pos, ";".join(feats), forms, str(e.zipf_rank)]))
    return "\n".join(lines) + "\n"
