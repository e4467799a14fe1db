"""Tree transduction from English derivation trees to Japanese token output.

Each source production id maps to a target template; templates interleave
child references, literal morphemes (case particles, complementizer "to",
the question particle) and morphology directives that inflect a verb leaf.
Templates are applied bottom-up, yielding a target tree whose linearization
is the SOV reference translation.  English function words (determiners,
auxiliaries, relative pronouns) are simply never referenced by a template
and therefore drop.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .grammar import GrammarError, LeafNode, LitNode, ProdNode, yield_tokens


class TransductionError(GrammarError):
    """Uncovered production/lexeme or ill-formed template."""


# English morph bundle -> (tense, voice) as the morphology table sees it.
BUNDLE_TV = {
    "past": ("past", "active"),
    "pres": ("pres", "active"),
    "part": ("past", "passive"),
    "inf": ("pres", "active"),
}


@dataclass(frozen=True)
class TItem:
    kind: str  # "child" | "lit" | "morph" | "q"
    index: int = -1
    tense: Optional[str] = None
    voice: Optional[str] = None
    text: str = ""

    def __str__(self):
        if self.kind == "child":
            return f"${self.index}"
        if self.kind == "lit":
            return self.text
        if self.kind == "q":
            return "@q"
        args = [str(self.index)]
        if self.tense:
            args.append(self.tense)
        if self.voice:
            args.append(self.voice)
        return f"@morph({','.join(args)})"


@dataclass(frozen=True)
class TransductionRule:
    source_production_id: str
    template: tuple  # of TItem


class TransductionRuleSet:
    def __init__(self, rules: Iterable[TransductionRule]):
        self.by_id = {}
        for r in rules:
            if r.source_production_id in self.by_id:
                raise TransductionError(
                    f"duplicate transduction rule for {r.source_production_id}")
            self.by_id[r.source_production_id] = r

    def __len__(self):
        return len(self.by_id)

    def get(self, production_id: str) -> TransductionRule:
        try:
            return self.by_id[production_id]
        except KeyError:
            raise TransductionError(
                f"uncovered production {production_id}: no transduction rule"
            ) from None

    def validate_against(self, g) -> list:
        """Template/production mismatches: bad index, double ref, literal ref."""
        from .grammar import Lit, Violation
        problems = []
        for pid, prod in g.by_id.items():
            if pid not in self.by_id:
                problems.append(Violation(
                    "uncovered_production", pid, "no transduction rule"))
                continue
            seen = set()
            for item in self.by_id[pid].template:
                if item.kind not in ("child", "morph"):
                    continue
                if not (0 <= item.index < len(prod.rhs)):
                    problems.append(Violation(
                        "bad_child_ref", pid, f"index {item.index} out of range"))
                    continue
                if item.index in seen:
                    problems.append(Violation(
                        "double_child_ref", pid, f"child {item.index} referenced twice"))
                seen.add(item.index)
                if isinstance(prod.rhs[item.index], Lit):
                    problems.append(Violation(
                        "literal_child_ref", pid,
                        f"child {item.index} is a literal terminal"))
        return problems


class BilingualDictionary:
    """(lemma, pos, bundle) -> target morpheme tokens.

    Verb entries store their morphology class and one stem per form slot
    under the bundles "class", "stem_past", "stem_pres", "stem_pass".
    """

    def __init__(self, rows: Iterable[tuple]):
        self.entries = {}
        for lemma, pos, bundle, tokens in rows:
            key = (lemma, pos, bundle)
            if key in self.entries:
                raise TransductionError(f"duplicate dictionary entry {key}")
            self.entries[key] = tuple(tokens)

    def __len__(self):
        return len(self.entries)

    def lookup(self, lemma: str, pos: str, bundle: str) -> tuple:
        try:
            return self.entries[(lemma, pos, bundle)]
        except KeyError:
            raise TransductionError(
                f"uncovered lexeme {lemma}/{pos} (bundle {bundle})") from None

    def verb_class(self, lemma: str) -> str:
        return self.lookup(lemma, "Verb", "class")[0]


class MorphTable:
    """(verb class, tense, voice) -> (stem slot, suffix tokens); question "ka"."""

    def __init__(self, rows: Iterable[tuple], question_particle: str = "ka"):
        self.rules = {}
        for cls, tense, voice, stem_key, suffixes in rows:
            self.rules[(cls, tense, voice)] = (stem_key, tuple(suffixes))
        self.question_particle = question_particle

    def inflect(self, cls: str, tense: str, voice: str) -> tuple:
        try:
            return self.rules[(cls, tense, voice)]
        except KeyError:
            raise TransductionError(
                f"no morphology for class {cls!r} {tense}/{voice}") from None


# -- target trees -----------------------------------------------------------

@dataclass(frozen=True)
class TLeaf:
    token: str
    src_index: Optional[int] = None  # source leaf position, None for particles

    @property
    def is_leaf(self):
        return True


@dataclass(frozen=True)
class TNode:
    source: object  # the ProdNode / LeafNode this node rewrites
    children: tuple

    @property
    def is_leaf(self):
        return False


@dataclass(frozen=True)
class SentencePair:
    source_tokens: tuple
    target_tokens: tuple
    alignment: dict = field(hash=False, default_factory=dict)


def linearize(tt) -> list:
    """Left-to-right target tokens of a target tree."""
    out = []
    stack = [tt]
    while stack:
        node = stack.pop()
        if isinstance(node, TLeaf):
            out.append(node.token)
        else:
            stack.extend(reversed(node.children))
    return out


def _leaf_indices(tree) -> dict:
    index = {}
    pos = 0
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, (LeafNode, LitNode)):
            index[id(node)] = pos
            pos += 1
        else:
            stack.extend(reversed(node.children))
    return index


def transduce(tree: ProdNode, rules: TransductionRuleSet,
              dictionary: BilingualDictionary, morph: MorphTable) -> TNode:
    """Rewrite a source derivation tree into a target tree, bottom-up."""
    src_index = _leaf_indices(tree)

    def render_leaf(leaf: LeafNode, tense, voice) -> TNode:
        idx = src_index[id(leaf)]
        entry = leaf.entry
        if entry.pos == "Verb":
            bt, bv = BUNDLE_TV[leaf.bundle]
            cls = dictionary.verb_class(entry.lemma)
            stem_key, suffixes = morph.inflect(cls, tense or bt, voice or bv)
            tokens = dictionary.lookup(entry.lemma, "Verb", stem_key) + suffixes
        else:
            tokens = dictionary.lookup(entry.lemma, entry.pos, leaf.bundle)
        return TNode(leaf, tuple(TLeaf(t, idx) for t in tokens))

    def rewrite(node: ProdNode) -> TNode:
        rule = rules.get(node.production.id)
        out = []
        for item in rule.template:
            if item.kind == "lit":
                out.append(TLeaf(item.text))
            elif item.kind == "q":
                out.append(TLeaf(morph.question_particle))
            elif item.kind == "child":
                child = node.children[item.index]
                if isinstance(child, ProdNode):
                    out.append(rewrite(child))
                elif isinstance(child, LeafNode):
                    out.append(render_leaf(child, None, None))
                else:
                    raise TransductionError(
                        f"rule {rule.source_production_id}: template references "
                        f"literal child {item.index}")
            else:  # morph directive
                child = node.children[item.index]
                if not isinstance(child, LeafNode) or child.entry.pos != "Verb":
                    raise TransductionError(
                        f"rule {rule.source_production_id}: @morph target "
                        f"{item.index} is not a verb leaf")
                out.append(render_leaf(child, item.tense, item.voice))
        return TNode(node, tuple(out))

    return rewrite(tree)


def alignment_of(tt: TNode) -> dict:
    """Source leaf index -> contiguous (start, end) span in target tokens."""
    spans = {}
    pos = 0
    stack = [tt]
    order = []
    while stack:
        node = stack.pop()
        if isinstance(node, TLeaf):
            order.append(node)
        else:
            stack.extend(reversed(node.children))
    for leaf in order:
        if leaf.src_index is not None:
            start, end = spans.get(leaf.src_index, (pos, pos))
            spans[leaf.src_index] = (min(start, pos), pos + 1)
        pos += 1
    return spans


def target_spans(tt: TNode) -> list:
    """(source node, start, end) for every target node, in preorder."""
    out = []

    def walk(node, offset):
        if isinstance(node, TLeaf):
            return offset + 1
        start = offset
        for child in node.children:
            offset = walk(child, offset)
        out.append((node.source, start, offset))
        return offset

    walk(tt, 0)
    return out


def span_for_source(tt: TNode, src_node) -> Optional[tuple]:
    for source, start, end in target_spans(tt):
        if source is src_node:
            return (start, end)
    return None


def translate(tree: ProdNode, rules: TransductionRuleSet,
              dictionary: BilingualDictionary, morph: MorphTable) -> SentencePair:
    tt = transduce(tree, rules, dictionary, morph)
    return SentencePair(
        tuple(yield_tokens(tree)),
        tuple(linearize(tt)),
        alignment_of(tt))


# -- file formats -----------------------------------------------------------

_MORPH_RE = re.compile(r"^@morph\((\d+)(?:,([a-z]+))?(?:,([a-z]+))?\)$")
_CHILD_RE = re.compile(r"^\$(\d+)$")


def _parse_item(token: str) -> TItem:
    m = _CHILD_RE.match(token)
    if m:
        return TItem("child", int(m.group(1)))
    if token == "@q":
        return TItem("q")
    m = _MORPH_RE.match(token)
    if m:
        return TItem("morph", int(m.group(1)), m.group(2), m.group(3))
    if token.startswith("@") or token.startswith("$"):
        raise TransductionError(f"malformed template token {token!r}")
    return TItem("lit", text=token)


def parse_rules_file(text: str) -> TransductionRuleSet:
    """`<production id> <TAB> <template tokens>`; empty template drops all."""
    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        pid, tab, template = line.partition("\t")
        if not tab:
            raise TransductionError(f"rules line {lineno}: missing tab")
        items = tuple(_parse_item(t) for t in template.split())
        rules.append(TransductionRule(pid.strip(), items))
    return TransductionRuleSet(rules)


def serialize_rules(rules: TransductionRuleSet) -> str:
    lines = ["# production id <TAB> template ($k, @morph(k[,tense[,voice]]), @q, literals)"]
    for pid in sorted(rules.by_id):
        template = " ".join(str(i) for i in rules.by_id[pid].template)
        lines.append(f"{pid}\t{template}")
    return "\n".join(lines) + "\n"


def parse_dictionary_tsv(text: str) -> BilingualDictionary:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise TransductionError(f"dictionary line {lineno}: expected 4 columns")
        lemma, pos, bundle, tokens = cols
        rows.append((lemma, pos, bundle, tuple(tokens.split())))
    return BilingualDictionary(rows)


def serialize_dictionary(d: BilingualDictionary) -> str:
    lines = ["# lemma <TAB> pos <TAB> bundle <TAB> target tokens"]
    for (lemma, pos, bundle), tokens in sorted(d.entries.items()):
        lines.append("\t".join([lemma, pos, bundle, " ".join(tokens)]))
    return "\n".join(lines) + "\n"


def parse_morph_tsv(text: str) -> MorphTable:
    rows = []
    question = "ka"
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if cols[0] == "question":
            question = cols[1]
            continue
        if len(cols) != 5:
            raise TransductionError(f"morphology line {lineno}: expected 5 columns")
        cls, tense, voice, stem_key, suffixes = cols
        rows.append((cls, tense, voice, stem_key, tuple(suffixes.split())))
    return MorphTable(rows, question)


def serialize_morph(m: MorphTable) -> str:
    lines = ["# class <TAB> tense <TAB> voice <TAB> stem slot <TAB> suffix tokens"]
    for (cls, tense, voice), (stem_key, sufs) in sorted(m.rules.items()):
        lines.append("\t".join([cls, tense, voice, stem_key, " ".join(sufs)]))
    lines.append(f"question\t{m.question_particle}")
    return "\n".join(lines) + "\n"


def default_dictionary() -> BilingualDictionary:
    from .lexdata import dictionary_rows
    return BilingualDictionary(dictionary_rows())


def default_morph() -> MorphTable:
    from .lexdata import MORPH_ROWS, QUESTION_PARTICLE
    return MorphTable(MORPH_ROWS, QUESTION_PARTICLE)
