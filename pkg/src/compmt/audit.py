"""Leakage audit for the train/generalization gap.

Every generalization pattern withholds one combination from training: a
lexeme in a grammatical role, a verb in a (frame, tense, voice) cell, a
phrase type on a syntactic position, a recursion depth, or a question
structure.  The audit re-parses every training sentence and checks two
directions:

* no training sentence realizes a withheld combination (leakage), and
* training does contain each pattern's prerequisites — the target lexemes
  in their licensed uses and the questioned structures with free lexemes.

Parsing uses a union grammar: the in-distribution productions plus every
pattern grammar's productions, with slot lexeme restrictions lifted.  The
restrictions exist to *prevent* held-out material during sampling; the
audit must instead *recognize* such material wherever it appears.  Lifting
them makes some frames string-ambiguous (``Harper wrote .`` parses as
object-omission or plain intransitive), so a sentence is charged only with
the violations of its most innocent parse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bank import analyze, default_bank
from .earley import parse
from .grammar import CONSTRUCTS, Pcfg, Production, Slot

PARSE_LIMIT = 50

# Structural flags raised by analyze() that correspond one-to-one with a
# withheld structure.  Any flagged training parse is a leak.
FLAG_PATTERNS = {
    "pp_on_subj": "pp_in_subj",
    "pp_on_iobj": "pp_in_iobj",
    "rc_on_subj": "rc_in_subj",
    "rc_on_iobj": "rc_in_iobj",
    "adj_on_subj": "adj_in_subj",
    "adj_on_iobj": "adj_in_iobj",
    "rc_gap_iobj": "rc_iobj_gap",
    "wh_gap_iobj": "wh_iobj_gap",
    "wh_active_subj": "wh_active_subj",
    "wh_passive_subj": "wh_passive_subj",
    "wh_do_dit": "wh_do_dit",
    "wh_subj_pp": "wh_subj_pp",
    "wh_long_move": "wh_long_move",
}

# Recursion constructs and their shallower/deeper pattern ids.
DEPTH_PATTERNS = {
    "CP": ("cp_recursion_shallower", "cp_recursion_deeper"),
    "PP": ("pp_recursion_shallower", "pp_recursion_deeper"),
    "CenterEmbedRC": ("ce_recursion_shallower", "ce_recursion_deeper"),
    "Adj": ("adj_recursion_shallower", "adj_recursion_deeper"),
}
WITHHELD_DEPTH = 3
REQUIRED_DEPTHS = (1, 2, 4)

# Verb-slot tag stems normalized to a canonical frame name.  Embedded
# ("e"-prefixed), free-clause ("f"-prefixed), relative-clause and
# wh-question variants of a frame count as the frame itself, and frames
# that are surface-identical (plain intransitive, object omission,
# unaccusative) collapse together: the gap is about observable usage.
_CANON_FRAME = {
    "etrans": "trans", "ftrans": "trans", "rc": "trans", "rcs": "trans",
    "wht": "trans", "whts": "trans",
    "eintrans": "intrans", "fintrans": "intrans",
    "objom": "intrans", "eobjom": "intrans",
    "unacc": "intrans", "eunacc": "intrans", "funacc": "intrans",
    "edo": "do", "rcsdo": "do",
    "eppdat": "ppdat",
    "einf": "inf",
    "einfbase": "infbase",
    "ecp": "cp",
    "epass": "pass", "fpass": "pass",
    "epassdat": "passdat",
    "rcio": "dit",
}

# Wh-question and iobj-gap ditransitives surface under one slot tag that
# does not distinguish double-object from prepositional datives; a cell
# with this frame is licensed when either dative realization is.
_EITHER_DATIVE = ("do", "ppdat")

# Licensed (frame, tense, voice) cells for each verb-targeting pattern.
# A target verb observed in training outside its pattern's cell set is a
# leak of the withheld combination.
_A, _P = "active", "passive"
VERB_LICENSES = {
    "prim_to_inf_verb": frozenset(),  # bare citation forms only
    "tense_dit": frozenset({("do", "past", _A), ("ppdat", "past", _A)}),
    "tense_inf": frozenset({("inf", "past", _A)}),
    "tense_cp": frozenset({("cp", "past", _A)}),
    "trans_to_dit": frozenset({
        ("trans", "past", _A), ("trans", "pres", _A),
        ("do", "past", _A), ("ppdat", "past", _A)}),
    "trans_to_inf": frozenset({
        ("trans", "past", _A), ("trans", "pres", _A), ("inf", "past", _A)}),
    "trans_to_cp": frozenset({
        ("trans", "past", _A), ("trans", "pres", _A), ("cp", "past", _A)}),
    "active_to_passive": frozenset({
        ("trans", "past", _A), ("trans", "pres", _A)}),
    "passive_to_active": frozenset({("pass", "past", _P)}),
    "objom_to_trans": frozenset({
        ("intrans", "past", _A), ("intrans", "pres", _A)}),
    "unacc_to_trans": frozenset({
        ("intrans", "past", _A), ("intrans", "pres", _A)}),
    "do_to_pp": frozenset({("do", "past", _A), ("do", "pres", _A)}),
    "pp_to_do": frozenset({("ppdat", "past", _A), ("ppdat", "pres", _A)}),
}

# Licensed grammatical roles for each noun-targeting lexical pattern.  The
# primitive-exposure patterns license no sentential role at all: their
# targets appear in training only as bare citation forms.
NOUN_LICENSES = {
    "subj_to_obj_common": frozenset({"subject"}),
    "subj_to_obj_proper": frozenset({"subject"}),
    "obj_to_subj_common": frozenset({"direct_object", "indirect_object"}),
    "obj_to_subj_proper": frozenset({"direct_object", "indirect_object"}),
    "prim_to_subj_common": frozenset(),
    "prim_to_subj_proper": frozenset(),
    "prim_to_obj_common": frozenset(),
    "prim_to_obj_proper": frozenset(),
}


@dataclass(frozen=True)
class GapViolation:
    pattern_id: str
    kind: str  # "leak", "unparsable", or "missing_prerequisite"
    detail: str
    record_id: str = ""
    sentence: str = ""

    def __str__(self):
        where = f" [{self.record_id}]" if self.record_id else ""
        return f"{self.pattern_id}: {self.kind}: {self.detail}{where}"


def _widen(sym):
    if isinstance(sym, Slot):
        return Slot(sym.pos, sym.bundle, sym.tag, sym.features, None)
    return sym


def _signature(lhs, rhs):
    parts = [lhs]
    for s in rhs:
        if isinstance(s, Slot):
            parts.append(("slot", s.pos, s.bundle, s.tag))
        elif hasattr(s, "name"):
            parts.append(("nt", s.name))
        else:
            parts.append(("lit", s.text))
    return tuple(parts)


def audit_grammar(bank, patterns) -> Pcfg:
    """Union of the in-distribution and all pattern grammars, with slot
    lexeme restrictions lifted so withheld material still parses.

    Productions sharing an id but differing in shape (a pattern grammar
    repurposing an id under another nonterminal) are kept under suffixed
    ids; analyses only depend on slot tags, constructs and the flagged
    ids, none of which are suffixed.
    """
    grammars = [bank.grammar_for("in_dist")]
    grammars.extend(p.gen_grammar for p in patterns)
    merged, seen = [], {}
    for g in grammars:
        for prod in g.productions:
            rhs = tuple(_widen(s) for s in prod.rhs)
            sig = _signature(prod.lhs, rhs)
            variants = seen.setdefault(prod.id, [])
            if sig in variants:
                continue
            pid = prod.id if not variants else f"{prod.id}__{len(variants)}"
            variants.append(sig)
            merged.append(Production(pid, prod.lhs, rhs, prod.weight,
                                     prod.construct, prod.annot_target))
    return Pcfg("ROOT", merged, bank.lexicon, 1.0)


def segment(tokens):
    """Sentence segments of a (possibly concatenated) source token list."""
    segs, cur = [], []
    for tok in tokens:
        cur.append(tok)
        if tok in (".", "?"):
            segs.append(cur)
            cur = []
    if cur:
        segs.append(cur)
    return segs


class GapAuditor:
    """Stateful single pass over training records.

    Call :meth:`consume` for every training record, then
    :meth:`prerequisite_violations` once; leakage violations accumulate in
    :attr:`violations`.
    """

    def __init__(self, patterns, bank=None):
        self.bank = bank if bank is not None else default_bank()
        self.patterns = list(patterns)
        self.grammar = audit_grammar(self.bank, self.patterns)
        self.violations = []
        # Prerequisite evidence gathered along the way.
        self._bare = set()  # lemmas seen as bare citation forms
        self._noun_roles = set()  # (lemma, role)
        self._verb_cells = set()  # (lemma, frame, tense, voice)
        self._depths_seen = {c: set() for c in CONSTRUCTS}
        self._frames_seen = set()
        self._questions = 0
        self._target_patterns = self._index_targets()

    def _index_targets(self):
        idx = {}
        for p in self.patterns:
            for lemma in p.target_lexemes:
                idx.setdefault(lemma, []).append(p.id)
        return idx

    # -- per-record leak checks -------------------------------------------

    def consume(self, record):
        for seg in segment(record.source_tokens):
            if len(seg) == 1 and seg[0] not in (".", "?"):
                self._bare.add(self._citation_lemma(seg[0]))
                continue
            self._consume_segment(record, seg)

    def _citation_lemma(self, token):
        for pos in ("CommonNoun", "ProperNoun"):
            if (token, pos) in self.bank.lexicon.by_key:
                return token
        for entry in self.bank.lexicon.by_pos.get("Verb", ()):
            if entry.forms.get("inf") == token:
                return entry.lemma
        return token

    def _consume_segment(self, record, seg):
        trees = parse(self.grammar, seg, limit=PARSE_LIMIT)
        if not trees and seg and seg[0][:1].isupper():
            lowered = [seg[0][0].lower() + seg[0][1:]] + seg[1:]
            trees = parse(self.grammar, lowered, limit=PARSE_LIMIT)
        sentence = " ".join(seg)
        if not trees:
            self.violations.append(GapViolation(
                "", "unparsable", "no parse under the audit grammar",
                record.id, sentence))
            return
        # Charge the segment with its most innocent reading.
        best = None
        for tree in trees:
            an = analyze(tree)
            viols = self._analysis_violations(an, record.id, sentence)
            if best is None or len(viols) < len(best[0]):
                best = (viols, an)
            if not viols:
                break
        viols, an = best
        self.violations.extend(viols)
        self._record_evidence(an, seg)

    def _analysis_violations(self, an, record_id, sentence):
        out = []
        for lemma, role in an.lemma_roles:
            for pid in self._target_patterns.get(lemma, ()):
                allowed = NOUN_LICENSES.get(pid)
                if allowed is not None and role not in allowed:
                    out.append(GapViolation(
                        pid, "leak", f"target {lemma!r} used as {role}",
                        record_id, sentence))
        for lemma, frame, tense, voice in an.verbs:
            cell = (_CANON_FRAME.get(frame, frame), tense, voice)
            for pid in self._target_patterns.get(lemma, ()):
                allowed = VERB_LICENSES.get(pid)
                if allowed is None:
                    continue
                if cell[0] == "dit":
                    if any((f, tense, voice) in allowed
                           for f in _EITHER_DATIVE):
                        continue
                if cell not in allowed:
                    out.append(GapViolation(
                        pid, "leak",
                        f"target {lemma!r} in withheld cell {cell}",
                        record_id, sentence))
        for flag in an.flags:
            pid = FLAG_PATTERNS.get(flag)
            if pid is not None:
                out.append(GapViolation(
                    pid, "leak", f"withheld structure {flag}",
                    record_id, sentence))
        for construct, (shallow, deep) in DEPTH_PATTERNS.items():
            d = an.depths.get(construct, 0)
            if d == WITHHELD_DEPTH:
                out.append(GapViolation(
                    shallow, "leak",
                    f"{construct} recursion depth {d}", record_id, sentence))
            elif d > WITHHELD_DEPTH + 1:
                out.append(GapViolation(
                    deep, "leak",
                    f"{construct} recursion depth {d}", record_id, sentence))
        return out

    def _record_evidence(self, an, seg):
        self._noun_roles.update(an.lemma_roles)
        for lemma, frame, tense, voice in an.verbs:
            canon = _CANON_FRAME.get(frame, frame)
            self._verb_cells.add((lemma, canon, tense, voice))
            self._frames_seen.add(canon)
        for construct in CONSTRUCTS:
            self._depths_seen[construct].add(an.depths.get(construct, 0))
        if seg and seg[-1] == "?":
            self._questions += 1

    # -- corpus-level prerequisite checks ---------------------------------

    def prerequisite_violations(self):
        out = []
        for p in self.patterns:
            out.extend(self._pattern_prereqs(p))
        return out

    def _pattern_prereqs(self, p):
        missing = []

        def miss(detail):
            missing.append(GapViolation(p.id, "missing_prerequisite", detail))

        if p.id in NOUN_LICENSES:
            allowed = NOUN_LICENSES[p.id]
            for lemma in p.target_lexemes:
                if allowed:
                    if not any((lemma, r) in self._noun_roles
                               for r in allowed):
                        miss(f"no licensed use of {lemma!r}")
                elif lemma not in self._bare:
                    miss(f"no bare exposure of {lemma!r}")
        elif p.id in VERB_LICENSES:
            allowed = VERB_LICENSES[p.id]
            for lemma in p.target_lexemes:
                if allowed:
                    if not any((lemma,) + cell in self._verb_cells
                               for cell in allowed):
                        miss(f"no licensed use of {lemma!r}")
                elif lemma not in self._bare:
                    miss(f"no bare exposure of {lemma!r}")
        elif p.id in _STRUCT_PREREQS:
            for check, detail in _STRUCT_PREREQS[p.id]:
                if not check(self):
                    miss(detail)
        return missing


def _has_depth(construct, depth):
    return lambda a: depth in a._depths_seen[construct]


def _has_frame(frame):
    return lambda a: frame in a._frames_seen


def _has_question(a):
    return a._questions > 0


def _depth_prereqs(construct):
    return [(_has_depth(construct, d), f"no {construct} depth-{d} sentence")
            for d in REQUIRED_DEPTHS]


_STRUCT_PREREQS = {
    "pp_in_subj": [(_has_depth("PP", 1), "no PP-modified phrase")],
    "pp_in_iobj": [(_has_depth("PP", 1), "no PP-modified phrase"),
                   (_has_frame("do"), "no double-object sentence")],
    "rc_in_subj": [(_has_depth("CenterEmbedRC", 1), "no relative clause")],
    "rc_in_iobj": [(_has_depth("CenterEmbedRC", 1), "no relative clause"),
                   (_has_frame("do"), "no double-object sentence")],
    "adj_in_subj": [(_has_depth("Adj", 1), "no adjective-modified phrase")],
    "adj_in_iobj": [(_has_depth("Adj", 1), "no adjective-modified phrase"),
                    (_has_frame("do"), "no double-object sentence")],
    "cp_recursion_shallower": _depth_prereqs("CP"),
    "cp_recursion_deeper": _depth_prereqs("CP"),
    "pp_recursion_shallower": _depth_prereqs("PP"),
    "pp_recursion_deeper": _depth_prereqs("PP"),
    "ce_recursion_shallower": _depth_prereqs("CenterEmbedRC"),
    "ce_recursion_deeper": _depth_prereqs("CenterEmbedRC"),
    "adj_recursion_shallower": _depth_prereqs("Adj"),
    "adj_recursion_deeper": _depth_prereqs("Adj"),
    "rc_iobj_gap": [(_has_depth("CenterEmbedRC", 1), "no relative clause"),
                    (_has_frame("do"), "no double-object sentence")],
    "wh_iobj_gap": [(_has_question, "no question sentence")],
    "wh_active_subj": [(_has_question, "no question sentence")],
    "wh_passive_subj": [(_has_question, "no question sentence"),
                        (_has_frame("pass"), "no passive sentence")],
    "wh_do_dit": [(_has_question, "no question sentence"),
                  (_has_frame("do"), "no double-object sentence")],
    "wh_subj_pp": [(_has_question, "no question sentence"),
                   (_has_depth("PP", 1), "no PP-modified phrase")],
    "wh_long_move": [(_has_question, "no question sentence"),
                     (_has_depth("CP", 1), "no complement clause")],
}


def audit_gap(records, patterns, bank=None):
    """All leakage and missing-prerequisite violations for a training set.

    ``records`` is the iterable of training records (other splits carry no
    gap obligations); ``patterns`` the full pattern inventory.
    """
    auditor = GapAuditor(patterns, bank=bank)
    for record in records:
        auditor.consume(record)
    return auditor.violations + auditor.prerequisite_violations()
