"""The bundled grammar bank: lexeme pools, the in-distribution grammar with
its transduction templates, and derivation-tree analysis.

Slot tags encode grammatical positions ("n:subj:c", "v:do:past", ...) so that
lexeme restrictions target exactly one position and corpus analysis can read
roles, verb frames and construction flags straight off a tree.  Production
ids are the transduction keys and are shared between the in-distribution
grammar and the per-pattern generalization grammars wherever the shape (and
hence the template) is identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .grammar import (
    CONSTRUCTS, Lit, NT, Pcfg, Production, Slot,
    LeafNode, ProdNode, depth_of, iter_leaves,
)
from .lexdata import (
    ADJECTIVES, ANIMATE_NOUNS, INANIMATE_NOUNS, PREPOSITIONS, PROPER_NOUNS,
    VERBS, build_lexicon,
)
from .transduce import TransductionRule, TransductionRuleSet, _parse_item

# --------------------------------------------------------------------------
# Target lexeme sets (five per lexical pattern; tense sets are four regular
# verbs plus one irregular).
# --------------------------------------------------------------------------

SUBJ2OBJ_C = ("goat", "wolf", "fox", "deer", "sheep")
SUBJ2OBJ_P = ("Chris", "Morgan", "Casey", "Jordan", "Riley")
OBJ2SUBJ_C = ("panda", "zebra", "camel", "koala", "lemur")
OBJ2SUBJ_P = ("Taylor", "Quinn", "Avery", "Rowan", "Sage")
PRIM_SUBJ_C = ("thief", "spy", "pilot", "nurse", "clown")
PRIM_SUBJ_P = ("Coco", "Milo", "Ziggy", "Juno", "Remy")
PRIM_OBJ_C = ("trainer", "editor", "barber", "tailor", "magician")
PRIM_OBJ_P = ("Nova", "Kai", "Suki", "Bodhi", "Luca")
PRIM_VERBS = ("jump", "dance", "swim", "shout", "laugh")
TENSE_DIT = ("offer", "hand", "pass", "award", "lend")
TENSE_INF = ("want", "plan", "decide", "attempt", "choose")
TENSE_CP = ("believe", "hope", "realize", "expect", "think")
TRANS2DIT = ("show", "serve", "mail", "promise", "sell")
TRANS2INF = ("prepare", "start", "continue", "try", "begin")
TRANS2CP = ("learn", "notice", "discover", "confirm", "understand")
ACT2PASS = ("move", "recognize", "raise", "carry", "push")
PASS2ACT = ("drop", "use", "clean", "lift", "support")
OBJOM2TRANS = ("write", "draw", "paint", "study", "cook")
UNACC2TRANS = ("explode", "melt", "burn", "roll", "change")
DO2PP = ("grant", "assign", "issue", "toss", "feed")
PP2DO = ("gift", "forward", "ship", "deliver", "send")

# Verbs whose curated case frames could trigger a repair; generalization
# grammars keep them away from clauses holding a target noun so that a
# repair can never rewrite the target lexeme itself.
CASE_FRAME_VERBS = ("eat", "drink", "cook", "bloom")

# -- noun pools -------------------------------------------------------------

_ANIM = tuple(lemma for lemma, _ in ANIMATE_NOUNS)
_INANIM = tuple(lemma for lemma, _, _ in INANIMATE_NOUNS)
_PROP = tuple(lemma for lemma, _ in PROPER_NOUNS)
LOC_NOUNS = tuple(lemma for lemma, _, loc in INANIMATE_NOUNS if loc)

_NOUN_TARGETS_C = frozenset(SUBJ2OBJ_C + OBJ2SUBJ_C + PRIM_SUBJ_C + PRIM_OBJ_C)
_NOUN_TARGETS_P = frozenset(SUBJ2OBJ_P + OBJ2SUBJ_P + PRIM_SUBJ_P + PRIM_OBJ_P)

FREE_ANIM = tuple(x for x in _ANIM if x not in _NOUN_TARGETS_C)
FREE_PROP = tuple(x for x in _PROP if x not in _NOUN_TARGETS_P)
SUBJ_ANIM = FREE_ANIM + SUBJ2OBJ_C
SUBJ_PROP = FREE_PROP + SUBJ2OBJ_P
OBJ_ANIM = FREE_ANIM + OBJ2SUBJ_C
OBJ_PROP = FREE_PROP + OBJ2SUBJ_P
DOBJ_POOL = OBJ_ANIM + _INANIM
PSUBJ_POOL = FREE_ANIM + _INANIM
INANIM_POOL = _INANIM

# -- verb pools -------------------------------------------------------------


def _verbs_with(frame):
    return tuple(v[0] for v in VERBS if frame in v[3].split())


def _minus(pool, *excl):
    gone = frozenset(x for e in excl for x in e)
    return tuple(x for x in pool if x not in gone)


V_TRANS = _minus(_verbs_with("trans"), PASS2ACT, OBJOM2TRANS, UNACC2TRANS)
V_TRANS_SAFE = _minus(V_TRANS, CASE_FRAME_VERBS)
V_PASS = _minus(_verbs_with("passv"), ACT2PASS, TENSE_DIT, TRANS2DIT,
                DO2PP, PP2DO, OBJOM2TRANS, UNACC2TRANS)
V_PASSDAT = tuple(v for v in _verbs_with("dit") if v in V_PASS)
V_OBJOM = _verbs_with("objom")
V_UNACC = _verbs_with("unacc")
V_INTRANS = _minus(_verbs_with("intrans"), PRIM_VERBS)
V_INFBASE = _minus(_verbs_with("infbase"), PRIM_VERBS)
V_DO_PAST = _minus(_verbs_with("dit"), PP2DO)
V_DO_PRES = _minus(V_DO_PAST, TENSE_DIT, TRANS2DIT)
V_PPDAT_PAST = _minus(_verbs_with("dit"), DO2PP)
V_PPDAT_PRES = _minus(V_PPDAT_PAST, TENSE_DIT, TRANS2DIT)
V_CP_PAST = _verbs_with("cp")
V_CP_PRES = _minus(V_CP_PAST, TENSE_CP, TRANS2CP)
V_INF_PAST = _verbs_with("inf")
V_INF_PRES = _minus(V_INF_PAST, TENSE_INF, TRANS2INF)

# -- symbol factories -------------------------------------------------------


def n(tag, pool):
    return Slot("CommonNoun", "base", tag, lemmas=frozenset(pool))


def pn(tag, pool):
    return Slot("ProperNoun", "base", tag, lemmas=frozenset(pool))


def v(tag, bundle, pool):
    return Slot("Verb", bundle, tag, lemmas=frozenset(pool))


def adj():
    return Slot("Adjective", "base", "a:mod")


def prep():
    return Slot("Preposition", "base", "p:prep")


DET = NT("DET")
L = Lit


class GrammarSpec:
    """Accumulates productions together with their transduction templates."""

    def __init__(self):
        self.prods = []
        self.templates = {}

    def add(self, pid, lhs, rhs, weight, template,
            construct=None, annot=False):
        self.prods.append(Production(
            pid, lhs, tuple(rhs), Fraction(weight), construct, annot))
        self.templates[pid] = tuple(
            _parse_item(t) for t in template.split())

    def grammar(self, lexicon, start="ROOT", zipf_exponent=1.0):
        return Pcfg(start, self.prods, lexicon, zipf_exponent)


def _np_pair(spec, nt, pid_stem, tag_stem, common_pool, proper_pool,
             w_common="7/10", annot=False):
    spec.add(f"np_{pid_stem}_c", nt, [DET, n(f"n:{tag_stem}:c", common_pool)],
             w_common, "$1", annot=annot)
    spec.add(f"np_{pid_stem}_p", nt, [pn(f"n:{tag_stem}:p", proper_pool)],
             str(Fraction(1) - Fraction(w_common)), "$0", annot=annot)


def _det(spec):
    spec.add("det_the", "DET", [L("the")], "1/2", "")
    spec.add("det_a", "DET", [L("a")], "1/2", "")


def in_distribution_spec() -> GrammarSpec:
    g = GrammarSpec()

    # Roots.  Topicalized roots carry weight 0: parse-only, produced by the
    # topicalization transform in the split builder.
    g.add("root_decl", "ROOT", [NT("S"), L(".")], "17/20", "$0")
    g.add("root_q", "ROOT", [NT("SQ")], "3/20", "$0")
    g.add("root_topic_past", "ROOT",
          [NT("NP_DOBJ"), L(","), NT("NP_SUBJ"),
           v("v:trans:past", "past", V_TRANS), L(".")],
          "0", "$0 wa $2 ga @morph(3)")
    g.add("root_topic_pres", "ROOT",
          [NT("NP_DOBJ"), L(","), NT("NP_SUBJ"),
           v("v:trans:pres", "pres", V_TRANS), L(".")],
          "0", "$0 wa $2 ga @morph(3)")

    # Matrix clauses.
    g.add("s_trans_past", "S",
          [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS), NT("NP_DOBJ")],
          "17/100", "$0 ga $2 o @morph(1)")
    g.add("s_trans_pres", "S",
          [NT("NP_SUBJ"), v("v:trans:pres", "pres", V_TRANS), NT("NP_DOBJ")],
          "9/100", "$0 ga $2 o @morph(1)")
    g.add("s_intrans_past", "S",
          [NT("NP_SUBJ"), v("v:intrans:past", "past", V_INTRANS)],
          "5/100", "$0 ga @morph(1)")
    g.add("s_intrans_pres", "S",
          [NT("NP_SUBJ"), v("v:intrans:pres", "pres", V_INTRANS)],
          "3/100", "$0 ga @morph(1)")
    g.add("s_unacc_past", "S",
          [NT("NP_ISUBJ"), v("v:unacc:past", "past", V_UNACC)],
          "4/100", "$0 ga @morph(1)")
    g.add("s_unacc_pres", "S",
          [NT("NP_ISUBJ"), v("v:unacc:pres", "pres", V_UNACC)],
          "3/100", "$0 ga @morph(1)")
    g.add("s_objom_past", "S",
          [NT("NP_SUBJ"), v("v:objom:past", "past", V_OBJOM)],
          "3/100", "$0 ga @morph(1)")
    g.add("s_objom_pres", "S",
          [NT("NP_SUBJ"), v("v:objom:pres", "pres", V_OBJOM)],
          "2/100", "$0 ga @morph(1)")
    g.add("s_pass", "S",
          [NT("NP_PSUBJ"), L("was"), v("v:pass", "part", V_PASS)],
          "4/100", "$0 ga @morph(2)")
    g.add("s_pass_by", "S",
          [NT("NP_PSUBJ"), L("was"), v("v:pass", "part", V_PASS),
           L("by"), NT("NP_AGENT")],
          "4/100", "$0 ga $4 niyotte @morph(2)")
    g.add("s_passdat", "S",
          [NT("NP_PSUBJ"), L("was"), v("v:passdat", "part", V_PASSDAT),
           L("to"), NT("NP_IOBJ")],
          "3/100", "$0 ga $4 ni @morph(2)")
    g.add("s_do_past", "S",
          [NT("NP_SUBJ"), v("v:do:past", "past", V_DO_PAST),
           NT("NP_IOBJ"), NT("NP_DOBJ")],
          "6/100", "$0 ga $2 ni $3 o @morph(1)")
    g.add("s_do_pres", "S",
          [NT("NP_SUBJ"), v("v:do:pres", "pres", V_DO_PRES),
           NT("NP_IOBJ"), NT("NP_DOBJ")],
          "3/100", "$0 ga $2 ni $3 o @morph(1)")
    g.add("s_ppdat_past", "S",
          [NT("NP_SUBJ"), v("v:ppdat:past", "past", V_PPDAT_PAST),
           NT("NP_DOBJ"), L("to"), NT("NP_IOBJ")],
          "6/100", "$0 ga $2 o $4 ni @morph(1)")
    g.add("s_ppdat_pres", "S",
          [NT("NP_SUBJ"), v("v:ppdat:pres", "pres", V_PPDAT_PRES),
           NT("NP_DOBJ"), L("to"), NT("NP_IOBJ")],
          "3/100", "$0 ga $2 o $4 ni @morph(1)")
    g.add("s_cp_past", "S",
          [NT("NP_SUBJ"), v("v:cp:past", "past", V_CP_PAST), NT("CP")],
          "8/100", "$0 ga $2 @morph(1)")
    g.add("s_cp_pres", "S",
          [NT("NP_SUBJ"), v("v:cp:pres", "pres", V_CP_PRES), NT("CP")],
          "4/100", "$0 ga $2 @morph(1)")
    g.add("s_inf_past", "S",
          [NT("NP_SUBJ"), v("v:inf:past", "past", V_INF_PAST),
           L("to"), v("v:infbase", "inf", V_INFBASE)],
          "8/100", "$0 ga @morph(3,pres) koto o @morph(1)")
    g.add("s_inf_pres", "S",
          [NT("NP_SUBJ"), v("v:inf:pres", "pres", V_INF_PRES),
           L("to"), v("v:infbase", "inf", V_INFBASE)],
          "5/100", "$0 ga @morph(3,pres) koto o @morph(1)")

    # Wh-questions seen in distribution: transitive only, past only.
    g.add("q_whosubj", "SQ",
          [L("Who"), v("v:whts:past", "past", V_TRANS), NT("NP_DOBJ"), L("?")],
          "4/10", "dare ga $2 o @morph(1) @q ?")
    g.add("q_whatobj", "SQ",
          [L("What"), L("did"), NT("NP_SUBJ"),
           v("v:wht:inf", "inf", V_TRANS), L("?")],
          "3/10", "$2 ga nani o @morph(3,past) @q ?")
    g.add("q_whoobj", "SQ",
          [L("Who"), L("did"), NT("NP_SUBJ"),
           v("v:wht:inf", "inf", V_TRANS), L("?")],
          "3/10", "$2 ga dare o @morph(3,past) @q ?")

    # Noun phrases by position.
    _np_pair(g, "NP_SUBJ", "subj", "subj", SUBJ_ANIM, SUBJ_PROP)
    g.add("np_isubj", "NP_ISUBJ", [DET, n("n:isubj", INANIM_POOL)], "1", "$1")
    _np_pair(g, "NP_PSUBJ", "psubj", "psubj", PSUBJ_POOL, FREE_PROP)
    _np_pair(g, "NP_IOBJ", "iobj", "iobj", OBJ_ANIM, OBJ_PROP)
    _np_pair(g, "NP_AGENT", "agent", "agent", FREE_ANIM, FREE_PROP)

    g.add("np_dobj_c", "NP_DOBJ", [DET, n("n:dobj:c", DOBJ_POOL)],
          "30/100", "$1")
    g.add("np_dobj_p", "NP_DOBJ", [pn("n:dobj:p", OBJ_PROP)], "14/100", "$0")
    g.add("np_dobj_adj", "NP_DOBJ",
          [DET, NT("ADJSEQ"), n("n:dobj:c", DOBJ_POOL)], "14/100", "$1 $2")
    g.add("np_dobj_pp", "NP_DOBJ",
          [DET, n("n:dobj:c", DOBJ_POOL), NT("PP")], "14/100", "$2 $1")
    g.add("np_dobj_rco", "NP_DOBJ",
          [DET, n("n:dobj:c", DOBJ_POOL), NT("RC_OBJ")], "14/100", "$2 $1")
    g.add("np_dobj_rcs", "NP_DOBJ",
          [DET, n("n:dobj:c", OBJ_ANIM), NT("RC_SUBJ")], "14/100", "$2 $1")

    # Prepositional phrases (noun attachment only; "Y no <rel> no X").
    g.add("pp_mod", "PP", [prep(), NT("NP_PPN")], "1", "$1 no $0 no",
          construct="PP")
    g.add("np_ppn", "NP_PPN", [DET, n("n:ppn", LOC_NOUNS)], "7/10", "$1")
    g.add("np_ppn_pp", "NP_PPN", [DET, n("n:ppn", LOC_NOUNS), NT("PP")],
          "3/10", "$2 $1")

    # Stacked prenominal adjectives.
    g.add("adj_one", "ADJSEQ", [adj()], "7/10", "$0", construct="Adj")
    g.add("adj_more", "ADJSEQ", [adj(), NT("ADJSEQ")], "3/10", "$0 $1",
          construct="Adj")

    # Relative clauses.  Object-gap RCs center-embed through NP_CESUBJ.
    g.add("rc_objgap", "RC_OBJ",
          [L("that"), NT("NP_CESUBJ"), v("v:rc:past", "past", V_TRANS)],
          "1", "$1 ga @morph(2)", construct="CenterEmbedRC")
    g.add("np_cesubj_c", "NP_CESUBJ", [DET, n("n:cesubj:c", SUBJ_ANIM)],
          "45/100", "$1")
    g.add("np_cesubj_p", "NP_CESUBJ", [pn("n:cesubj:p", SUBJ_PROP)],
          "25/100", "$0")
    g.add("np_cesubj_rc", "NP_CESUBJ",
          [DET, n("n:cesubj:c", SUBJ_ANIM), NT("RC_OBJ")], "30/100", "$2 $1")
    g.add("rc_subjgap_t", "RC_SUBJ",
          [L("that"), v("v:rcs:past", "past", V_TRANS), NT("NP_RCOBJ")],
          "7/10", "$2 o @morph(1)")
    g.add("rc_subjgap_do", "RC_SUBJ",
          [L("that"), v("v:rcsdo:past", "past", V_DO_PAST),
           NT("NP_RCIOBJ"), NT("NP_RCOBJ")],
          "3/10", "$2 ni $3 o @morph(1)")
    _np_pair(g, "NP_RCOBJ", "rcobj", "rcobj", DOBJ_POOL, OBJ_PROP)
    _np_pair(g, "NP_RCIOBJ", "rciobj", "rciobj", OBJ_ANIM, OBJ_PROP)

    # Complement clauses.
    g.add("cp_clause", "CP", [L("that"), NT("SEMB")], "1", "$1 to",
          construct="CP")
    g.add("semb_trans", "SEMB",
          [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS),
           NT("NP_EDOBJ")],
          "30/100", "$0 ga $2 o @morph(1)")
    g.add("semb_intrans", "SEMB",
          [NT("NP_ESUBJ"), v("v:eintrans:past", "past", V_INTRANS)],
          "15/100", "$0 ga @morph(1)")
    g.add("semb_unacc", "SEMB",
          [NT("NP_EISUBJ"), v("v:eunacc:past", "past", V_UNACC)],
          "10/100", "$0 ga @morph(1)")
    g.add("semb_pass", "SEMB",
          [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", V_PASS)],
          "10/100", "$0 ga @morph(2)")
    g.add("semb_pass_by", "SEMB",
          [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", V_PASS),
           L("by"), NT("NP_EAGENT")],
          "10/100", "$0 ga $4 niyotte @morph(2)")
    g.add("semb_cp", "SEMB",
          [NT("NP_ESUBJ"), v("v:ecp:past", "past", V_CP_PAST), NT("CP")],
          "25/100", "$0 ga $2 @morph(1)")
    _np_pair(g, "NP_ESUBJ", "esubj", "esubj", SUBJ_ANIM, SUBJ_PROP)
    _np_pair(g, "NP_EDOBJ", "edobj", "edobj", DOBJ_POOL, OBJ_PROP)
    g.add("np_eisubj", "NP_EISUBJ", [DET, n("n:eisubj", INANIM_POOL)],
          "1", "$1")
    _np_pair(g, "NP_EPSUBJ", "epsubj", "epsubj", PSUBJ_POOL, FREE_PROP)
    _np_pair(g, "NP_EAGENT", "eagent", "eagent", FREE_ANIM, FREE_PROP)

    _det(g)
    return g


# --------------------------------------------------------------------------
# Tree analysis: roles, verb frames, selectional pairs, flags, depths.
# --------------------------------------------------------------------------

# Slot-tag stem (between "n:" and an optional ":c"/":p") -> grammatical role.
ROLE_BY_TAG = {
    "subj": "subject", "esubj": "subject", "cesubj": "subject",
    "rcsubj": "subject", "whsubj": "subject", "osubj": "subject",
    "isubj": "subject", "eisubj": "subject", "fisubj": "subject",
    "psubj": "subject", "epsubj": "subject",
    "fsubj": "subject", "fpsubj": "subject",
    "dobj": "direct_object", "edobj": "direct_object",
    "rcobj": "direct_object", "fdobj": "direct_object",
    "iobj": "indirect_object", "eiobj": "indirect_object",
    "rciobj": "indirect_object",
    "agent": "agent", "eagent": "agent", "fagent": "agent",
    "ppn": "pp_noun",
}

# Tags whose noun participates in selectional checking, with the checked
# role.  Passive subjects are deep direct objects; inanimate-subject checks
# cover active inanimate subjects only (animate subjects are never checked).
_SELECTIONAL_ROLE = {
    "dobj": "direct_object", "edobj": "direct_object",
    "rcobj": "direct_object", "fdobj": "direct_object",
    "psubj": "direct_object", "epsubj": "direct_object",
    "fpsubj": "direct_object",
    "isubj": "inanimate_subject", "eisubj": "inanimate_subject",
    "fisubj": "inanimate_subject",
}

# Production-id prefixes whose presence becomes an analysis flag.
_FLAG_IDS = {
    "root_topic_past": "topic", "root_topic_pres": "topic",
    "np_subj_pp": "pp_on_subj", "np_isubj_pp": "pp_on_subj",
    "np_esubj_pp": "pp_on_subj", "np_eisubj_pp": "pp_on_subj",
    "np_iobj_pp": "pp_on_iobj", "np_eiobj_pp": "pp_on_iobj",
    "np_subj_rcs": "rc_on_subj", "np_subj_rco": "rc_on_subj",
    "np_esubj_rcs": "rc_on_subj", "np_esubj_rco": "rc_on_subj",
    "np_iobj_rcs": "rc_on_iobj", "np_iobj_rco": "rc_on_iobj",
    "np_eiobj_rcs": "rc_on_iobj", "np_eiobj_rco": "rc_on_iobj",
    "np_subj_adj": "adj_on_subj", "np_esubj_adj": "adj_on_subj",
    "np_iobj_adj": "adj_on_iobj", "np_eiobj_adj": "adj_on_iobj",
    "rc_iobjgap": "rc_gap_iobj", "np_dobj_rcio": "rc_gap_iobj",
    "np_edobj_rcio": "rc_gap_iobj",
    "q_whoiobj": "wh_gap_iobj",
    "q_whsubj_intrans": "wh_active_subj", "q_whsubj_inf": "wh_active_subj",
    "q_whsubj_objom": "wh_active_subj", "q_whsubj_cp": "wh_active_subj",
    "q_whsubj_do": "wh_active_subj", "q_whsubj_ppdat": "wh_active_subj",
    "q_whatpass": "wh_passive_subj", "q_whatpass_by": "wh_passive_subj",
    "q_whatdit": "wh_do_dit",
    "np_whsubj_pp": "wh_subj_pp",
    "q_whlong": "wh_long_move",
}

CONTENT_POS = ("CommonNoun", "ProperNoun", "Verb", "Adjective")


def tag_role(tag: str):
    if not tag.startswith("n:"):
        return None
    stem = tag.split(":")[1]
    return ROLE_BY_TAG.get(stem)


def _tag_stem(tag: str) -> str:
    return tag.split(":")[1] if ":" in tag else tag


@dataclass
class Analysis:
    lemma_roles: list = field(default_factory=list)  # (lemma, role)
    verbs: list = field(default_factory=list)  # (lemma, frame, tense, voice)
    pairs: list = field(default_factory=list)  # (verb, sel-role, noun, tag)
    flags: set = field(default_factory=set)
    depths: dict = field(default_factory=dict)  # construct -> depth


def _verb_facts(leaf: LeafNode):
    parts = leaf.tag.split(":")
    frame = parts[1] if len(parts) > 1 else "unknown"
    if leaf.bundle == "part":
        tense, voice = "past", "passive"
    elif leaf.bundle == "inf":
        # Bare form after "did" (semantically past) or after "to" (tenseless).
        tense = None if frame == "infbase" else "past"
        voice = "active"
    else:
        tense, voice = leaf.bundle, "active"
    return (leaf.entry.lemma, frame, tense, voice)


def _np_head(node):
    """Head noun leaf of an NP subtree: the role-tagged leaf reachable
    without entering a clause (verb-bearing production) or a PP."""
    stack = [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, LeafNode):
            if cur.tag.startswith("n:") and _tag_stem(cur.tag) != "ppn":
                return cur
            continue
        if not isinstance(cur, ProdNode):
            continue
        if cur is not node and _is_clause(cur.production):
            continue
        if cur.production.id.startswith("pp_"):
            continue
        stack.extend(cur.children)
    return None


def _is_clause(prod: Production) -> bool:
    return any(isinstance(s, Slot) and s.pos == "Verb" for s in prod.rhs)


def analyze(tree: ProdNode) -> Analysis:
    out = Analysis()
    for c in CONSTRUCTS:
        out.depths[c] = depth_of(tree, c)

    def clause(node: ProdNode):
        """Collect facts for the clause headed at node, recursing into
        nested clauses separately."""
        verb = None
        heads = []
        for child in node.children:
            if isinstance(child, LeafNode):
                if child.entry.pos == "Verb":
                    out.verbs.append(_verb_facts(child))
                    if verb is None and _tag_stem(child.tag) != "infbase":
                        verb = child
            elif isinstance(child, ProdNode):
                if _is_clause(child.production):
                    clause(child)
                else:
                    walk_np(child, heads)
        for head in heads:
            stem = _tag_stem(head.tag)
            sel = _SELECTIONAL_ROLE.get(stem)
            if verb is not None and sel is not None:
                if sel == "inanimate_subject" or \
                        head.entry.features.get("animacy") == "inanimate" \
                        or sel == "direct_object":
                    out.pairs.append(
                        (verb.entry.lemma, sel, head.entry.lemma, head.tag))

    def walk_np(node: ProdNode, heads):
        """Record the head of this NP and descend into its modifiers."""
        head = _np_head(node)
        if head is not None:
            heads.append(head)
        stack = list(node.children)
        while stack:
            cur = stack.pop()
            if not isinstance(cur, ProdNode):
                continue
            if _is_clause(cur.production):
                clause(cur)
                # Gap link: the head is the object of an object-gap RC.
                if cur.production.id == "rc_objgap" and head is not None:
                    rcv = next((ch for ch in cur.children
                                if isinstance(ch, LeafNode)
                                and ch.entry.pos == "Verb"), None)
                    if rcv is not None:
                        out.pairs.append(
                            (rcv.entry.lemma, "direct_object",
                             head.entry.lemma, head.tag))
            else:
                stack.extend(cur.children)

    clause(tree)
    for leaf in iter_leaves(tree):
        role = tag_role(leaf.tag)
        if role is not None:
            out.lemma_roles.append((leaf.entry.lemma, role))
    for prod_id in {p.id for p in _iter_prod_ids(tree)}:
        flag = _FLAG_IDS.get(prod_id)
        if flag:
            out.flags.add(flag)
    return out


def _iter_prod_ids(tree):
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, ProdNode):
            yield node.production
            stack.extend(node.children)


def content_lemmas(tree) -> list:
    return [leaf.entry.lemma for leaf in iter_leaves(tree)
            if leaf.entry.pos in CONTENT_POS]


# --------------------------------------------------------------------------
# Assembled bank
# --------------------------------------------------------------------------


def merge_templates(*template_maps) -> TransductionRuleSet:
    merged = {}
    for tmap in template_maps:
        for pid, items in tmap.items():
            if pid in merged and merged[pid] != items:
                raise ValueError(
                    f"conflicting transduction templates for {pid}")
            merged[pid] = items
    return TransductionRuleSet(
        TransductionRule(pid, items) for pid, items in merged.items())


class Bank:
    """Everything the pipeline needs, built once from the bundled tables."""

    def __init__(self, zipf_exponent: float = 1.0):
        from .transduce import default_dictionary, default_morph
        from . import patterns as _patterns
        self.lexicon = build_lexicon()
        self.dictionary = default_dictionary()
        self.morph = default_morph()
        spec = in_distribution_spec()
        self.grammar = spec.grammar(self.lexicon, zipf_exponent=zipf_exponent)
        self.patterns = _patterns.build_patterns(self.lexicon)
        self.rules = merge_templates(
            spec.templates,
            *[p.templates for p in self.patterns])
        self.by_pattern = {p.id: p for p in self.patterns}
        self._boosted = {}
        self._zipf = zipf_exponent

    def grammar_for(self, grammar_id: str) -> Pcfg:
        if grammar_id == "in_dist":
            return self.grammar
        if grammar_id.startswith("boost:"):
            construct = grammar_id.split(":", 1)[1]
            if construct not in self._boosted:
                from .patterns import boosted_spec
                self._boosted[construct] = boosted_spec(construct).grammar(
                    self.lexicon, zipf_exponent=self._zipf)
            return self._boosted[construct]
        return self.by_pattern[grammar_id].gen_grammar


_default_bank = None


def default_bank() -> Bank:
    global _default_bank
    if _default_bank is None:
        _default_bank = Bank()
    return _default_bank
