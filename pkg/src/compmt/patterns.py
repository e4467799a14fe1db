"""The 42 generalization patterns.

Each pattern holds its target lexemes, a dedicated generalization grammar
(sharing production ids — and therefore transduction templates — with the
training grammar wherever the clause shape is identical), the constraint
variants cycled during generation (complement-clause embedding on/off,
exact recursion depths), and the primitive-exposure recipes that seed the
training set with the pattern's prerequisites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grammar import Constraints, Lit, NT, Pcfg
from .bank import (
    DET, L, GrammarSpec, adj, n, pn, prep, v,
    ACT2PASS, DO2PP, OBJ2SUBJ_C, OBJ2SUBJ_P, OBJOM2TRANS, PASS2ACT, PP2DO,
    PRIM_OBJ_C, PRIM_OBJ_P, PRIM_SUBJ_C, PRIM_SUBJ_P, PRIM_VERBS,
    SUBJ2OBJ_C, SUBJ2OBJ_P, TENSE_CP, TENSE_DIT, TENSE_INF,
    TRANS2CP, TRANS2DIT, TRANS2INF, UNACC2TRANS,
    FREE_ANIM, FREE_PROP, INANIM_POOL, LOC_NOUNS,
    V_CP_PAST, V_CP_PRES, V_DO_PAST, V_DO_PRES, V_INFBASE, V_INF_PAST,
    V_INTRANS, V_OBJOM, V_PASS, V_PASSDAT, V_PPDAT_PAST, V_PPDAT_PRES,
    V_TRANS, V_TRANS_SAFE, V_UNACC,
    in_distribution_spec,
)
from .lexdata import CASE_FRAMES

F = Fraction

# Verbs safe for clauses that must never trigger a selectional repair.
V_UNACC_SAFE = tuple(x for x in V_UNACC if x != "bloom")
FREE_MIXED = FREE_ANIM + INANIM_POOL

# Clause templates, shared verbatim with the training grammar.
T_TRANS = "$0 ga $2 o @morph(1)"
T_INTRANS = "$0 ga @morph(1)"
T_PASS = "$0 ga @morph(2)"
T_PASS_BY = "$0 ga $4 niyotte @morph(2)"
T_PASSDAT = "$0 ga $4 ni @morph(2)"
T_DO = "$0 ga $2 ni $3 o @morph(1)"
T_PPDAT = "$0 ga $2 o $4 ni @morph(1)"
T_CP = "$0 ga $2 @morph(1)"
T_INF = "$0 ga @morph(3,pres) koto o @morph(1)"
T_MOD = "$2 $1"   # det noun modifier -> modifier-first in the target
T_ADJ = "$1 $2"


@dataclass
class PatternSpec:
    id: str
    category: str
    group: str
    target_lexemes: tuple
    gen_count: int
    partial_evaluable: bool
    cp_embedding: bool
    target_kind: str  # "np" | "verb" | "wh" | "none"
    gen_spec: GrammarSpec
    gen_grammar: Pcfg
    variants: tuple  # of (required ids, forbidden ids, depth pairs)
    exposures: tuple  # of exposure recipes, cycled to 100 records
    wh_word: str = ""
    expected_role: str = ""
    embed_marker: str = ""

    @property
    def templates(self):
        return self.gen_spec.templates

    def constraints_for(self, index: int) -> Constraints:
        required, forbidden, depths = self.variants[index % len(self.variants)]
        return Constraints(frozenset(required), frozenset(forbidden), depths)


# --------------------------------------------------------------------------
# Grammar-building helpers
# --------------------------------------------------------------------------


def _pair(g, stem, common, proper, wc=F(7, 10), nt=None, annot=False):
    nt = nt or "NP_" + stem.upper()
    g.add(f"np_{stem}_c", nt, [DET, n(f"n:{stem}:c", common)],
          wc, "$1", annot=annot)
    g.add(f"np_{stem}_p", nt, [pn(f"n:{stem}:p", proper)],
          F(1) - wc, "$0", annot=annot)


def _npc(g, pid, nt, tag, pool, w=F(1), annot=False):
    g.add(pid, nt, [DET, n(tag, pool)], w, "$1", annot=annot)


def _npp(g, pid, nt, tag, pool, w=F(1), annot=False):
    g.add(pid, nt, [pn(tag, pool)], w, "$0", annot=annot)


def _base(g, question=False):
    if question:
        g.add("root_q", "ROOT", [NT("SQ")], F(1), "$0")
    else:
        g.add("root_decl", "ROOT", [NT("S"), L(".")], F(1), "$0")
    g.add("det_the", "DET", [L("the")], F(1, 2), "")
    g.add("det_a", "DET", [L("a")], F(1, 2), "")


def _clauses(g, lhs, clauses, mass=F(1)):
    """Add weighted clause productions; relative weights scaled to `mass`."""
    total = sum(rel for *_rest, rel in clauses)
    for pid, rhs, template, rel in clauses:
        g.add(pid, lhs, rhs, mass * F(rel, total), template)


def _embed(g, weight=F(1, 2), cp_nt="CP", marker="cp_clause",
           semb_nt="SEMB"):
    """Outer complement-clause scaffold: free subject + free CP verb."""
    g.add("s_cp_past", "S",
          [NT("NP_OSUBJ"), v("v:cp:past", "past", V_CP_PRES), NT(cp_nt)],
          weight, T_CP)
    g.add(marker, cp_nt, [L("that"), NT(semb_nt)], F(1), "$1 to",
          construct="CP")
    _pair(g, "osubj", FREE_ANIM, FREE_PROP)


def _compile(g, lexicon, zipf=1.0):
    grammar = g.grammar(lexicon, zipf_exponent=zipf)
    problems = grammar.validate()
    if problems:
        raise ValueError("; ".join(str(p) for p in problems))
    return grammar


_EMB_VARIANTS = ((("cp_clause",), (), ()), ((), ("cp_clause",), ()))
_PLAIN_VARIANT = (((), (), ()),)


def _sample_exposures(plans, targets=None):
    """Exposure recipes over the training grammar: one per target x plan."""
    out = []
    for t in (targets or (None,)):
        for plan in plans:
            if isinstance(plan, tuple):
                pid, tag = plan
                out.append(("sample", "in_dist", frozenset([pid]),
                            {tag: (t,)} if t else {}, ()))
            else:
                out.append(("sample", "in_dist", frozenset([plan]), {}, ()))
    return tuple(out)


def _bare_exposures(pos, targets):
    return tuple(("bare", pos, t) for t in targets)


def _depth_exposures(construct):
    return (
        ("sample", "in_dist", frozenset(), {}, ((construct, 1),)),
        ("sample", "in_dist", frozenset(), {}, ((construct, 2),)),
        ("sample", "boost:" + construct, frozenset(), {}, ((construct, 4),)),
    )


# --------------------------------------------------------------------------
# Primitive substitution
# --------------------------------------------------------------------------


def _gen_subject(targets, proper, include_do=True, include_objom=False):
    """Targets in the (animate) subject position of simple clauses."""
    g = GrammarSpec()
    _base(g)
    plain = [
        ("s_trans_past",
         [NT("NP_TSUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
          NT("NP_DOBJ")], T_TRANS, 5),
        ("s_intrans_past",
         [NT("NP_TSUBJ"), v("v:intrans:past", "past", V_INTRANS)],
         T_INTRANS, 2),
    ]
    emb = [
        ("semb_trans",
         [NT("NP_TESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
          NT("NP_EDOBJ")], T_TRANS, 5),
        ("semb_intrans",
         [NT("NP_TESUBJ"), v("v:eintrans:past", "past", V_INTRANS)],
         T_INTRANS, 2),
    ]
    if include_do:
        plain.append(("s_do_past",
                      [NT("NP_TSUBJ"), v("v:do:past", "past", V_DO_PAST),
                       NT("NP_IOBJ"), NT("NP_DOBJ")], T_DO, 2))
        emb.append(("semb_do",
                    [NT("NP_TESUBJ"), v("v:edo:past", "past", V_DO_PAST),
                     NT("NP_EIOBJ"), NT("NP_EDOBJ")], T_DO, 2))
    if include_objom:
        plain.append(("s_objom_past",
                      [NT("NP_TSUBJ"), v("v:objom:past", "past", V_OBJOM)],
                      T_INTRANS, 1))
        emb.append(("semb_objom",
                    [NT("NP_TESUBJ"), v("v:eobjom:past", "past", V_OBJOM)],
                    T_INTRANS, 1))
    _clauses(g, "S", plain, F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", emb)
    if proper:
        _npp(g, "np_subj_p", "NP_TSUBJ", "n:subj:p", targets, annot=True)
        _npp(g, "np_esubj_p", "NP_TESUBJ", "n:esubj:p", targets, annot=True)
    else:
        _npc(g, "np_subj_c", "NP_TSUBJ", "n:subj:c", targets, annot=True)
        _npc(g, "np_esubj_c", "NP_TESUBJ", "n:esubj:c", targets, annot=True)
    _pair(g, "dobj", FREE_MIXED, FREE_PROP)
    _pair(g, "edobj", FREE_MIXED, FREE_PROP)
    if include_do:
        _pair(g, "iobj", FREE_ANIM, FREE_PROP)
        _pair(g, "eiobj", FREE_ANIM, FREE_PROP)
    return g


def _gen_dobj_common(targets):
    """Targets as the direct object of transitive/ditransitive clauses."""
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_trans_past",
         [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
          NT("NP_TOBJ")], T_TRANS, 5),
        ("s_do_past",
         [NT("NP_SUBJ"), v("v:do:past", "past", V_DO_PAST),
          NT("NP_IOBJ"), NT("NP_TOBJ")], T_DO, 3),
        ("s_ppdat_past",
         [NT("NP_SUBJ"), v("v:ppdat:past", "past", V_PPDAT_PAST),
          NT("NP_TOBJ"), L("to"), NT("NP_IOBJ")], T_PPDAT, 2),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_trans",
         [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
          NT("NP_TEOBJ")], T_TRANS, 5),
        ("semb_do",
         [NT("NP_ESUBJ"), v("v:edo:past", "past", V_DO_PAST),
          NT("NP_EIOBJ"), NT("NP_TEOBJ")], T_DO, 3),
        ("semb_ppdat",
         [NT("NP_ESUBJ"), v("v:eppdat:past", "past", V_PPDAT_PAST),
          NT("NP_TEOBJ"), L("to"), NT("NP_EIOBJ")], T_PPDAT, 2),
    ])
    _npc(g, "np_dobj_c", "NP_TOBJ", "n:dobj:c", targets, annot=True)
    _npc(g, "np_edobj_c", "NP_TEOBJ", "n:edobj:c", targets, annot=True)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    _pair(g, "iobj", FREE_ANIM, FREE_PROP)
    _pair(g, "eiobj", FREE_ANIM, FREE_PROP)
    return g


def _gen_obj_proper(targets):
    """Proper-noun targets as direct object (trans) or recipient (DO)."""
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_trans_past",
         [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
          NT("NP_TOBJ")], T_TRANS, 3),
        ("s_do_past",
         [NT("NP_SUBJ"), v("v:do:past", "past", V_DO_PAST),
          NT("NP_TIOBJ"), NT("NP_DOBJ")], T_DO, 2),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_trans",
         [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
          NT("NP_TEOBJ")], T_TRANS, 3),
        ("semb_do",
         [NT("NP_ESUBJ"), v("v:edo:past", "past", V_DO_PAST),
          NT("NP_TEIOBJ"), NT("NP_EDOBJ")], T_DO, 2),
    ])
    _npp(g, "np_dobj_p", "NP_TOBJ", "n:dobj:p", targets, annot=True)
    _npp(g, "np_edobj_p", "NP_TEOBJ", "n:edobj:p", targets, annot=True)
    _npp(g, "np_iobj_p", "NP_TIOBJ", "n:iobj:p", targets, annot=True)
    _npp(g, "np_eiobj_p", "NP_TEIOBJ", "n:eiobj:p", targets, annot=True)
    _npc(g, "np_dobj_c", "NP_DOBJ", "n:dobj:c", FREE_MIXED)
    _npc(g, "np_edobj_c", "NP_EDOBJ", "n:edobj:c", FREE_MIXED)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _gen_prim_obj_proper(targets):
    """Proper-noun targets as recipients and objects, incl. passive dative."""
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_passdat",
         [NT("NP_PSUBJ"), L("was"), v("v:passdat", "part", V_PASSDAT),
          L("to"), NT("NP_TIOBJ")], T_PASSDAT, 2),
        ("s_trans_past",
         [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
          NT("NP_TOBJ")], T_TRANS, 2),
        ("s_ppdat_past",
         [NT("NP_SUBJ"), v("v:ppdat:past", "past", V_PPDAT_PAST),
          NT("NP_DOBJ"), L("to"), NT("NP_TIOBJ")], T_PPDAT, 1),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_passdat",
         [NT("NP_EPSUBJ"), L("was"), v("v:epassdat", "part", V_PASSDAT),
          L("to"), NT("NP_TEIOBJ")], T_PASSDAT, 2),
        ("semb_trans",
         [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
          NT("NP_TEOBJ")], T_TRANS, 2),
        ("semb_ppdat",
         [NT("NP_ESUBJ"), v("v:eppdat:past", "past", V_PPDAT_PAST),
          NT("NP_EDOBJ"), L("to"), NT("NP_TEIOBJ")], T_PPDAT, 1),
    ])
    _npp(g, "np_iobj_p", "NP_TIOBJ", "n:iobj:p", targets, annot=True)
    _npp(g, "np_eiobj_p", "NP_TEIOBJ", "n:eiobj:p", targets, annot=True)
    _npp(g, "np_dobj_p", "NP_TOBJ", "n:dobj:p", targets, annot=True)
    _npp(g, "np_edobj_p", "NP_TEOBJ", "n:edobj:p", targets, annot=True)
    _npc(g, "np_psubj_c", "NP_PSUBJ", "n:psubj:c", INANIM_POOL)
    _npc(g, "np_epsubj_c", "NP_EPSUBJ", "n:epsubj:c", INANIM_POOL)
    _npc(g, "np_dobj_c", "NP_DOBJ", "n:dobj:c", INANIM_POOL)
    _npc(g, "np_edobj_c", "NP_EDOBJ", "n:edobj:c", INANIM_POOL)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _gen_prim_inf():
    """Primitive verbs as the infinitival complement."""
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_inf_past",
         [NT("NP_SUBJ"), v("v:inf:past", "past", V_INF_PAST), L("to"),
          v("v:infbase", "inf", PRIM_VERBS)], T_INF, 1),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_inf",
         [NT("NP_ESUBJ"), v("v:einf:past", "past", V_INF_PAST), L("to"),
          v("v:einfbase", "inf", PRIM_VERBS)], T_INF, 1),
    ])
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


# --------------------------------------------------------------------------
# Tense alternation
# --------------------------------------------------------------------------


def _gen_pres_dit(targets):
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_do_pres",
         [NT("NP_SUBJ"), v("v:do:pres", "pres", targets),
          NT("NP_IOBJ"), NT("NP_DOBJ")], T_DO, 1),
        ("s_ppdat_pres",
         [NT("NP_SUBJ"), v("v:ppdat:pres", "pres", targets),
          NT("NP_DOBJ"), L("to"), NT("NP_IOBJ")], T_PPDAT, 1),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_do",
         [NT("NP_ESUBJ"), v("v:edo:pres", "pres", targets),
          NT("NP_EIOBJ"), NT("NP_EDOBJ")], T_DO, 1),
        ("semb_ppdat",
         [NT("NP_ESUBJ"), v("v:eppdat:pres", "pres", targets),
          NT("NP_EDOBJ"), L("to"), NT("NP_EIOBJ")], T_PPDAT, 1),
    ])
    for stem in ("subj", "esubj", "iobj", "eiobj"):
        _pair(g, stem, FREE_ANIM, FREE_PROP)
    for stem in ("dobj", "edobj"):
        _pair(g, stem, FREE_MIXED, FREE_PROP)
    return g


def _gen_pres_inf(targets):
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_inf_pres",
         [NT("NP_SUBJ"), v("v:inf:pres", "pres", targets), L("to"),
          v("v:infbase", "inf", V_INFBASE)], T_INF, 1),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_inf",
         [NT("NP_ESUBJ"), v("v:einf:pres", "pres", targets), L("to"),
          v("v:einfbase", "inf", V_INFBASE)], T_INF, 1),
    ])
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _gen_pres_cp(targets):
    """Present-tense complement-taking targets; the embedded half wraps the
    target clause inside a further (past) complement clause."""
    g = GrammarSpec()
    _base(g)
    g.add("s_cp_pres", "S",
          [NT("NP_SUBJ"), v("v:cp:pres", "pres", targets), NT("CP")],
          F(1, 2), T_CP)
    _embed(g, cp_nt="CP_T", marker="cp_clause_t", semb_nt="SEMB_T")
    g.add("semb_cp", "SEMB_T",
          [NT("NP_ESUBJ"), v("v:ecp:pres", "pres", targets), NT("CP")],
          F(1), T_CP)
    g.add("cp_clause", "CP", [L("that"), NT("SEMB")], F(1), "$1 to",
          construct="CP")
    _clauses(g, "SEMB", [
        ("semb_trans",
         [NT("NP_FSUBJ"), v("v:ftrans:past", "past", V_TRANS_SAFE),
          NT("NP_FDOBJ")], T_TRANS, 3),
        ("semb_intrans",
         [NT("NP_FSUBJ"), v("v:fintrans:past", "past", V_INTRANS)],
         T_INTRANS, 2),
        ("semb_pass",
         [NT("NP_FPSUBJ"), L("was"), v("v:fpass", "part", V_PASS)],
         T_PASS, 2),
        ("semb_pass_by",
         [NT("NP_FPSUBJ"), L("was"), v("v:fpass", "part", V_PASS),
          L("by"), NT("NP_FAGENT")], T_PASS_BY, 2),
        ("semb_unacc",
         [NT("NP_FISUBJ"), v("v:funacc:past", "past", V_UNACC_SAFE)],
         T_INTRANS, 1),
    ])
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    _pair(g, "fsubj", FREE_ANIM, FREE_PROP)
    _pair(g, "fdobj", FREE_MIXED, FREE_PROP)
    _pair(g, "fpsubj", FREE_MIXED, FREE_PROP)
    _pair(g, "fagent", FREE_ANIM, FREE_PROP)
    _npc(g, "np_fisubj", "NP_FISUBJ", "n:fisubj", INANIM_POOL)
    return g


# --------------------------------------------------------------------------
# Primitive structural alternation
# --------------------------------------------------------------------------


def _gen_passive(targets):
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_pass",
         [NT("NP_PSUBJ"), L("was"), v("v:pass", "part", targets)],
         T_PASS, 2),
        ("s_pass_by",
         [NT("NP_PSUBJ"), L("was"), v("v:pass", "part", targets),
          L("by"), NT("NP_AGENT")], T_PASS_BY, 3),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_pass",
         [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", targets)],
         T_PASS, 2),
        ("semb_pass_by",
         [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", targets),
          L("by"), NT("NP_EAGENT")], T_PASS_BY, 3),
    ])
    _pair(g, "psubj", FREE_MIXED, FREE_PROP)
    _pair(g, "epsubj", FREE_MIXED, FREE_PROP)
    _pair(g, "agent", FREE_ANIM, FREE_PROP)
    _pair(g, "eagent", FREE_ANIM, FREE_PROP)
    return g


def _gen_active_trans(targets, dobj_common, dobj_proper=None):
    """Targets used transitively (gen side of passive-only / object-omitted /
    unaccusative training verbs)."""
    g = GrammarSpec()
    _base(g)
    safe = tuple(t for t in targets
                 if t not in {verb for verb, _role, _ns in CASE_FRAMES})
    framed = tuple(t for t in targets if t not in safe)
    plain = [("s_trans_past",
              [NT("NP_SUBJ"), v("v:trans:past", "past", safe),
               NT("NP_DOBJ")], T_TRANS, len(safe))]
    emb = [("semb_trans",
            [NT("NP_ESUBJ"), v("v:etrans:past", "past", safe),
             NT("NP_EDOBJ")], T_TRANS, len(safe))]
    if framed:
        licensed = {}
        for verb, role, nouns in CASE_FRAMES:
            if verb in framed and role == "direct_object":
                licensed[verb] = tuple(nouns)
        pool = tuple(sorted({x for ns in licensed.values() for x in ns}))
        plain.append(("s_trans_past_cf",
                      [NT("NP_SUBJ"), v("v:trans:past", "past", framed),
                       NT("NP_CFOBJ")], T_TRANS, len(framed)))
        emb.append(("semb_trans_cf",
                    [NT("NP_ESUBJ"), v("v:etrans:past", "past", framed),
                     NT("NP_ECFOBJ")], T_TRANS, len(framed)))
        _npc(g, "np_dobj_cf", "NP_CFOBJ", "n:dobj:cf", pool)
        _npc(g, "np_edobj_cf", "NP_ECFOBJ", "n:edobj:cf", pool)
    _clauses(g, "S", plain, F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", emb)
    if dobj_proper:
        _pair(g, "dobj", dobj_common, dobj_proper)
        _pair(g, "edobj", dobj_common, dobj_proper)
    else:
        _npc(g, "np_dobj_c", "NP_DOBJ", "n:dobj:c", dobj_common)
        _npc(g, "np_edobj_c", "NP_EDOBJ", "n:edobj:c", dobj_common)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _gen_dat(targets, double_object):
    """Targets in the unseen dative frame (DO -> PP or PP -> DO), past."""
    g = GrammarSpec()
    _base(g)
    if double_object:
        plain = [("s_do_past",
                  [NT("NP_SUBJ"), v("v:do:past", "past", targets),
                   NT("NP_IOBJ"), NT("NP_DOBJ")], T_DO, 1)]
        emb = [("semb_do",
                [NT("NP_ESUBJ"), v("v:edo:past", "past", targets),
                 NT("NP_EIOBJ"), NT("NP_EDOBJ")], T_DO, 1)]
    else:
        plain = [("s_ppdat_past",
                  [NT("NP_SUBJ"), v("v:ppdat:past", "past", targets),
                   NT("NP_DOBJ"), L("to"), NT("NP_IOBJ")], T_PPDAT, 1)]
        emb = [("semb_ppdat",
                [NT("NP_ESUBJ"), v("v:eppdat:past", "past", targets),
                 NT("NP_EDOBJ"), L("to"), NT("NP_EIOBJ")], T_PPDAT, 1)]
    _clauses(g, "S", plain, F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", emb)
    for stem in ("subj", "esubj", "iobj", "eiobj"):
        _pair(g, stem, FREE_ANIM, FREE_PROP)
    for stem in ("dobj", "edobj"):
        _pair(g, stem, FREE_MIXED, FREE_PROP)
    return g


# --------------------------------------------------------------------------
# Phrase recombination
# --------------------------------------------------------------------------


def _add_pp(g, depth_one=True):
    g.add("pp_mod", "PP", [prep(), NT("NP_PPN")], F(1), "$1 no $0 no",
          construct="PP")
    if depth_one:
        _npc(g, "np_ppn", "NP_PPN", "n:ppn", LOC_NOUNS)


def _add_rc(g, nesting=F(0)):
    g.add("rc_objgap", "RC_OBJ",
          [L("that"), NT("NP_CESUBJ"), v("v:rc:past", "past", V_TRANS_SAFE)],
          F(1), "$1 ga @morph(2)", construct="CenterEmbedRC")
    rest = F(1) - nesting
    _npc(g, "np_cesubj_c", "NP_CESUBJ", "n:cesubj:c", FREE_ANIM,
         rest * F(65, 100))
    _npp(g, "np_cesubj_p", "NP_CESUBJ", "n:cesubj:p", FREE_PROP,
         rest * F(35, 100))
    if nesting:
        g.add("np_cesubj_rc", "NP_CESUBJ",
              [DET, n("n:cesubj:c", FREE_ANIM), NT("RC_OBJ")],
              nesting, T_MOD)


def _add_rc_subjgap(g):
    g.add("rc_subjgap_t", "RC_SUBJ",
          [L("that"), v("v:rcs:past", "past", V_TRANS_SAFE), NT("NP_RCOBJ")],
          F(7, 10), "$2 o @morph(1)")
    g.add("rc_subjgap_do", "RC_SUBJ",
          [L("that"), v("v:rcsdo:past", "past", V_DO_PAST),
           NT("NP_RCIOBJ"), NT("NP_RCOBJ")],
          F(3, 10), "$2 ni $3 o @morph(1)")
    _pair(g, "rcobj", FREE_MIXED, FREE_PROP)
    _pair(g, "rciobj", FREE_ANIM, FREE_PROP)


def _gen_mod_subj(kind):
    """A PP / RC / adjective modifier on the subject."""
    g = GrammarSpec()
    _base(g)
    pp = kind == "pp"
    plain = [("s_trans_past",
              [NT("NP_MSUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
               NT("NP_DOBJ")], T_TRANS, 3)]
    emb = [("semb_trans",
            [NT("NP_MESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
             NT("NP_EDOBJ")], T_TRANS, 3)]
    if pp:
        plain.append(("s_unacc_past",
                      [NT("NP_MISUBJ"), v("v:unacc:past", "past",
                                          V_UNACC_SAFE)], T_INTRANS, 2))
        emb.append(("semb_unacc",
                    [NT("NP_MEISUBJ"), v("v:eunacc:past", "past",
                                         V_UNACC_SAFE)], T_INTRANS, 2))
    else:
        plain.append(("s_intrans_past",
                      [NT("NP_MSUBJ"), v("v:intrans:past", "past",
                                         V_INTRANS)], T_INTRANS, 2))
        emb.append(("semb_intrans",
                    [NT("NP_MESUBJ"), v("v:eintrans:past", "past",
                                        V_INTRANS)], T_INTRANS, 2))
    _clauses(g, "S", plain, F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", emb)
    if pp:
        _add_pp(g)
        g.add("np_subj_pp", "NP_MSUBJ",
              [DET, n("n:subj:c", FREE_ANIM), NT("PP")], F(1), T_MOD,
              annot=True)
        g.add("np_esubj_pp", "NP_MESUBJ",
              [DET, n("n:esubj:c", FREE_ANIM), NT("PP")], F(1), T_MOD,
              annot=True)
        g.add("np_isubj_pp", "NP_MISUBJ",
              [DET, n("n:isubj", INANIM_POOL), NT("PP")], F(1), T_MOD,
              annot=True)
        g.add("np_eisubj_pp", "NP_MEISUBJ",
              [DET, n("n:eisubj", INANIM_POOL), NT("PP")], F(1), T_MOD,
              annot=True)
    elif kind == "rc":
        _add_rc(g)
        _add_rc_subjgap(g)
        g.add("np_subj_rco", "NP_MSUBJ",
              [DET, n("n:subj:c", FREE_ANIM), NT("RC_OBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_subj_rcs", "NP_MSUBJ",
              [DET, n("n:subj:c", FREE_ANIM), NT("RC_SUBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_esubj_rco", "NP_MESUBJ",
              [DET, n("n:esubj:c", FREE_ANIM), NT("RC_OBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_esubj_rcs", "NP_MESUBJ",
              [DET, n("n:esubj:c", FREE_ANIM), NT("RC_SUBJ")], F(1, 2),
              T_MOD, annot=True)
    else:
        g.add("adj_one", "ADJSEQ", [adj()], F(1), "$0", construct="Adj")
        g.add("np_subj_adj", "NP_MSUBJ",
              [DET, NT("ADJSEQ"), n("n:subj:c", FREE_ANIM)], F(1), T_ADJ,
              annot=True)
        g.add("np_esubj_adj", "NP_MESUBJ",
              [DET, NT("ADJSEQ"), n("n:esubj:c", FREE_ANIM)], F(1), T_ADJ,
              annot=True)
    _pair(g, "dobj", FREE_MIXED, FREE_PROP)
    _pair(g, "edobj", FREE_MIXED, FREE_PROP)
    return g


def _gen_mod_iobj(kind):
    """A PP / RC / adjective modifier on the indirect object."""
    g = GrammarSpec()
    _base(g)
    _clauses(g, "S", [
        ("s_ppdat_past",
         [NT("NP_SUBJ"), v("v:ppdat:past", "past", V_PPDAT_PAST),
          NT("NP_DOBJ"), L("to"), NT("NP_MIOBJ")], T_PPDAT, 3),
        ("s_do_past",
         [NT("NP_SUBJ"), v("v:do:past", "past", V_DO_PAST),
          NT("NP_MIOBJ"), NT("NP_DOBJ")], T_DO, 2),
    ], F(1, 2))
    _embed(g)
    _clauses(g, "SEMB", [
        ("semb_ppdat",
         [NT("NP_ESUBJ"), v("v:eppdat:past", "past", V_PPDAT_PAST),
          NT("NP_EDOBJ"), L("to"), NT("NP_MEIOBJ")], T_PPDAT, 3),
        ("semb_do",
         [NT("NP_ESUBJ"), v("v:edo:past", "past", V_DO_PAST),
          NT("NP_MEIOBJ"), NT("NP_EDOBJ")], T_DO, 2),
    ])
    if kind == "pp":
        _add_pp(g)
        g.add("np_iobj_pp", "NP_MIOBJ",
              [DET, n("n:iobj:c", FREE_ANIM), NT("PP")], F(1), T_MOD,
              annot=True)
        g.add("np_eiobj_pp", "NP_MEIOBJ",
              [DET, n("n:eiobj:c", FREE_ANIM), NT("PP")], F(1), T_MOD,
              annot=True)
    elif kind == "rc":
        _add_rc(g)
        _add_rc_subjgap(g)
        g.add("np_iobj_rco", "NP_MIOBJ",
              [DET, n("n:iobj:c", FREE_ANIM), NT("RC_OBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_iobj_rcs", "NP_MIOBJ",
              [DET, n("n:iobj:c", FREE_ANIM), NT("RC_SUBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_eiobj_rco", "NP_MEIOBJ",
              [DET, n("n:eiobj:c", FREE_ANIM), NT("RC_OBJ")], F(1, 2), T_MOD,
              annot=True)
        g.add("np_eiobj_rcs", "NP_MEIOBJ",
              [DET, n("n:eiobj:c", FREE_ANIM), NT("RC_SUBJ")], F(1, 2),
              T_MOD, annot=True)
    else:
        g.add("adj_one", "ADJSEQ", [adj()], F(1), "$0", construct="Adj")
        g.add("np_iobj_adj", "NP_MIOBJ",
              [DET, NT("ADJSEQ"), n("n:iobj:c", FREE_ANIM)], F(1), T_ADJ,
              annot=True)
        g.add("np_eiobj_adj", "NP_MEIOBJ",
              [DET, NT("ADJSEQ"), n("n:eiobj:c", FREE_ANIM)], F(1), T_ADJ,
              annot=True)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    _pair(g, "dobj", FREE_MIXED, FREE_PROP)
    _pair(g, "edobj", FREE_MIXED, FREE_PROP)
    return g


# --------------------------------------------------------------------------
# Recursion depth alternation
# --------------------------------------------------------------------------


def _gen_recursion(construct, cont):
    """Grammar producing unbounded nesting of one construct; the exact depth
    is enforced by per-record constraints, `cont` only tunes acceptance."""
    g = GrammarSpec()
    _base(g)
    rest = F(1) - cont
    if construct == "CP":
        g.add("s_cp_past", "S",
              [NT("NP_SUBJ"), v("v:cp:past", "past", V_CP_PAST), NT("CP")],
              F(1), T_CP)
        g.add("cp_clause", "CP", [L("that"), NT("SEMB")], F(1), "$1 to",
              construct="CP")
        _clauses(g, "SEMB", [
            ("semb_trans",
             [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
              NT("NP_EDOBJ")], T_TRANS, 4),
            ("semb_intrans",
             [NT("NP_ESUBJ"), v("v:eintrans:past", "past", V_INTRANS)],
             T_INTRANS, 2),
            ("semb_pass",
             [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", V_PASS)],
             T_PASS, 2),
            ("semb_pass_by",
             [NT("NP_EPSUBJ"), L("was"), v("v:epass", "part", V_PASS),
              L("by"), NT("NP_EAGENT")], T_PASS_BY, 2),
        ], rest)
        g.add("semb_cp", "SEMB",
              [NT("NP_ESUBJ"), v("v:ecp:past", "past", V_CP_PAST), NT("CP")],
              cont, T_CP)
        _pair(g, "subj", FREE_ANIM, FREE_PROP)
        _pair(g, "esubj", FREE_ANIM, FREE_PROP)
        _pair(g, "edobj", FREE_MIXED, FREE_PROP)
        _pair(g, "epsubj", FREE_MIXED, FREE_PROP)
        _pair(g, "eagent", FREE_ANIM, FREE_PROP)
        return g
    # The other three constructs nest inside a (possibly CP-embedded)
    # transitive clause's direct object.
    g.add("s_trans_past", "S",
          [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
           NT("NP_DOBJ")], F(1, 2), T_TRANS)
    _embed(g)
    g.add("semb_trans", "SEMB",
          [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
           NT("NP_EDOBJ")], F(1), T_TRANS)
    if construct == "PP":
        g.add("np_dobj_pp", "NP_DOBJ",
              [DET, n("n:dobj:c", INANIM_POOL), NT("PP")], F(1), T_MOD)
        g.add("np_edobj_pp", "NP_EDOBJ",
              [DET, n("n:edobj:c", INANIM_POOL), NT("PP")], F(1), T_MOD)
        _add_pp(g, depth_one=False)
        _npc(g, "np_ppn", "NP_PPN", "n:ppn", LOC_NOUNS, rest)
        g.add("np_ppn_pp", "NP_PPN",
              [DET, n("n:ppn", LOC_NOUNS), NT("PP")], cont, T_MOD)
    elif construct == "CenterEmbedRC":
        g.add("np_dobj_rco", "NP_DOBJ",
              [DET, n("n:dobj:c", FREE_MIXED), NT("RC_OBJ")], F(1), T_MOD)
        g.add("np_edobj_rco", "NP_EDOBJ",
              [DET, n("n:edobj:c", FREE_MIXED), NT("RC_OBJ")], F(1), T_MOD)
        _add_rc(g, nesting=cont)
    else:  # stacked adjectives
        g.add("np_dobj_adj", "NP_DOBJ",
              [DET, NT("ADJSEQ"), n("n:dobj:c", FREE_MIXED)], F(1), T_ADJ)
        g.add("np_edobj_adj", "NP_EDOBJ",
              [DET, NT("ADJSEQ"), n("n:edobj:c", FREE_MIXED)], F(1), T_ADJ)
        g.add("adj_one", "ADJSEQ", [adj()], rest, "$0", construct="Adj")
        g.add("adj_more", "ADJSEQ", [adj(), NT("ADJSEQ")], cont, "$0 $1",
              construct="Adj")
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _depth_variants(construct, depths, embedded):
    out = []
    for d in depths:
        if embedded:
            out.append((("cp_clause",), (), ((construct, d),)))
            out.append(((), ("cp_clause",), ((construct, d),)))
        else:
            out.append(((), (), ((construct, d),)))
    return tuple(out)


# --------------------------------------------------------------------------
# Gap position recombination and wh-question structural alternation
# --------------------------------------------------------------------------


def _gen_rc_iobj_gap():
    g = GrammarSpec()
    _base(g)
    g.add("s_trans_past", "S",
          [NT("NP_SUBJ"), v("v:trans:past", "past", V_TRANS_SAFE),
           NT("NP_GOBJ")], F(1, 2), T_TRANS)
    _embed(g)
    g.add("semb_trans", "SEMB",
          [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
           NT("NP_GEOBJ")], F(1), T_TRANS)
    g.add("np_dobj_rcio", "NP_GOBJ",
          [DET, n("n:dobj:c", FREE_MIXED), NT("RC_IOBJ")], F(1), T_MOD,
          annot=True)
    g.add("np_edobj_rcio", "NP_GEOBJ",
          [DET, n("n:edobj:c", FREE_MIXED), NT("RC_IOBJ")], F(1), T_MOD,
          annot=True)
    g.add("rc_iobjgap", "RC_IOBJ",
          [L("that"), NT("NP_RCSUBJ"),
           v("v:rcio:past", "past", V_PPDAT_PAST), NT("NP_RCOBJ"), L("to")],
          F(1), "$1 ga $3 o @morph(2)")
    _pair(g, "rcsubj", FREE_ANIM, FREE_PROP)
    _npc(g, "np_rcobj_c", "NP_RCOBJ", "n:rcobj:c", INANIM_POOL)
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


def _gen_wh_iobj_gap():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whoiobj", "SQ",
          [L("Who"), L("did"), NT("NP_SUBJ"),
           v("v:dit:inf", "inf", V_PPDAT_PAST), NT("NP_DOBJ"), L("to"),
           L("?")],
          F(1), "$2 ga dare ni $4 o @morph(3,past) @q ?")
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "dobj", FREE_MIXED, FREE_PROP)
    return g


def _gen_wh_active_subj():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whsubj_intrans", "SQ",
          [L("Who"), v("v:intrans:past", "past", V_INTRANS), L("?")],
          F(1, 10), "dare ga @morph(1) @q ?")
    g.add("q_whsubj_inf", "SQ",
          [L("Who"), v("v:inf:past", "past", V_INF_PAST), L("to"),
           v("v:infbase", "inf", V_INFBASE), L("?")],
          F(3, 10), "dare ga @morph(3,pres) koto o @morph(1) @q ?")
    g.add("q_whsubj_objom", "SQ",
          [L("Who"), v("v:objom:past", "past", V_OBJOM), L("?")],
          F(1, 10), "dare ga @morph(1) @q ?")
    g.add("q_whsubj_cp", "SQ",
          [L("Who"), v("v:cp:past", "past", V_CP_PAST), NT("CP"), L("?")],
          F(2, 10), "dare ga $2 @morph(1) @q ?")
    g.add("q_whsubj_do", "SQ",
          [L("Who"), v("v:do:past", "past", V_DO_PAST),
           NT("NP_IOBJ"), NT("NP_DOBJ"), L("?")],
          F(2, 10), "dare ga $2 ni $3 o @morph(1) @q ?")
    g.add("q_whsubj_ppdat", "SQ",
          [L("Who"), v("v:ppdat:past", "past", V_PPDAT_PAST),
           NT("NP_DOBJ"), L("to"), NT("NP_IOBJ"), L("?")],
          F(1, 10), "dare ga $2 o $4 ni @morph(1) @q ?")
    g.add("cp_clause", "CP", [L("that"), NT("SEMB")], F(1), "$1 to",
          construct="CP")
    _clauses(g, "SEMB", [
        ("semb_trans",
         [NT("NP_ESUBJ"), v("v:etrans:past", "past", V_TRANS_SAFE),
          NT("NP_EDOBJ")], T_TRANS, 3),
        ("semb_intrans",
         [NT("NP_ESUBJ"), v("v:eintrans:past", "past", V_INTRANS)],
         T_INTRANS, 2),
    ])
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    _pair(g, "edobj", FREE_MIXED, FREE_PROP)
    _pair(g, "iobj", FREE_ANIM, FREE_PROP)
    _pair(g, "dobj", FREE_MIXED, FREE_PROP)
    return g


def _gen_wh_passive_subj():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whatpass", "SQ",
          [L("What"), L("was"), v("v:pass", "part", V_PASS), L("?")],
          F(1, 10), "nani ga @morph(2) @q ?")
    g.add("q_whatpass_by", "SQ",
          [L("What"), L("was"), v("v:pass", "part", V_PASS), L("by"),
           NT("NP_AGENT"), L("?")],
          F(9, 10), "nani ga $4 niyotte @morph(2) @q ?")
    _pair(g, "agent", FREE_ANIM, FREE_PROP)
    return g


def _gen_wh_do_dit():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whatdit", "SQ",
          [L("What"), L("did"), NT("NP_SUBJ"),
           v("v:dit:inf", "inf", V_PPDAT_PAST), L("to"), NT("NP_IOBJ"),
           L("?")],
          F(1), "$2 ga nani o $5 ni @morph(3,past) @q ?")
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "iobj", FREE_ANIM, FREE_PROP)
    return g


def _gen_wh_subj_pp():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whatobj", "SQ",
          [L("What"), L("did"), NT("NP_WSUBJ"),
           v("v:wht:inf", "inf", V_TRANS), L("?")],
          F(1), "$2 ga nani o @morph(3,past) @q ?")
    g.add("np_whsubj_pp", "NP_WSUBJ",
          [DET, n("n:whsubj:c", FREE_ANIM), NT("PP")], F(1), T_MOD,
          annot=True)
    _add_pp(g)
    return g


def _gen_wh_long_move():
    g = GrammarSpec()
    _base(g, question=True)
    g.add("q_whlong", "SQ",
          [L("What"), L("did"), NT("NP_SUBJ"),
           v("v:cp:inf", "inf", V_CP_PAST), L("that"), NT("NP_ESUBJ"),
           v("v:etrans:inf", "inf", V_TRANS_SAFE), L("?")],
          F(1), "$2 ga $5 ga nani o @morph(6,past) to @morph(3,past) @q ?")
    _pair(g, "subj", FREE_ANIM, FREE_PROP)
    _pair(g, "esubj", FREE_ANIM, FREE_PROP)
    return g


# --------------------------------------------------------------------------
# Boosted training grammars for deep-recursion primitive exposures
# --------------------------------------------------------------------------

_BOOST_OVERRIDES = {
    "CP": {"s_cp_past": F(2, 5), "s_cp_pres": F(1, 10),
           "semb_cp": F(3, 5)},
    "PP": {"np_dobj_pp": F(1, 2), "np_ppn_pp": F(3, 5)},
    "CenterEmbedRC": {"np_dobj_rco": F(1, 2), "np_cesubj_rc": F(3, 5)},
    "Adj": {"np_dobj_adj": F(1, 2), "adj_more": F(3, 5)},
}


def boosted_spec(construct) -> GrammarSpec:
    """Training grammar with reweighted recursion so that depth-4 primitive
    exposures sample quickly; the language is unchanged."""
    overrides = _BOOST_OVERRIDES[construct]
    base = in_distribution_spec()
    by_lhs = {}
    for p in base.prods:
        by_lhs.setdefault(p.lhs, []).append(p)
    out = GrammarSpec()
    out.templates = dict(base.templates)
    for lhs, group in by_lhs.items():
        hit = [p for p in group if p.id in overrides]
        if not hit:
            out.prods.extend(group)
            continue
        fixed = sum(overrides[p.id] for p in hit)
        rest = [p for p in group if p.id not in overrides and p.weight > 0]
        rest_total = sum((p.weight for p in rest), F(0))
        scale = (F(1) - fixed) / rest_total
        for p in group:
            if p.id in overrides:
                w = overrides[p.id]
            elif p.weight > 0:
                w = p.weight * scale
            else:
                w = p.weight
            out.add(p.id, p.lhs, p.rhs, w, "", construct=p.construct,
                    annot=p.annot_target)
            out.templates[p.id] = base.templates[p.id]
    return out


# --------------------------------------------------------------------------
# The inventory
# --------------------------------------------------------------------------

PRIM_SUB = "PrimitiveSubstitution"
TENSE = "TenseAlternation"
PRIM_STRUCT = "PrimitiveStructuralAlternation"
PHRASE = "PhraseRecombination"
RECURSION = "RecursionDepthAlternation"
GAP = "GapPositionRecombination"
WH = "WhStructuralAlternation"

LEX = "Lexical"
LEXMOR = "LexicalMorphological"
STRUCT = "Structural"

CATEGORY_COUNTS = {PRIM_SUB: 9, TENSE: 6, PRIM_STRUCT: 6, PHRASE: 6,
                   RECURSION: 8, GAP: 2, WH: 5}
GROUP_COUNTS = {LEX: 11, LEXMOR: 10, STRUCT: 21}


def build_patterns(lexicon) -> list:
    specs = []

    def add(pid, category, group, targets, spec, kind, count=2000,
            partial=True, emb=True, variants=None, exposures=(),
            wh_word="", role="", marker="", zipf=1.0):
        if variants is None:
            variants = _EMB_VARIANTS if emb else _PLAIN_VARIANT
        if emb and not marker:
            marker = "cp_clause"
        specs.append(PatternSpec(
            pid, category, group, tuple(targets), count, partial, emb, kind,
            spec, _compile(spec, lexicon, zipf), tuple(variants),
            tuple(exposures), wh_word, role, marker))

    # -- primitive substitution -------------------------------------------
    add("subj_to_obj_common", PRIM_SUB, LEX, SUBJ2OBJ_C,
        _gen_dobj_common(SUBJ2OBJ_C), "np",
        exposures=_sample_exposures([("np_subj_c", "n:subj:c")], SUBJ2OBJ_C))
    add("subj_to_obj_proper", PRIM_SUB, LEX, SUBJ2OBJ_P,
        _gen_obj_proper(SUBJ2OBJ_P), "np",
        exposures=_sample_exposures([("np_subj_p", "n:subj:p")], SUBJ2OBJ_P))
    add("obj_to_subj_common", PRIM_SUB, LEX, OBJ2SUBJ_C,
        _gen_subject(OBJ2SUBJ_C, proper=False), "np",
        exposures=_sample_exposures([("np_dobj_c", "n:dobj:c")], OBJ2SUBJ_C))
    add("obj_to_subj_proper", PRIM_SUB, LEX, OBJ2SUBJ_P,
        _gen_subject(OBJ2SUBJ_P, proper=True), "np",
        exposures=_sample_exposures([("np_dobj_p", "n:dobj:p")], OBJ2SUBJ_P))
    add("prim_to_subj_common", PRIM_SUB, LEX, PRIM_SUB_C := PRIM_SUBJ_C,
        _gen_subject(PRIM_SUB_C, proper=False, include_do=False), "np",
        exposures=_bare_exposures("CommonNoun", PRIM_SUB_C))
    add("prim_to_subj_proper", PRIM_SUB, LEX, PRIM_SUBJ_P,
        _gen_subject(PRIM_SUBJ_P, proper=True, include_do=False,
                     include_objom=True), "np",
        exposures=_bare_exposures("ProperNoun", PRIM_SUBJ_P))
    add("prim_to_obj_common", PRIM_SUB, LEX, PRIM_OBJ_C,
        _gen_dobj_common(PRIM_OBJ_C), "np",
        exposures=_bare_exposures("CommonNoun", PRIM_OBJ_C))
    add("prim_to_obj_proper", PRIM_SUB, LEX, PRIM_OBJ_P,
        _gen_prim_obj_proper(PRIM_OBJ_P), "np",
        exposures=_bare_exposures("ProperNoun", PRIM_OBJ_P))
    add("prim_to_inf_verb", PRIM_SUB, LEX, PRIM_VERBS,
        _gen_prim_inf(), "verb",
        exposures=_bare_exposures("Verb", PRIM_VERBS))

    # -- tense alternation -------------------------------------------------
    add("tense_dit", TENSE, LEXMOR, TENSE_DIT,
        _gen_pres_dit(TENSE_DIT), "verb",
        exposures=_sample_exposures(
            [("s_do_past", "v:do:past"), ("s_ppdat_past", "v:ppdat:past")],
            TENSE_DIT))
    add("tense_inf", TENSE, LEXMOR, TENSE_INF,
        _gen_pres_inf(TENSE_INF), "verb",
        exposures=_sample_exposures([("s_inf_past", "v:inf:past")],
                                    TENSE_INF))
    add("tense_cp", TENSE, LEXMOR, TENSE_CP,
        _gen_pres_cp(TENSE_CP), "verb", marker="cp_clause_t",
        variants=((("cp_clause_t",), (), ()),
                  ((), ("cp_clause_t",), ())),
        exposures=_sample_exposures([("s_cp_past", "v:cp:past")], TENSE_CP))
    add("trans_to_dit", TENSE, LEXMOR, TRANS2DIT,
        _gen_pres_dit(TRANS2DIT), "verb",
        exposures=_sample_exposures(
            [("s_do_past", "v:do:past"), ("s_ppdat_past", "v:ppdat:past"),
             ("s_trans_past", "v:trans:past"),
             ("s_trans_pres", "v:trans:pres")], TRANS2DIT))
    add("trans_to_inf", TENSE, LEXMOR, TRANS2INF,
        _gen_pres_inf(TRANS2INF), "verb",
        exposures=_sample_exposures(
            [("s_inf_past", "v:inf:past"), ("s_trans_past", "v:trans:past"),
             ("s_trans_pres", "v:trans:pres")], TRANS2INF))
    add("trans_to_cp", TENSE, LEXMOR, TRANS2CP,
        _gen_pres_cp(TRANS2CP), "verb", marker="cp_clause_t",
        variants=((("cp_clause_t",), (), ()),
                  ((), ("cp_clause_t",), ())),
        exposures=_sample_exposures(
            [("s_cp_past", "v:cp:past"), ("s_trans_past", "v:trans:past"),
             ("s_trans_pres", "v:trans:pres")], TRANS2CP))

    # -- primitive structural alternation ---------------------------------
    add("active_to_passive", PRIM_STRUCT, LEXMOR, ACT2PASS,
        _gen_passive(ACT2PASS), "verb",
        exposures=_sample_exposures(
            [("s_trans_past", "v:trans:past"),
             ("s_trans_pres", "v:trans:pres")], ACT2PASS))
    add("passive_to_active", PRIM_STRUCT, LEXMOR, PASS2ACT,
        _gen_active_trans(PASS2ACT, FREE_MIXED, FREE_PROP), "verb",
        exposures=_sample_exposures(
            [("s_pass", "v:pass"), ("s_pass_by", "v:pass")], PASS2ACT))
    add("objom_to_trans", PRIM_STRUCT, LEXMOR, OBJOM2TRANS,
        _gen_active_trans(OBJOM2TRANS, INANIM_POOL), "verb",
        exposures=_sample_exposures(
            [("s_objom_past", "v:objom:past"),
             ("s_objom_pres", "v:objom:pres")], OBJOM2TRANS))
    add("unacc_to_trans", PRIM_STRUCT, LEXMOR, UNACC2TRANS,
        _gen_active_trans(UNACC2TRANS, INANIM_POOL), "verb",
        exposures=_sample_exposures(
            [("s_unacc_past", "v:unacc:past"),
             ("s_unacc_pres", "v:unacc:pres")], UNACC2TRANS))
    add("do_to_pp", PRIM_STRUCT, LEX, DO2PP,
        _gen_dat(DO2PP, double_object=False), "verb",
        exposures=_sample_exposures(
            [("s_do_past", "v:do:past"), ("s_do_pres", "v:do:pres")],
            DO2PP))
    add("pp_to_do", PRIM_STRUCT, LEX, PP2DO,
        _gen_dat(PP2DO, double_object=True), "verb",
        exposures=_sample_exposures(
            [("s_ppdat_past", "v:ppdat:past"),
             ("s_ppdat_pres", "v:ppdat:pres")], PP2DO))

    # -- phrase recombination ---------------------------------------------
    add("pp_in_subj", PHRASE, STRUCT, (), _gen_mod_subj("pp"), "np",
        exposures=_sample_exposures(["np_dobj_pp"]))
    add("pp_in_iobj", PHRASE, STRUCT, (), _gen_mod_iobj("pp"), "np",
        exposures=_sample_exposures(["np_dobj_pp"]))
    add("rc_in_subj", PHRASE, STRUCT, (), _gen_mod_subj("rc"), "np",
        exposures=_sample_exposures(["np_dobj_rco", "np_dobj_rcs"]))
    add("rc_in_iobj", PHRASE, STRUCT, (), _gen_mod_iobj("rc"), "np",
        exposures=_sample_exposures(["np_dobj_rco", "np_dobj_rcs"]))
    add("adj_in_subj", PHRASE, STRUCT, (), _gen_mod_subj("adj"), "np",
        exposures=_sample_exposures(["np_dobj_adj"]))
    add("adj_in_iobj", PHRASE, STRUCT, (), _gen_mod_iobj("adj"), "np",
        exposures=_sample_exposures(["np_dobj_adj"]))

    # -- recursion depth alternation --------------------------------------
    for construct, stem in (("CP", "cp"), ("PP", "pp"),
                            ("CenterEmbedRC", "ce"), ("Adj", "adj")):
        emb = construct != "CP"
        add(f"{stem}_recursion_shallower", RECURSION, STRUCT, (),
            _gen_recursion(construct, F(3, 5)), "none",
            count=1000 if construct == "CP" else 2000,
            partial=False, emb=emb,
            variants=_depth_variants(construct, (3,), emb),
            exposures=_depth_exposures(construct), zipf=0.5)
        add(f"{stem}_recursion_deeper", RECURSION, STRUCT, (),
            _gen_recursion(construct, F(7, 10)), "none",
            count=1000 if construct == "CP" else 2000,
            partial=False, emb=emb,
            variants=_depth_variants(construct, (5, 6), emb),
            exposures=_depth_exposures(construct), zipf=0.5)

    # -- gap position recombination ---------------------------------------
    add("rc_iobj_gap", GAP, STRUCT, (), _gen_rc_iobj_gap(), "np",
        role="direct_object",
        exposures=_sample_exposures(["rc_subjgap_do", "rc_objgap"]))
    add("wh_iobj_gap", GAP, STRUCT, (), _gen_wh_iobj_gap(), "wh",
        count=1000, emb=False, wh_word="dare", role="indirect_object",
        exposures=_sample_exposures(["q_whosubj", "q_whoobj"]))

    # -- wh-question structural alternation -------------------------------
    add("wh_active_subj", WH, STRUCT, (), _gen_wh_active_subj(), "wh",
        count=1000, emb=False, wh_word="dare", role="subject",
        exposures=_sample_exposures(["q_whosubj"]))
    add("wh_passive_subj", WH, STRUCT, (), _gen_wh_passive_subj(), "wh",
        count=1000, emb=False, wh_word="nani", role="subject",
        exposures=_sample_exposures(["q_whosubj", "s_pass"]))
    add("wh_do_dit", WH, STRUCT, (), _gen_wh_do_dit(), "wh",
        count=1000, emb=False, wh_word="nani", role="direct_object",
        exposures=_sample_exposures(["q_whatobj", "s_ppdat_past"]))
    add("wh_subj_pp", WH, STRUCT, (), _gen_wh_subj_pp(), "np",
        count=1000, emb=False, role="subject",
        exposures=_sample_exposures(["q_whatobj", "np_dobj_pp"]))
    add("wh_long_move", WH, STRUCT, (), _gen_wh_long_move(), "wh",
        count=1000, emb=False, wh_word="nani", role="direct_object",
        exposures=_sample_exposures(["q_whatobj", "s_cp_past"]))

    _check_inventory(specs)
    return specs


def _check_inventory(specs):
    if len(specs) != 42:
        raise ValueError(f"expected 42 patterns, built {len(specs)}")
    ids = [s.id for s in specs]
    if len(set(ids)) != 42:
        raise ValueError("duplicate pattern id")
    for category, want in CATEGORY_COUNTS.items():
        got = sum(1 for s in specs if s.category == category)
        if got != want:
            raise ValueError(f"{category}: {got} patterns, expected {want}")
    for group, want in GROUP_COUNTS.items():
        got = sum(1 for s in specs if s.group == group)
        if got != want:
            raise ValueError(f"{group}: {got} patterns, expected {want}")
    total = sum(s.gen_count for s in specs)
    if total != 76_000:
        raise ValueError(f"gen counts sum to {total}, expected 76000")
    small = {s.id for s in specs if s.gen_count == 1000}
    if len(small) != 8:
        raise ValueError(f"expected 8 patterns at 1000, got {sorted(small)}")
    for s in specs:
        if s.partial_evaluable == (s.category == RECURSION):
            raise ValueError(f"{s.id}: partial_evaluable mis-set")
        if len(s.exposures) == 0:
            raise ValueError(f"{s.id}: no exposure recipes")
        lex_groups = (LEX, LEXMOR)
        if (s.group in lex_groups) != (len(s.target_lexemes) == 5):
            raise ValueError(f"{s.id}: target lexeme count mismatch")
