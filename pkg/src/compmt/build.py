"""Corpus construction: the four splits, augmentations, and manifests.

The build is deterministic in one master seed.  Every stream (each pattern's
generalization sampler, the primitive-exposure sampler, the in-distribution
pool, the concatenation stream) derives its own child seed, so per-pattern
generalization work can run in parallel without changing a byte of output.

Build order matters: the generalization set is built first so that its
maximum sentence length and its (source, target) pairs are known when the
training side is assembled.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random

from .grammar import (Constraints, GrammarError, LeafNode, LitNode, ProdNode,
                      UnsatisfiableConstraintError, iter_productions)
from .transduce import span_for_source, transduce, linearize, alignment_of
from .bank import analyze, default_bank, tag_role, _np_head
from .naturalize import (CaseFrameList, UnrepairableRecordError,
                         default_case_frames, naturalize, reject_duplicates)

TRAIN_DEPTHS = frozenset({0, 1, 2, 4})
_MOD_DOBJ_IDS = frozenset(
    {"np_dobj_pp", "np_dobj_rco", "np_dobj_rcs", "np_dobj_adj"})

# Default (unscaled) counts.
N_DEV = 5000
N_TEST = 5000
N_POOL_TRAIN = 39_200   # in-distribution train records incl. topicalized
N_EXPOSURE = 100        # per pattern
N_CONCAT = 400

OUT_DIR_ENV = "COMPMT_OUT_DIR"


@dataclass
class RunConfig:
    master_seed: int = 1
    scale: float = 1.0
    topicalization_fraction: float = 0.10
    cp_embedding_fraction: float = 0.50
    with_concat: bool = True
    strict_selectional: bool = False
    out_dir: str = "corpus"
    case_frame_path: str = ""
    parallel: bool = False

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - set(cls().__dict__)
        if unknown:
            raise GrammarError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def to_dict(self):
        out = dict(self.__dict__)
        # Worker-pool use is an execution detail; it never changes the
        # corpus, so it has no place in the manifest.
        out.pop("parallel", None)
        return out


@dataclass
class SentenceRecord:
    id: str
    split: str
    pattern_id: str
    source_tokens: tuple
    target_tokens: tuple
    annotation: dict = None
    provenance: dict = field(default_factory=dict)

    @property
    def source(self):
        return " ".join(self.source_tokens)

    @property
    def target(self):
        return " ".join(self.target_tokens)

    def to_json(self):
        out = {"id": self.id, "split": self.split,
               "source": self.source, "target": self.target}
        if self.pattern_id:
            out["pattern_id"] = self.pattern_id
        if self.annotation is not None:
            out["annotation"] = self.annotation
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["id"], data["split"], data.get("pattern_id", ""),
                   tuple(data["source"].split()),
                   tuple(data["target"].split()),
                   data.get("annotation"), data.get("provenance", {}))


def child_seed(master_seed: int, stream: str) -> int:
    digest = hashlib.md5(f"{master_seed}:{stream}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _bucket(master_seed: int, index: int) -> int:
    digest = hashlib.md5(f"{master_seed}:pool:{index}".encode()).digest()
    return digest[0] % 10


def _scaled(n, scale):
    return max(1, round(n * scale)) if n else 0


def _capitalize(tokens):
    head = tokens[0]
    return (head[0].upper() + head[1:],) + tuple(tokens[1:])


def _depths_ok(analysis):
    return all(d in TRAIN_DEPTHS for d in analysis.depths.values())


def _pair_key(src_tokens, tgt_tokens):
    return (" ".join(src_tokens), " ".join(tgt_tokens))


class _Translator:
    def __init__(self, bank):
        self.bank = bank

    def __call__(self, tree):
        tt = transduce(tree, self.bank.rules, self.bank.dictionary,
                       self.bank.morph)
        return tt, tuple(linearize(tt))


def _annotate(tree, tt, target_tokens, spec):
    """Annotation payload for one generalization record."""
    analysis = analyze(tree)
    in_cp = bool(spec.cp_embedding) and any(
        p.id == spec.embed_marker for p in iter_productions(tree))
    if spec.target_kind == "none":
        return None, dict(analysis.depths), in_cp
    if spec.target_kind == "wh":
        ref = [spec.wh_word]
        role = spec.expected_role
    elif spec.target_kind == "verb":
        leaf = next(lf for lf in _leaves(tree)
                    if lf.entry.pos == "Verb"
                    and lf.entry.lemma in spec.target_lexemes)
        start, end = span_for_source(tt, leaf)
        ref = list(target_tokens[start:end])
        # No case particle follows a predicate; Partial Match checks the
        # inflected form's presence only.
        role = None
    else:  # np
        node = next(nd for nd in _prod_nodes(tree)
                    if nd.production.annot_target)
        span = span_for_source(tt, node)
        if span is None:
            raise GrammarError(
                f"{spec.id}: target constituent has no target span")
        start, end = span
        ref = list(target_tokens[start:end])
        head = _np_head(node)
        role = spec.expected_role or tag_role(head.tag)
    annotation = {
        "target_constituent_ref_tokens": ref,
        "expected_role": role,
        "depth_profile": dict(analysis.depths),
        "in_cp": in_cp,
    }
    return annotation, dict(analysis.depths), in_cp


def _leaves(tree):
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, LeafNode):
            yield node
        elif isinstance(node, ProdNode):
            stack.extend(reversed(node.children))


def _prod_nodes(tree):
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, ProdNode):
            yield node
            stack.extend(reversed(node.children))


# --------------------------------------------------------------------------
# Generalization records (parallelizable per pattern)
# --------------------------------------------------------------------------


def _build_pattern(pattern_id, master_seed, scale, strict, cf_rows):
    """All generalization records for one pattern; pure in its arguments."""
    bank = default_bank()
    spec = bank.by_pattern[pattern_id]
    cf = CaseFrameList(cf_rows)
    translator = _Translator(bank)
    seed = child_seed(master_seed, f"gen:{pattern_id}")
    rng = Random(seed)
    count = round(spec.gen_count * scale)
    records = []
    seen = set()
    residual_count = 0
    dropped = 0
    for i in range(count):
        cons = spec.constraints_for(i)
        for _attempt in range(10_000):
            tree = spec.gen_grammar.sample_with_rng(rng, cons)
            if reject_duplicates(tree):
                continue
            try:
                tree, residuals, _ = naturalize(tree, cf, rng, bank.lexicon,
                                                strict=strict)
            except UnrepairableRecordError:
                dropped += 1
                continue
            tt, target_tokens = translator(tree)
            source_tokens = _capitalize(_source_tokens(tree))
            key = _pair_key(source_tokens, target_tokens)
            if key in seen:
                continue
            seen.add(key)
            break
        else:
            raise UnsatisfiableConstraintError(
                f"pattern {pattern_id}: could not draw a fresh record "
                f"(index {i})")
        residual_count += len(residuals)
        annotation, depths, in_cp = _annotate(tree, tt, target_tokens, spec)
        provenance = {"seed": seed, "grammar_id": pattern_id,
                      "variant": i % len(spec.variants), "in_cp": in_cp}
        if not spec.partial_evaluable:
            provenance["depths"] = depths
        records.append(SentenceRecord(
            f"gen-{pattern_id}-{i:05d}", "gen", pattern_id,
            source_tokens, target_tokens, annotation, provenance))
    return records, residual_count, dropped


def _yield_source(tree):
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, ProdNode):
            stack.extend(reversed(node.children))
        else:
            yield node


def _source_tokens(tree):
    return tuple(lf.text if hasattr(lf, "text") else lf.surface
                 for lf in _yield_source(tree))


# --------------------------------------------------------------------------
# Training-side streams
# --------------------------------------------------------------------------


def primitive_exposures(bank, spec, n, master_seed, cf, strict, seen,
                        grammar_cache, dropped):
    """n training records supplying the pattern's licensed prerequisites."""
    seed = child_seed(master_seed, f"exp:{spec.id}")
    rng = Random(seed)
    translator = _Translator(bank)
    records = []
    for k in range(n):
        recipe = spec.exposures[k % len(spec.exposures)]
        rid = f"train-exp-{spec.id}-{k:03d}"
        if recipe[0] == "bare":
            _, pos, lemma = recipe
            entry = bank.lexicon.by_key[(lemma, pos)]
            source = (entry.form("inf" if pos == "Verb" else "base"),)
            if pos == "Verb":
                cls = bank.dictionary.verb_class(lemma)
                stem_key, suffixes = bank.morph.inflect(cls, "pres",
                                                        "active")
                target = tuple(bank.dictionary.lookup(lemma, "Verb",
                                                      stem_key)) + suffixes
            else:
                target = tuple(bank.dictionary.lookup(lemma, pos, "base"))
            records.append(SentenceRecord(
                rid, "train", "", source, target,
                provenance={"seed": seed, "grammar_id": "lexicon",
                            "augmentations": ["exposure:" + spec.id]}))
            continue
        _, key, required, overrides, depths = recipe
        cache_key = (key, tuple(sorted(
            (tag, tuple(sorted(ls))) for tag, ls in overrides.items())))
        grammar = grammar_cache.get(cache_key)
        if grammar is None:
            grammar = bank.grammar_for(key)
            if overrides:
                grammar = grammar.restrict_slots(
                    {tag: frozenset(ls) for tag, ls in overrides.items()})
            grammar_cache[cache_key] = grammar
        cons = Constraints(frozenset(required), frozenset(), tuple(depths))
        for _attempt in range(10_000):
            tree = grammar.sample_with_rng(rng, cons)
            analysis = analyze(tree)
            if not _depths_ok(analysis):
                continue
            if reject_duplicates(tree):
                continue
            try:
                tree, _residual, _ = naturalize(tree, cf, rng, bank.lexicon,
                                                strict=strict)
            except UnrepairableRecordError:
                dropped[0] += 1
                continue
            tt, target = translator(tree)
            source = _capitalize(_source_tokens(tree))
            pair = _pair_key(source, target)
            if pair in seen:
                continue
            seen.add(pair)
            break
        else:
            raise UnsatisfiableConstraintError(
                f"pattern {spec.id}: exposure recipe {recipe!r} exhausted")
        records.append(SentenceRecord(
            rid, "train", "", source, target,
            provenance={"seed": seed, "grammar_id": key,
                        "augmentations": ["exposure:" + spec.id]}))
    return records


def _topic_eligible(tree):
    """The (s_node, dobj_node) of a matrix transitive clause with a modified
    direct object, or None."""
    if tree.production.id != "root_decl":
        return None
    s_node = tree.children[0]
    if not isinstance(s_node, ProdNode) or \
            s_node.production.id not in ("s_trans_past", "s_trans_pres"):
        return None
    dobj = s_node.children[2]
    if isinstance(dobj, ProdNode) and dobj.production.id in _MOD_DOBJ_IDS:
        return s_node
    return None


def topicalize(bank, tree, s_node):
    """Fronted variant: the modified object before a comma, topic particle
    "wa" on the Japanese side.  The result parses under the same grammar
    via the zero-weight topicalization productions."""
    which = "root_topic_past" if s_node.production.id == "s_trans_past" \
        else "root_topic_pres"
    prod = next(p for p in bank.grammar.productions if p.id == which)
    subj, verb, dobj = s_node.children
    return ProdNode(prod, (dobj, LitNode(","), subj, verb, LitNode(".")))


def concatenate_for_length(bank, cf, master_seed, n, gen_max_len, strict,
                           seen, dropped):
    """Training records longer than any generalization sentence, formed by
    concatenating independent declarative in-distribution sentences."""
    seed = child_seed(master_seed, "concat")
    rng = Random(seed)
    translator = _Translator(bank)
    records = []
    for j in range(n):
        for _attempt in range(10_000):
            source, target, parts = (), (), 0
            while len(source) <= gen_max_len:
                tree = bank.grammar.sample_with_rng(rng)
                if tree.production.id != "root_decl":
                    continue
                analysis = analyze(tree)
                if not _depths_ok(analysis) or reject_duplicates(tree):
                    continue
                try:
                    tree, _res, _ = naturalize(tree, cf, rng, bank.lexicon,
                                               strict=strict)
                except UnrepairableRecordError:
                    dropped[0] += 1
                    continue
                _tt, tgt = translator(tree)
                src = _source_tokens(tree)
                src = _capitalize(src)
                source = source + src
                target = target + ((".",) if target else ()) + tgt
                parts += 1
            key = _pair_key(source, target)
            if key not in seen:
                seen.add(key)
                break
        else:
            raise UnsatisfiableConstraintError("concatenation exhausted")
        records.append(SentenceRecord(
            f"train-cat-{j:04d}", "train", "", source, target,
            provenance={"seed": seed, "grammar_id": "in_dist",
                        "augmentations": ["concatenated"],
                        "parts": parts}))
    return records


# --------------------------------------------------------------------------
# The whole build
# --------------------------------------------------------------------------


def build_splits(config: RunConfig, bank=None):
    """Build train/dev/test/gen; returns ({split: [records]}, manifest).

    ``bank`` can be passed in to reuse compiled grammars; it defaults to
    the standard resources.
    """
    if bank is None:
        bank = default_bank()
    if config.case_frame_path:
        from .naturalize import parse_case_frames
        with open(config.case_frame_path, encoding="utf-8") as fh:
            cf = parse_case_frames(fh.read())
    else:
        cf = default_case_frames()
    cf_rows = [(v, r, nn, rank) for (v, r), entries in cf.pool.items()
               for rank, nn in entries]
    scale = config.scale
    strict = config.strict_selectional
    seed = config.master_seed

    # 1. Generalization set, one independent stream per pattern.
    gen_records = []
    residual_total = 0
    pattern_ids = [p.id for p in bank.patterns]
    if config.parallel:
        with ProcessPoolExecutor() as pool:
            futures = [pool.submit(_build_pattern, pid, seed, scale, strict,
                                   cf_rows)
                       for pid in pattern_ids]
            results = [f.result() for f in futures]
    else:
        results = [_build_pattern(pid, seed, scale, strict, cf_rows)
                   for pid in pattern_ids]
    seen = set()
    dropped = [0]
    for recs, residuals, pat_dropped in results:
        for r in recs:
            key = _pair_key(r.source_tokens, r.target_tokens)
            if key in seen:
                raise GrammarError(
                    f"cross-pattern duplicate generalization pair: "
                    f"{r.source!r}")
            seen.add(key)
        gen_records.extend(recs)
        residual_total += residuals
        dropped[0] += pat_dropped
    gen_max_len = max(len(r.source_tokens) for r in gen_records)

    # 2. Primitive exposures (bare primitives are exempt from dedup: the
    # same bare lexeme record recurs by design).
    n_exp = _scaled(N_EXPOSURE, scale)
    exposure_records = []
    grammar_cache = {}
    for spec in bank.patterns:
        # Never scale below one exposure per recipe: a pattern's
        # prerequisites are only covered once the recipe cycle completes.
        exposure_records.extend(primitive_exposures(
            bank, spec, max(n_exp, len(spec.exposures)), seed, cf, strict,
            seen, grammar_cache, dropped))

    # 3. One in-distribution pool, hash-partitioned into dev/test/train;
    # every tenth eligible training sentence also yields a topicalized copy.
    n_dev = _scaled(N_DEV, scale)
    n_test = _scaled(N_TEST, scale)
    n_pool_train = round(N_POOL_TRAIN * scale)
    pool_seed = child_seed(seed, "pool")
    rng = Random(pool_seed)
    translator = _Translator(bank)
    dev, test, train_pool = [], [], []
    eligible = 0
    topicalized = 0
    index = 0
    period = max(2, round(1 / config.topicalization_fraction)) \
        if config.topicalization_fraction else 0
    while len(dev) < n_dev or len(test) < n_test or \
            len(train_pool) < n_pool_train:
        tree = bank.grammar.sample_with_rng(rng)
        index += 1
        analysis = analyze(tree)
        if not _depths_ok(analysis) or reject_duplicates(tree):
            continue
        try:
            tree, _res, _ = naturalize(tree, cf, rng, bank.lexicon,
                                       strict=strict)
        except UnrepairableRecordError:
            dropped[0] += 1
            continue
        _tt, target = translator(tree)
        source = _capitalize(_source_tokens(tree))
        key = _pair_key(source, target)
        if key in seen:
            continue
        bucket = _bucket(seed, index)
        if bucket == 0 and len(dev) < n_dev:
            split, out = "dev", dev
        elif bucket == 1 and len(test) < n_test:
            split, out = "test", test
        elif len(train_pool) < n_pool_train:
            split, out = "train", train_pool
        elif len(dev) < n_dev:
            split, out = "dev", dev
        elif len(test) < n_test:
            split, out = "test", test
        else:
            continue
        seen.add(key)
        rid = {"dev": f"dev-{len(dev):05d}", "test": f"test-{len(test):05d}",
               "train": f"train-{len(train_pool):06d}"}[split]
        out.append(SentenceRecord(
            rid, split, "", source, target,
            provenance={"seed": pool_seed, "grammar_id": "in_dist"}))
        if split != "train" or period == 0:
            continue
        s_node = _topic_eligible(tree)
        if s_node is None:
            continue
        eligible += 1
        if eligible % period != 0 or len(train_pool) >= n_pool_train:
            continue
        fronted = topicalize(bank, tree, s_node)
        _ftt, ftarget = translator(fronted)
        fsource = _capitalize(_source_tokens(fronted))
        fkey = _pair_key(fsource, ftarget)
        if fkey in seen:
            continue
        seen.add(fkey)
        train_pool.append(SentenceRecord(
            f"train-{len(train_pool):06d}", "train", "", fsource, ftarget,
            provenance={"seed": pool_seed, "grammar_id": "in_dist",
                        "augmentations": ["topicalized"]}))
        topicalized += 1

    # 4. Length-covering concatenations.
    n_concat = _scaled(N_CONCAT, scale) if config.with_concat else 0
    concat_records = concatenate_for_length(
        bank, cf, seed, n_concat, gen_max_len, strict, seen, dropped)

    train = exposure_records + train_pool + concat_records
    records = {"train": train, "dev": dev, "test": test, "gen": gen_records}
    manifest = _manifest(config, bank, records, topicalized, eligible,
                         residual_total, dropped[0])
    return records, manifest


def _manifest(config, bank, records, topicalized, eligible,
              residual_total, dropped):
    def lengths(recs):
        if not recs:
            return {"max_source_len": 0, "max_target_len": 0}
        return {"max_source_len": max(len(r.source_tokens) for r in recs),
                "max_target_len": max(len(r.target_tokens) for r in recs)}

    exposure_counts = {}
    for r in records["train"]:
        for aug in r.provenance.get("augmentations", ()):
            if aug.startswith("exposure:"):
                pid = aug.split(":", 1)[1]
                exposure_counts[pid] = exposure_counts.get(pid, 0) + 1
    per_pattern = {}
    for spec in bank.patterns:
        gen_count = sum(1 for r in records["gen"] if r.pattern_id == spec.id)
        per_pattern[spec.id] = {
            "category": spec.category, "group": spec.group,
            "gen_count": gen_count,
            "exposure_count": exposure_counts.get(spec.id, 0),
        }
    concatenated = sum(
        1 for r in records["train"]
        if "concatenated" in r.provenance.get("augmentations", ()))
    return {
        "master_seed": config.master_seed,
        "config": config.to_dict(),
        "counts": {split: len(recs) for split, recs in records.items()},
        "per_pattern": per_pattern,
        "augmentations": {
            "topicalized": topicalized,
            "topic_eligible": eligible,
            "concatenated": concatenated,
            "exposures": sum(exposure_counts.values()),
        },
        "selectional_residuals": residual_total,
        "unrepairable_dropped": dropped,
        "lengths": {split: lengths(recs)
                    for split, recs in records.items()},
    }


# --------------------------------------------------------------------------
# Files
# --------------------------------------------------------------------------

SPLITS = ("train", "dev", "test", "gen")


def write_corpus(records, manifest, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    for split in SPLITS:
        with open(os.path.join(out_dir, f"{split}.jsonl"), "w",
                  encoding="utf-8") as fh:
            for r in records[split]:
                fh.write(json.dumps(r.to_json(), ensure_ascii=False,
                                    sort_keys=True) + "\n")
    with open(os.path.join(out_dir, "corpus.tsv"), "w",
              encoding="utf-8") as fh:
        fh.write("id\tsplit\tpattern\tsource\ttarget\n")
        for split in SPLITS:
            for r in records[split]:
                fh.write(f"{r.id}\t{split}\t{r.pattern_id}\t"
                         f"{r.source}\t{r.target}\n")
    with open(os.path.join(out_dir, "manifest.json"), "w",
              encoding="utf-8") as fh:
        json.dump(manifest, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")


def read_jsonl(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(SentenceRecord.from_json(json.loads(line)))
    return out


def read_corpus(out_dir):
    records = {split: read_jsonl(os.path.join(out_dir, f"{split}.jsonl"))
               for split in SPLITS}
    with open(os.path.join(out_dir, "manifest.json"),
              encoding="utf-8") as fh:
        manifest = json.load(fh)
    return records, manifest
