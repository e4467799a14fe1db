import json

from compmt.build import (RunConfig, SentenceRecord, build_splits,
                          child_seed, read_corpus, write_corpus)


def _pairs(recs):
    return {(r.source, r.target) for r in recs}


def test_counts_scale_linearly(small_build, mid_build):
    recs01, man01 = small_build
    recs05, man05 = mid_build
    assert man01["counts"]["dev"] == 50 and man01["counts"]["test"] == 50
    assert man05["counts"]["dev"] == 250 and man05["counts"]["test"] == 250
    assert man01["counts"]["gen"] == 760    # 0.01 x 76,000
    assert man05["counts"]["gen"] == 3800   # 0.05 x 76,000
    # train = in-distribution pool + exposures + concatenations
    aug01 = man01["augmentations"]
    assert man01["counts"]["train"] == \
        392 + aug01["exposures"] + aug01["concatenated"]
    aug05 = man05["augmentations"]
    assert man05["counts"]["train"] == \
        1960 + aug05["exposures"] + aug05["concatenated"]
    assert aug01["concatenated"] == 4 and aug05["concatenated"] == 20


def test_per_pattern_gen_counts(mid_build, patterns):
    _, manifest = mid_build
    for p in patterns:
        got = manifest["per_pattern"][p.id]["gen_count"]
        assert got == round(p.gen_count * 0.05), p.id


def test_exposures_cover_every_recipe(mid_build, patterns):
    _, manifest = mid_build
    for p in patterns:
        got = manifest["per_pattern"][p.id]["exposure_count"]
        assert got >= len(p.exposures), p.id


def test_splits_share_no_sentence_pairs(mid_build):
    recs, _ = mid_build
    splits = list(recs)
    for i, a in enumerate(splits):
        for b in splits[i + 1:]:
            assert not (_pairs(recs[a]) & _pairs(recs[b])), (a, b)


def test_no_duplicate_pairs_within_gen(mid_build):
    recs, _ = mid_build
    assert len(_pairs(recs["gen"])) == len(recs["gen"])


def test_topicalization_hits_requested_fraction(mid_build):
    _, manifest = mid_build
    aug = manifest["augmentations"]
    assert aug["topic_eligible"] > 0
    ratio = aug["topicalized"] / aug["topic_eligible"]
    assert abs(ratio - 0.10) <= 0.02, ratio
    # topicalized sources front the object before a comma
    recs, _ = mid_build
    fronted = [r for r in recs["train"]
               if "topicalized" in r.provenance.get("augmentations", ())]
    assert len(fronted) == aug["topicalized"]
    for r in fronted:
        assert "," in r.source_tokens
        assert "wa" in r.target_tokens


def test_cp_embedding_mixed_half_and_half(mid_build, patterns):
    recs, _ = mid_build
    by_pattern = {}
    for r in recs["gen"]:
        by_pattern.setdefault(r.pattern_id, []).append(r)
    for p in patterns:
        if not p.cp_embedding:
            continue
        mine = by_pattern[p.id]
        inside = sum(1 for r in mine if r.provenance["in_cp"])
        assert inside * 2 == len(mine), p.id


def test_recursion_record_depths(mid_build, patterns):
    recs, _ = mid_build
    construct = {"cp": "CP", "pp": "PP", "ce": "CenterEmbedRC",
                 "adj": "Adj"}
    for r in recs["gen"]:
        if "depths" not in r.provenance:
            continue
        stem = r.pattern_id.split("_")[0]
        d = r.provenance["depths"][construct[stem]]
        if r.pattern_id.endswith("shallower"):
            assert d == 3, r.id
        else:
            assert d in (5, 6), r.id


def test_concatenation_dominates_gen_length(mid_build):
    recs, manifest = mid_build
    gen_max = manifest["lengths"]["gen"]["max_source_len"]
    cats = [r for r in recs["train"]
            if "concatenated" in r.provenance.get("augmentations", ())]
    for r in cats:
        assert len(r.source_tokens) > gen_max
    assert manifest["lengths"]["train"]["max_source_len"] > gen_max


def test_without_concat(bank):
    recs, manifest = build_splits(
        RunConfig(master_seed=3, scale=0.01, with_concat=False), bank=bank)
    assert manifest["augmentations"]["concatenated"] == 0
    assert all("concatenated" not in r.provenance.get("augmentations", ())
               for r in recs["train"])


def test_build_is_deterministic_in_seed(bank, small_build):
    recs, manifest = small_build
    recs2, manifest2 = build_splits(RunConfig(master_seed=1, scale=0.01),
                                    bank=bank)
    for split in recs:
        assert [r.to_json() for r in recs[split]] == \
            [r.to_json() for r in recs2[split]]
    assert manifest == manifest2


def test_different_seed_changes_output(bank, small_build):
    recs, _ = small_build
    recs2, _ = build_splits(RunConfig(master_seed=2, scale=0.01), bank=bank)
    assert [r.to_json() for r in recs["gen"]] != \
        [r.to_json() for r in recs2["gen"]]


def test_child_seed_streams_are_distinct():
    seeds = {child_seed(1, s) for s in
             ("pool", "concat", "gen:a", "gen:b", "exp:a")}
    assert len(seeds) == 5
    assert child_seed(1, "pool") == child_seed(1, "pool")
    assert child_seed(1, "pool") != child_seed(2, "pool")


def test_write_read_round_trip(tmp_path, small_build):
    recs, manifest = small_build
    out = tmp_path / "corpus"
    write_corpus(recs, manifest, str(out))
    back, manifest2 = read_corpus(str(out))
    assert manifest2 == json.loads(json.dumps(manifest))
    for split in recs:
        assert [r.to_json() for r in back[split]] == \
            [r.to_json() for r in recs[split]]
    # the TSV mirror carries one row per record plus the header
    tsv = (out / "corpus.tsv").read_text(encoding="utf-8").splitlines()
    assert len(tsv) == 1 + sum(len(v) for v in recs.values())


def test_record_json_round_trip():
    r = SentenceRecord("x-1", "gen", "pat", ("a", "b"), ("c",),
                       {"expected_role": "subject"}, {"seed": 4})
    assert SentenceRecord.from_json(r.to_json()) == r


def test_config_round_trip(tmp_path):
    cfg = RunConfig(master_seed=9, scale=0.5, with_concat=False)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_dict()), encoding="utf-8")
    assert RunConfig.from_file(str(path)) == cfg
