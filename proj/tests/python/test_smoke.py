# Copyright 2026 The edumine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import edumine as em

POS = em.SentimentLabel.positive
NEG = em.SentimentLabel.negative

FIXTURE = [(["good", "teacher"], POS), (["good", "exam"], POS), (["bad", "exam"], NEG)]


def test_version():
    assert em.__version__


def test_corpus_roundtrip():
    text = (
        '{"id":"a","source":"s","created_at":"2026-01-01T00:00:00Z","text":"hi","label":"positive"}\n'
        "not json\n"
        '{"id":"b","source":"s","created_at":"2026-01-01T00:00:00Z","text":"yo","label":null}\n'
    )
    corpus = em.parse_jsonl(text)
    assert len(corpus) == 2
    assert corpus.skipped == 1
    assert corpus.records[1].label is None
    assert em.parse_jsonl(em.to_jsonl(corpus)).records == corpus.records


def test_split(source_dir):
    corpus = em.ingest_jsonl(str(source_dir / "data" / "sample_feedback.jsonl"))
    train, test = em.split(corpus, 0.8, 42)
    assert len(train) == 96 and len(test) == 24
    again, _ = em.split(corpus, 0.8, 42)
    assert [r.id for r in train.records] == [r.id for r in again.records]
    with pytest.raises(em.ConfigError):
        em.split(corpus, 1.5, 1)


def test_preprocess():
    assert em.case_fold("ÉCOLE") == "école"
    assert em.tokenize("good, teacher!") == ["good", "teacher"]
    assert em.porter_stem("combination") == "combin"
    assert em.spell_correct("teachr", {"teacher": 50, "teach": 40}) == "teacher"
    assert em.preprocess("The EXAMS were LEAKED") == ["exam", "leak"]
    off = {s: False for s in ["case_fold", "tokenize", "spell_correct", "remove_stopwords", "stem"]}
    assert em.preprocess("The EXAMS, were LEAKED!", off) == ["The", "EXAMS,", "were", "LEAKED!"]


def test_aspects():
    assert em.filter_alphabetic(["2fast", "#exam", "paper", "exam2020"]) == ["paper", "exam2020"]
    tags = em.pos_tag(["exam", "corruption", "quickly"])
    assert [t[1] for t in tags] == ["noun", "noun", "adverb"]
    cats, rest = em.formulate_taxonomy({"d1": ["exam"], "d2": ["exam", "teacher"]},
                                       {"examination": {"exam"}})
    assert cats == {"examination": {"exam"}}
    assert rest == {"teacher"}
    with pytest.raises(em.ConfigError, match="'x'"):
        em.formulate_taxonomy({"d": ["x"]}, {"a": {"x"}, "b": {"x"}})


def test_classifier():
    model = em.train(FIXTURE, 1.0)
    assert model.prior(POS) == pytest.approx(2 / 3)
    assert model.log_likelihood("good", POS) == pytest.approx(math.log(3 / 8))
    p = model.posterior(["good", "exam"])
    pos, neg = 1 / 16, 1 / 54
    assert p.scores[POS] == pytest.approx(pos / (pos + neg), abs=1e-12)
    assert p.evidence == pytest.approx(pos + neg, rel=1e-12)
    assert p.predicted == POS
    assert em.NaiveBayesModel.from_json(model.to_json()) == model
    with pytest.raises(em.ConfigError):
        em.train(FIXTURE, 0.0)
    with pytest.raises(em.SchemaError):
        em.NaiveBayesModel.from_json("")


def test_eval_and_report():
    m = em.metrics(em.confusion_from_pairs([NEG, POS], [(POS, POS)] * 8 + [(NEG, POS)] * 2 + [(POS, NEG)] * 4))
    assert m.per_class[POS].precision == pytest.approx(0.8)
    assert m.per_class[POS].recall == pytest.approx(2 / 3)
    assert m.to_csv().startswith("class,precision,recall,f1\n")
    s = em.aggregate([("a", POS, {"examination"}), ("b", POS, {"examination"}),
                      ("c", NEG, {"examination"})])
    assert "examination,positive,2,0.666667" in s.to_csv()
    assert 'width="800"' in s.to_svg()


def test_cli(tmp_path, source_dir):
    code, out, err = em.run_cli(["--config", str(source_dir / "data" / "pipeline.json"),
                                 "--out", str(tmp_path), "pipeline"])
    assert code == 0, err
    assert (tmp_path / "aspect_chart.svg").exists()
    code, out, _ = em.run_cli(["--config", str(source_dir / "data" / "pipeline.json"),
                               "--out", str(tmp_path), "classify", "--text", "great teacher"])
    assert code == 0
    assert out.split("\t")[0] in {"positive", "negative", "neutral"}
    assert em.run_cli(["--alpha", "0", "train"])[0] != 0
