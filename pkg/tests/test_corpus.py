import json

import pytest

from redinit import load_ideal
from redinit.corpus import CorpusSpec, generate_corpus, random_ideal, write_corpus


def test_deterministic_bytes(tmp_path):
    spec = CorpusSpec(count=1, seed=42)
    a = write_corpus(spec, tmp_path / "a")[0].read_bytes()
    b = write_corpus(spec, tmp_path / "b")[0].read_bytes()
    assert a == b


def test_all_homogeneous_within_bounds():
    spec = CorpusSpec(count=30, seed=3)
    for ring, gens in generate_corpus(spec):
        assert 2 <= ring.n <= spec.n_vars
        assert 1 <= len(gens) <= spec.max_gens
        for g in gens:
            assert g.is_homogeneous() and 1 <= g.degree() <= spec.max_degree
            assert len(g) <= spec.max_terms


def test_rational_corpus():
    ring, gens = random_ideal(CorpusSpec(count=1, seed=1, characteristic=0), 0)
    assert ring.characteristic == 0


def test_manifest_and_reload(tmp_path):
    spec = CorpusSpec(count=3, seed=9)
    paths = write_corpus(spec, tmp_path)
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["files"] == [p.name for p in paths]
    assert manifest["spec"]["seed"] == 9
    for i, p in enumerate(paths):
        assert load_ideal(p) == random_ideal(spec, i)


@pytest.mark.parametrize("kwargs", [{"count": 0}, {"n_vars": 0}, {"characteristic": 4}, {"seed": -1}])
def test_invalid_spec(kwargs):
    with pytest.raises(ValueError):
        CorpusSpec(**kwargs)
