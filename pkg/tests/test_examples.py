import random

import pytest
import sympy

from redinit import MonomialIdeal, Ring, initial_ideal, polarize
from redinit import examples as ex
from redinit.gin import analytic_spread, krull_dim, lex_reduction_number, reduction_number
from redinit.orders import DegRevLex, Lex, Permuted


def test_linear_section_counts():
    assert ex.linear_section_counts(0) == (3, 2)
    assert ex.linear_section_counts(17) == (3, 2)


def test_symmetric_minors_and_diagonal_order():
    minors = ex.symmetric_minors()
    ring, gens = ex.load_bundled("remark19-symmetric.ideal")
    distinct = {m for _, _, m, _ in minors}
    assert set(gens) == distinct
    assert len(distinct) == 6
    assert ex.is_diagonal_order(Lex(), ring)
    # with b first, b^2 beats a*d
    assert not ex.is_diagonal_order(Permuted(Lex(), (1, 0, 2, 3, 4, 5)), ring)
    assert ex.find_diagonal_order(ring) == Lex()


def test_symmetric_minors_spread():
    res = ex.symmetric_minors_spread()
    assert res["l"] == 6 and res["l_in"] == 5


@pytest.mark.parametrize("seed", [None, 6, 7])
def test_quadrics_spread(seed):
    res = ex.quadrics_spread(seed)
    assert res["l"] == 2 and res["l_in"] == 3


def test_bundled_quadrics_match_seed():
    ring, gens = ex.load_bundled("remark19-quadrics.ideal")
    assert ex.seeded_quadrics(ex.QUADRIC_SEED) == (ring, gens)


def test_x4_polarization_file_matches():
    ring, gens = ex.load_bundled("sec2-I.ideal")
    I = MonomialIdeal(ring, [g.leading_monomial(Lex()) for g in gens])
    I1, _ = polarize(I, ["x4"])
    s_ring, s_gens = ex.load_bundled("sec2-I1.ideal")
    assert set(I1.generators) == {g.leading_monomial(Lex()) for g in s_gens}


def test_polarization_corrected_variant():
    got = ex.polarization_numbers("sec2-I-corrected.ideal", "sec2-I1-corrected.ideal")
    for key, want in ex.EXPECTED["polarization"].items():
        assert got[key] == want, key
    assert got["dim_A"] == got["dim_A_mod_z"] + 1


def test_polarization_literal_values():
    """Values actually attained by the ideal as printed; see README for the discrepancy."""
    got = ex.polarization_numbers()
    assert (got["r"], got["r_full_polarization"], got["r_x4_polarization"], got["r_lex"]) == (3, 3, 3, 5)
    assert (got["r_A"], got["r_A_mod_z"]) == (3, 3)


def _sympy_section_hf(names, monos, keep, seed, top=8):
    """HF of K[x]/(I + generic linear forms) by sympy over QQ, eliminating the last variables."""
    syms = sympy.symbols(names)
    rng = random.Random(seed)
    subs = {}
    # kill the variables not in ``keep`` by generic linear substitutions in the kept ones
    for i, s in enumerate(syms):
        if i not in keep:
            subs[s] = sum(rng.randint(1, 50) * syms[j] for j in keep)
    polys = [sympy.expand(sympy.Mul(*[syms[i] ** e for i, e in enumerate(m)]).subs(subs)) for m in monos]
    kept = [syms[j] for j in keep]
    G = sympy.groebner(polys, *kept, order="grevlex")
    leads = [sympy.Poly(g, *kept).monoms(order="grevlex")[0] for g in G.exprs]
    from redinit.monomial_ideals import hilbert_function
    L = MonomialIdeal(Ring(tuple(str(k) for k in kept), 0), leads)
    return list(hilbert_function(L, top).values)


def test_polarization_literal_against_sympy():
    ring, gens = ex.load_bundled("sec2-I.ideal", characteristic=0)
    monos = [g.leading_monomial(Lex()) for g in gens]
    assert krull_dim(gens) == 1
    hf = _sympy_section_hf(ring.names, monos, keep=[0, 1, 2], seed=1)
    assert hf[:5] == [1, 3, 5, 6, 0]
    ring_c, gens_c = ex.load_bundled("sec2-I-corrected.ideal", characteristic=0)
    hf_c = _sympy_section_hf(ring_c.names, [g.leading_monomial(Lex()) for g in gens_c], keep=[0, 1, 2], seed=1)
    assert max(j for j, v in enumerate(hf_c) if v) == 4


def test_resolve_names(tmp_path):
    assert ex.resolve("remark18") == ex.data_path("remark18.ideal")
    assert ex.resolve("sec2.ideal") == ex.data_path("sec2-I.ideal")
    f = tmp_path / "remark18.ideal"
    f.write_text("ring x; char 5; ideal x")
    assert ex.resolve(str(f)) == f


def test_reproduce_all_reports_every_check():
    rows = ex.reproduce_all()
    assert len(rows) == 19
    failed = {r["check"] for r in rows if not r["ok"]}
    assert failed == {"sec2-I.ideal r", "sec2-I.ideal r_A_mod_z"}
