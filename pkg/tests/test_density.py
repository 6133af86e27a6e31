import json

from markoff_forge.density import (density_sweep, exceptional_kappas, is_square, kappa_admissibility,
                                   ratio_is_square, sieve)


def test_sieve_counts():
    assert len(sieve(100000)) == 9592
    assert sieve(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert sieve(1) == []


def test_square_helpers():
    assert is_square(0) and is_square(49) and not is_square(-4) and not is_square(50)
    assert ratio_is_square(8, 2) and ratio_is_square(-3, -12) and not ratio_is_square(3, -3)


def test_admissible_window():
    adm = [k for k in range(35) if kappa_admissibility(k).admissible]
    assert adm == [0, 6, 7, 11, 12, 15, 16, 17, 18, 19, 21, 23, 25, 26, 27, 28, 30, 31, 34]
    assert set(exceptional_kappas(0, 34)) == set(range(35)) - set(adm)


def test_small_sweep_consistency():
    rep = density_sweep(0, 5000, workers=1)
    ie = rep.inclusion_exclusion
    assert ie["formula"] == rep.counts["union"]
    assert rep.primes == len([p for p in sieve(5000) if p > 3])
    assert abs(rep.ratios["union"] - 13 / 16) < 0.05
    assert json.loads(rep.to_json())["schema"] == "markoff-forge/1"
    assert rep.to_csv().splitlines()[0].startswith("kappa,X")


def test_parallel_sweep_equals_serial():
    a = density_sweep(1, 30000, workers=1)
    b = density_sweep(1, 30000, workers=3)
    assert a.counts == b.counts and a.excluded == b.excluded
