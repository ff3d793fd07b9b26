from __future__ import annotations

from jordan_hopf.catalog import build_algebra
from jordan_hopf.identities import COMMUTATIONS, COPRODUCTS, family


def _identity(table, name):
    (found,) = [i for i in table if i.id == name]
    return found


def test_family(f3):
    assert family(build_algebra("G", f3, k=1, ell=2)) == "G"
    assert family(build_algebra("Dtilde", f3)) == "Dtilde"


def test_ids_are_unique():
    ids = [i.id for i in COMMUTATIONS + COPRODUCTS]
    assert len(ids) == len(set(ids))


def test_triangle_parameters(qq):
    ident = _identity(COPRODUCTS, "coproduct/x^(n-l)*y^l")
    values = list(ident.parameters(2, build_algebra("Btilde", qq)))
    assert values == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def test_prime_only_identities(qq, f3):
    ident = _identity(COPRODUCTS, "primitive/x^p")
    assert not ident.applies(build_algebra("Btilde", qq))
    assert ident.applies(build_algebra("Btilde", f3))
    # no free parameters
    assert list(ident.parameters(5, build_algebra("Btilde", f3))) == [()]


def test_power_range_follows_characteristic(f3):
    ident = _identity(COPRODUCTS, "coproduct/y^(p*l)")
    values = list(ident.parameters(7, build_algebra("Btilde", f3)))
    assert values == [(1,), (2,)]


def test_flagged_identities():
    flagged = {i.id for i in COMMUTATIONS + COPRODUCTS if i.flagged}
    assert flagged == {
        "commutation/v^n*y",
        "commutation/u*y^n",
        "commutation/v*y^n",
        "coproduct/y^n-bosonized",
    }


def test_jordan_commutation_builds_equal_sides(qq):
    alg = build_algebra("Btilde", qq)
    ident = _identity(COMMUTATIONS, "commutation/y^l*x^n")
    for m in range(4):
        for n in range(4):
            lhs, rhs = ident.build(alg, m, n)
            assert lhs == rhs
