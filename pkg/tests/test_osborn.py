import json

import pytest
from hypothesis import given, settings, strategies as st

from osbornkit.certificate import Certificate
from osbornkit.corpus import builtin, builtins, iter_reduced_tables
from osbornkit.errors import Gamma23Mismatch, HypothesisFailed
from osbornkit.identity import check_identity, classify, holds
from osbornkit.isotopy import IsotopeCache, principal_isotope
from osbornkit.loop import Loop
from osbornkit.osborn import (DEFAULT, DIAGRAMS, THEOREMS, Conventions, Derived, TheoremContext,
                              all_params, build_isotope, check_theorem, gamma, gamma_word,
                              is_osborn, is_universal_osborn, parse_label, phi, verify_diagram,
                              verify_diagram_all)
from osbornkit.perm import Perm
from osbornkit.words import word_length

GROUPS = [g for g in builtins() if "group" in classify(g)]


def add(k, n):
    return Perm([(i + k) % n for i in range(n)])


def test_phi_examples(z3):
    assert phi(z3, 0, (1, 0, 0)) == 2
    assert phi(z3, 2, (1, 0, 0)) == 1


def test_phi0_in_abelian_group(z4):
    for x, u, v in all_params(4):
        assert phi(z4, 0, (x, u, v)) == (u + v - x) % 4


@pytest.mark.parametrize("name", ["Z2", "Z2xZ2", "Z2^3"])
def test_phi0_boolean(name):
    loop = builtin(name)
    for p in all_params(loop.n):
        x, u, v = p
        assert phi(loop, 0, p) == loop.ldiv(u, loop.mul(x, v))


def test_phi1_conventions(s3):
    printed = Conventions(phi1="printed")
    for p in all_params(6):
        assert phi(s3, 1, p, printed) == phi(s3, 0, p)
        d = Derived(s3, p)
        assert phi(s3, 1, p) == s3.rdiv(d.uv, d.w)


def test_build_isotope_examples(z3, s3):
    q = build_isotope(z3, "o1", (1, 0, 0))
    assert q == principal_isotope(z3, (0, 1))
    assert q.table.tolist() == [[(x + y - 1) % 3 for y in range(3)] for x in range(3)]
    assert build_isotope(s3, "s2", (3, s3.e, 4)) == s3
    q = build_isotope(z3, "∘_0", (1, 0, 0))
    assert q.table.tolist() == [[(x + y + 1) % 3 for y in range(3)] for x in range(3)]
    assert build_isotope(z3, "dot", (1, 2, 0)) is z3


def test_labels():
    assert parse_label("∗_3") == "s3"
    assert parse_label("∘1") == "o1"
    with pytest.raises(ValueError):
        parse_label("o4")


def test_gamma_examples(z3):
    p = (1, 0, 0)
    assert gamma(z3, "gamma0", p) == add(2, 3)
    assert gamma(z3, "γ01∘", p) == add(2, 3)
    assert gamma(z3, "gamma23o", p).is_identity()
    assert gamma(z3, "gamma1", p) == add(2, 3)
    assert gamma(z3, "gamma01s", p) == add(1, 3)


def test_gamma23_mismatch(z3):
    # right form gives v-u, left form u-v in an abelian group
    with pytest.raises(Gamma23Mismatch) as info:
        gamma(z3, "gamma23o", (0, 0, 1))
    assert info.value.params == (0, 0, 1)


def test_gamma23_forms_agree_in_boolean_groups(v4):
    for p in all_params(4):
        gamma(v4, "gamma23o", p)


def test_gamma_word_lengths(z3):
    assert word_length(gamma_word(z3, "gamma0", (1, 0, 0))) == 4
    assert word_length(gamma_word(z3, "gamma01o", (1, 0, 0))) == 2
    assert str(gamma_word(z3, "gamma0", (1, 0, 0))) == "R_{v}^-1R_{u\\(xv)}L_{u}^-1L_{x}"


def test_gamma1_printed_equals_gamma0(s3):
    printed = Conventions(gamma1="printed")
    for p in list(all_params(6))[::7]:
        assert gamma(s3, "gamma1", p, printed) == gamma(s3, "gamma0", p)


def test_diagram_examples(z3, v4, n5):
    assert verify_diagram(z3, "7", (1, 0, 0)).passed
    for p in all_params(4):
        assert verify_diagram(v4, "8", p).passed
    fails = [p for p in all_params(5) if not verify_diagram(n5, "7", p).passed]
    assert fails
    cert = verify_diagram(n5, "7", fails[0])
    bad = cert.failures()
    assert bad and bad[0].witness is not None


@pytest.mark.parametrize("loop", GROUPS, ids=lambda g: g.name)
@pytest.mark.parametrize("which", DIAGRAMS)
def test_diagrams_on_groups(loop, which):
    cert = verify_diagram_all(loop, which)
    assert cert.passed, cert.summary()


def test_printed_phi1_breaks_diagram_8(z3, v4):
    printed = Conventions(phi1="printed")
    assert not verify_diagram_all(z3, "8", printed).passed
    assert verify_diagram_all(z3, "8").passed


def test_diagram_17_notes_gamma23_forms(z3):
    cert = verify_diagram(z3, "17", (0, 0, 1))
    assert cert.passed
    assert not cert.clause("gamma23o right form = left form").passed
    assert not cert.clause("gamma23o right form = left form").gating


def test_is_osborn_examples(z3, n5, m12):
    assert is_osborn(z3) == (True, None)
    ok, wit = is_osborn(n5)
    assert not ok
    assert wit["identity"] == "OS3" and wit["assignment"] == (1, 0, 2)
    assert is_osborn(m12)[0]


def test_universal_osborn_examples(n5):
    for g in GROUPS:
        assert is_universal_osborn(g) == (True, None)
    ok, wit = is_universal_osborn(n5)
    assert not ok
    f, g, *xyz = wit
    assert check_identity(principal_isotope(n5, (f, g)), "(x*(y*z))*x = (x*y)*(((x^l)*(x*z))*x)")


@pytest.mark.slow
def test_universal_osborn_m12(m12):
    assert is_universal_osborn(m12)[0]


def test_theorem_10_examples(z3, v4):
    cert = check_theorem(v4, "2post1.10")
    assert cert.passed
    assert [c.passed for c in cert.clauses[:3]] == [True, True, True]
    cert = check_theorem(z3, "2post1.10")
    assert cert.passed
    assert [c.passed for c in cert.clauses[:3]] == [False, False, False]
    d = Derived(z3, (1, 0, 0))
    assert principal_isotope(z3, d.pair("o0")) != principal_isotope(z3, d.pair("o1"))


def test_theorem_15_spot_value(z3):
    d = Derived(z3, (1, 0, 0))
    lhs = d.perm("gamma0") * d.perm("gamma01s") * d.perm("gamma1")
    assert lhs == d.perm("gamma01o") == add(2, 3)
    assert check_theorem(z3, "2post1.15").passed


def test_theorem_17_spot_value(z3):
    d = Derived(z3, (1, 0, 0))
    assert d.perm("psi0") == add(2, 3)
    ctx = TheoremContext(z3)
    assert ctx.eq12(d) == (True, None)


def test_hypothesis_enforced(n5):
    with pytest.raises(HypothesisFailed):
        check_theorem(n5, "2post1.11")
    # these two carry no universal Osborn hypothesis
    check_theorem(n5, "2post1.17c")
    check_theorem(n5, "2post1.21")


def test_all_theorems_hold_on_boolean_group(v4):
    ctx = TheoremContext(v4)
    for name in THEOREMS:
        assert check_theorem(v4, name, ctx=ctx).passed, name


@pytest.mark.parametrize("name", ["2post1.10", "2post1.11", "2post1.11b", "2post1.12", "2post1.13",
                                  "2post1.14", "2post1.15", "2post1.16", "2post1.17", "2post1.17b",
                                  "2post1.17c", "remark.commutator"])
def test_theorems_hold_on_groups(name):
    for g in GROUPS:
        assert check_theorem(g, name).passed, (g.name, name)


def test_gamma23_statements_fail_on_odd_abelian_group(z3):
    # the two printed gamma23 forms disagree, so the right-hand sides of 19-21 never hold
    for name in ("2post1.19", "2post1.20"):
        cert = check_theorem(z3, name)
        assert not cert.passed
        assert cert.failures()[0].witness["lhs"] is True


def test_theorem_11_bridge_on_m12(m12):
    cert = check_theorem(m12, "2post1.11")
    assert cert.clause("Eq. 10.m triple of each found isomorphism is an autotopism").passed


def test_remark_commutator_on_m12(m12):
    assert check_theorem(m12, "remark.commutator").passed


def test_diagrams_on_m12(m12):
    cache = IsotopeCache(m12)
    for which in DIAGRAMS:
        assert verify_diagram_all(m12, which, cache=cache).passed, which


def test_gamma1_words_agree_on_m12(m12):
    printed = Conventions(gamma1="printed")
    assert verify_diagram_all(m12, "8", printed).passed
    assert verify_diagram_all(m12, "8", DEFAULT).passed


def test_diagram_7_converse_small_orders():
    for n in range(1, 6):
        for table in iter_reduced_tables(n):
            loop = Loop(table)
            cache = IsotopeCache(loop)
            all7 = all(verify_diagram(loop, "7", p, cache=cache).passed for p in all_params(n))
            if all7:
                assert all(holds(cache[f, g], "OS3") and holds(cache[f, g], "OS5")
                           for f in range(n) for g in range(n))


def test_certificate_json_round_trip(z3):
    cert = check_theorem(z3, "2post1.10")
    again = Certificate.from_dict(json.loads(cert.to_json()))
    assert again.to_json() == cert.to_json()
    doc = json.loads(cert.to_json())
    assert set(doc) == {"check", "loop", "params", "pass", "clauses", "data"}


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_closure_identity_on_groups(loop, data):
    p = tuple(data.draw(st.integers(0, loop.n - 1)) for _ in range(3))
    d = Derived(loop, p)
    assert d.perm("gamma0") * d.perm("gamma01s") * d.perm("gamma1") == d.perm("gamma01o")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_commutator_criterion_on_groups(loop, data):
    from osbornkit.perm import commutator

    p = tuple(data.draw(st.integers(0, loop.n - 1)) for _ in range(3))
    d = Derived(loop, p)
    same = d.perm("gamma0") == d.perm("gamma1")
    assert same == commutator(d.perm("commutator_B"), d.perm("commutator_A")).is_identity()
