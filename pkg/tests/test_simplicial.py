import json

import pytest
from hypothesis import given, strategies as st

from osbornkit.corpus import builtin
from osbornkit.errors import BoundExceeded, UnknownVertex
from osbornkit.osborn import all_params
from osbornkit.simplicial import (K_THEOREMS, SimplicialComplex, build_K, build_K10, build_named,
                                  check_f_ij, f_ij, is_topology, isomorphism_family, power_set,
                                  simplicial_map_check, theorem_K, topology_lemmas, union,
                                  validate_complex)


def complex_of(vertices, sets, loop=None, p=None):
    return SimplicialComplex(tuple(vertices), frozenset(frozenset(s) for s in sets), loop, p)


def test_single_vertex_complex():
    cert = validate_complex(complex_of("A", [{"A"}]))
    assert cert.passed
    assert complex_of("A", [{"A"}]).dimension == 0


def test_isomorphic_pair_complex(z3):
    K = complex_of(["o0", "s0"], [{"o0"}, {"s0"}, {"o0", "s0"}], z3, (1, 0, 0))
    assert validate_complex(K, "isotopes").passed
    assert K.dimension == 1


def test_closure_failures():
    assert not validate_complex(complex_of("AB", [{"A"}, {"A", "B"}])).passed
    assert not validate_complex(complex_of("AB", [{"A"}, {"B"}, set()])).passed
    K = complex_of("ABC", [{"A"}, {"B"}, {"C"}, {"A", "B", "C"}])
    cert = validate_complex(K)
    assert not cert.clause("closed under non-empty subsets").passed


def test_unknown_vertex():
    with pytest.raises(UnknownVertex):
        validate_complex(complex_of("A", [{"A"}, {"Z"}]))


def test_K0_on_N5_fails_somewhere(n5):
    bad = [p for p in all_params(5) if not validate_complex(build_K(n5, 0, p), "isotopes").passed]
    assert bad
    cert = theorem_K(n5, "K0")
    assert cert.passed
    assert cert.data["direction_values"] == [False, False]


def test_build_K_examples(z3):
    K = build_K(z3, 0, (1, 0, 0))
    assert len(K.vertices) == 3 and len(K.simplexes) == 4 and K.dimension == 1
    assert frozenset({"o2", "s2"}) in build_K(z3, 2, (1, 0, 0)).simplexes
    K01 = union(build_K(z3, 0, (1, 0, 0)), build_K(z3, 1, (1, 0, 0)))
    assert K01.name == "K01"
    assert K01.vertices == ("dot", "o0", "s0", "o1", "s1")
    assert len(K01.simplexes) == 7
    assert K01.simplexes == build_named(z3, "K01", (1, 0, 0)).simplexes


def test_K10_shape(v4):
    K = build_K10(v4, (1, 2, 3))
    assert len(K.vertices) == 5 and len(K.simplexes) == 16 and K.dimension == 3
    for p in all_params(4):
        assert validate_complex(build_K10(v4, p), "isotopes").passed


def test_K10_on_z3(z3):
    assert validate_complex(build_K10(z3, (1, 0, 0)), "isotopes").passed


def test_builders_pass_abstract_mode(s3):
    for which in K_THEOREMS:
        assert validate_complex(build_named(s3, which, (1, 2, 3)), "abstract").passed


def test_json_shape(z3):
    K = build_K(z3, 1, (1, 0, 0))
    doc = json.loads(K.to_json())
    assert doc == {"vertices": ["dot", "o1", "s1"],
                   "simplexes": [["dot"], ["o1"], ["s1"], ["o1", "s1"]], "dimension": 1}
    again = SimplicialComplex.from_dict(doc)
    assert again.simplexes == K.simplexes


def test_theorem_K0_z3(z3):
    cert = theorem_K(z3, "K0")
    assert cert.passed and cert.data["direction_values"] == [True, True]


@pytest.mark.parametrize("which", ["K2", "K3", "K23", "K0123"])
def test_forward_theorems_on_groups(which, s3):
    cert = theorem_K(s3, which)
    assert cert.passed
    assert "converse_holds" in cert.data


def test_theorem_K_bound(z3):
    with pytest.raises(BoundExceeded):
        theorem_K(z3, "K0", bound=2)


def test_K10_on_boolean_group(v4):
    assert theorem_K(v4, "K10").passed


def test_K10_on_m12_records_eq12_failure(m12):
    # the complex is valid at every p, yet Eq. 12 fails, so the equivalence does not hold
    cert = theorem_K(m12, "K10")
    assert cert.clause("complex of isotopes for all p").passed
    assert not cert.clause("Eq. 12 for all p").passed
    assert not cert.passed


def test_K0_iff_on_m12(m12):
    assert theorem_K(m12, "K0").passed


def test_f_ij_examples(z3):
    K0, K1 = build_K(z3, 0, (1, 0, 0)), build_K(z3, 1, (1, 0, 0))
    assert simplicial_map_check(f_ij(0, 1), K0, K1) == (True, None)
    assert simplicial_map_check({v: v for v in K0.vertices}, K0, K0)[0]
    bad = {"dot": "dot", "o0": "dot", "s0": "o1"}
    assert simplicial_map_check(bad, K0, K1) == (False, ["o0", "s0"])
    with pytest.raises(UnknownVertex):
        simplicial_map_check({"dot": "dot"}, K0, K1)


@pytest.mark.parametrize("name", ["Z3", "Z2xZ2", "S3"])
def test_f_ij_on_groups(name):
    loop = builtin(name)
    for i in range(4):
        for j in range(4):
            if i != j:
                for p in list(all_params(loop.n))[::5]:
                    assert check_f_ij(loop, i, j, p).passed


def test_topology_examples():
    assert is_topology("abc", power_set("abc"))
    assert not is_topology("ab", [set()])
    assert not is_topology("abc", [set(), set("abc"), {"a"}, {"b"}])


@given(st.sets(st.integers(0, 4), max_size=5))
def test_power_set_is_topology(V):
    assert is_topology(V, power_set(V))


def test_topology_lemmas(z3, s3, n5):
    assert topology_lemmas(z3, (1, 0, 0)).passed
    cert = topology_lemmas(s3, (1, 2, 3))
    assert cert.passed and cert.clause("G-loop").passed
    fam = isomorphism_family(s3, (1, 2, 3))
    assert len(fam) == 2 ** 9
    assert topology_lemmas(n5, (1, 2, 3), labels=["o0", "s0", "o1"]).passed
