import itertools
from fractions import Fraction

import pytest

from cuboidparam import (Instance, NotAWitness, ParamPoint, RingElem,
                         SingularCompletion, SingularPoint, Solution,
                         build_instance, complete_first, complete_second,
                         d1_explicit, d2_explicit, d_pipeline, eval_coeffs,
                         param_first, param_second, ring_generator,
                         ring_verify_identities, sextic_poly, square_free_part,
                         verify_solution)

from conftest import random_nonsingular_points

P11 = ParamPoint(Fraction(1), Fraction(1))
P01 = ParamPoint(Fraction(0), Fraction(1))


def test_pipeline_fixtures():
    assert d_pipeline(Instance.FIRST, P11) == Fraction(-1922, 35937)
    assert d_pipeline(Instance.SECOND, P11) == Fraction(-18050, 328509)
    assert d_pipeline(Instance.FIRST, P01) == Fraction(-4, 27)


def test_explicit_fixtures():
    assert d1_explicit(P11) == Fraction(-1922, 35937)
    assert d2_explicit(P11) == Fraction(-18050, 328509)


def test_explicit_singular():
    p12 = ParamPoint(Fraction(1), Fraction(2))
    with pytest.raises(SingularPoint) as exc:
        d1_explicit(p12)
    assert "L1" in exc.value.vanishing
    with pytest.raises(SingularPoint):
        d2_explicit(p12)


def test_explicit_vs_pipeline_at_random_points():
    for point in random_nonsingular_points(30, seed=3, nonzero_b=True):
        try:
            assert d1_explicit(point) == d_pipeline(Instance.FIRST, point)
            assert d2_explicit(point) == d_pipeline(Instance.SECOND, point)
        except SingularPoint:
            continue  # cube factor of the explicit form can vanish


def test_build_instance():
    inst = build_instance(Instance.FIRST, P11)
    assert inst.d == Fraction(-1922, 35937)
    assert inst.sextic == sextic_poly(inst.d)
    assert inst.which is Instance.FIRST and inst.point == P11


def test_param_first_0_1():
    assert param_first(P01, Fraction(0)) == (0, 0, 1)
    assert sorted(param_first(P01, Fraction(3))) == [0, 0, 1]
    assert sorted(param_first(P01, Fraction(-3))) == [0, 0, 1]


def test_param_second_0_1_degenerate_path():
    # B0 = 0 for d^3 - d, so the witness is irrelevant: direct factorization
    triple = param_second(P01, Fraction(0))
    assert sorted(triple) == [-1, 0, 1]


def test_param_not_a_witness():
    with pytest.raises(NotAWitness):
        param_first(P11, Fraction(2))


def test_param_first_ring_symmetric_functions():
    e = eval_coeffs(P11)
    modulus = square_free_part(sextic_poly(Fraction(-1922, 35937)))
    w = ring_generator(modulus)
    x1, x2, x3 = param_first(P11, w)
    assert x1 + x2 + x3 == e.e10
    assert x1 * x2 + x1 * x3 + x2 * x3 == e.e20
    assert x1 * x2 * x3 == e.e30


def test_param_second_ring_symmetric_functions():
    e = eval_coeffs(P11)
    modulus = square_free_part(sextic_poly(Fraction(-18050, 328509)))
    w = ring_generator(modulus)
    d1, d2, d3 = param_second(P11, w)
    assert d1 + d2 + d3 == e.e01
    assert d1 * d2 + d1 * d3 + d2 * d3 == e.e02
    assert d1 * d2 * d3 == e.e03


def test_complete_first_singular_at_0_1():
    with pytest.raises(SingularCompletion):
        complete_first(P01, (Fraction(0), Fraction(0), Fraction(1)))


def test_complete_second_0_1():
    x = complete_second(P01, (Fraction(0), Fraction(1), Fraction(-1)))
    assert x == (1, 0, 0)
    # the result satisfies the edge cubic x^3 - x^2 exactly
    assert all(v**3 - v**2 == 0 for v in x)


def test_complete_second_repeated_columns_singular():
    with pytest.raises(SingularCompletion):
        complete_second(P11, (Fraction(1), Fraction(1), Fraction(1)))


def test_complete_first_sum_rule_in_ring():
    e = eval_coeffs(P11)
    modulus = square_free_part(sextic_poly(Fraction(-1922, 35937)))
    w = ring_generator(modulus)
    triple = param_first(P11, w)
    ds = complete_first(P11, triple)
    assert ds[0] + ds[1] + ds[2] == e.e01
    assert ds[0] * ds[0] + ds[1] * ds[1] + ds[2] * ds[2] == 2


def test_verify_solution_0_1():
    sol = Solution(x=(Fraction(1), Fraction(0), Fraction(0)),
                   d=(Fraction(0), Fraction(1), Fraction(-1)))
    rep = verify_solution(P01, sol)
    assert rep.all_pass
    assert rep.positivity is False
    assert set(rep.residuals) == {"x-cubic-1", "x-cubic-2", "x-cubic-3",
                                  "d-cubic-1", "d-cubic-2", "d-cubic-3",
                                  "eq-21", "eq-11", "eq-12",
                                  "sum-x2", "sum-d2"}
    assert all(v == 0 for v in rep.residuals.values())


def test_verify_solution_perturbed_fails():
    sol = Solution(x=(Fraction(1), Fraction(0), Fraction(1, 2)),
                   d=(Fraction(0), Fraction(1), Fraction(-1)))
    rep = verify_solution(P01, sol)
    assert not rep.all_pass
    assert rep.residuals["x-cubic-3"] != 0


def test_verify_solution_singular_point():
    sol = Solution(x=(Fraction(1), Fraction(0), Fraction(0)),
                   d=(Fraction(0), Fraction(1), Fraction(-1)))
    with pytest.raises(SingularPoint):
        verify_solution(ParamPoint(Fraction(1), Fraction(2)), sol)


def test_verify_invariant_under_simultaneous_permutation():
    x = (Fraction(1), Fraction(0), Fraction(0))
    d = (Fraction(0), Fraction(1), Fraction(-1))
    for perm in itertools.permutations(range(3)):
        sol = Solution(x=tuple(x[i] for i in perm),
                       d=tuple(d[i] for i in perm))
        assert verify_solution(P01, sol).all_pass


def test_verify_positivity_none_in_ring_domain():
    modulus = square_free_part(sextic_poly(Fraction(-1922, 35937)))
    w = ring_generator(modulus)
    triple = param_first(P11, w)
    ds = complete_first(P11, triple)
    rep = verify_solution(P11, Solution(x=triple, d=ds))
    assert rep.all_pass
    assert rep.positivity is None
    assert all(isinstance(v, RingElem) for v in rep.residuals.values())


def test_ring_verify_fixture():
    assert ring_verify_identities(P11, Instance.FIRST)
    assert ring_verify_identities(P11, Instance.SECOND)


def test_ring_verify_random_points():
    for point in random_nonsingular_points(6, seed=7, height=20,
                                           nonzero_b=True):
        assert ring_verify_identities(point, Instance.FIRST)
        assert ring_verify_identities(point, Instance.SECOND)
