from fractions import Fraction

import pytest

from tensorcond.errors import InvalidUnitError, PreconditionError
from tensorcond.jacobians import (BreakRep, FamilyParams, disc_valuation,
                                  jacobian_inertia_model, joint_break_model,
                                  smallest_valid_unit, swan_break,
                                  swan_jacobian, sylvester_resultant,
                                  tensor_break_rep, validate_params,
                                  verify_sharpness)

PRIMES = (3, 5, 7, 11, 13)


def test_validate_params():
    assert validate_params(3, 2) == FamilyParams(3, 2)
    with pytest.raises(InvalidUnitError):
        validate_params(5, 7)       # 7^4 = 2401 = 1 mod 25
    with pytest.raises(InvalidUnitError):
        validate_params(3, 3)       # not a unit
    with pytest.raises(InvalidUnitError):
        validate_params(3, 8)       # 8^2 = 64 = 1 mod 9
    with pytest.raises(InvalidUnitError):
        validate_params(2, 3)       # p must be odd
    for p in PRIMES:
        a = smallest_valid_unit(p)
        assert a >= 2
        assert validate_params(p, a).a == a


def test_sylvester_resultant_basics():
    # res(x - a, x - b) = a - b up to sign convention: (a - b) for these rows
    assert abs(sylvester_resultant([-2, 1], [-5, 1])) == 3
    # res(x^2+1, x^2-1) = 4
    assert abs(sylvester_resultant([1, 0, 1], [-1, 0, 1])) == 4
    # common root gives 0
    assert sylvester_resultant([-1, 1], [-1, 1]) == 0


def test_disc_valuation_examples():
    assert disc_valuation(3, 2) == 3
    assert disc_valuation(3, 3) == 5
    assert disc_valuation(5, 5) == 9


def test_disc_valuation_closed_form():
    def vp(p, n):
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v
    for p in PRIMES:
        for alpha in (1, 2, 6, p, 2 * p, p * p, p ** 3, p + 1):
            assert disc_valuation(p, alpha) == p + (p - 1) * vp(p, alpha)


def test_swan_jacobian():
    assert swan_jacobian(3, 2) == 1
    assert swan_jacobian(3, 3) == 3
    assert swan_jacobian(11, 11) == 11
    for p in PRIMES:
        a = smallest_valid_unit(p)
        assert swan_jacobian(p, a) == 1
        assert swan_jacobian(p, p) == p


def test_filtration_model_agrees_with_discriminant_route():
    for p in PRIMES:
        a = smallest_valid_unit(p)
        for alpha in (a, p):
            data = jacobian_inertia_model(p, alpha)
            assert data.rho.swan_conductor() == swan_jacobian(p, alpha)
            assert data.rho.artin_conductor() == (p - 1) + swan_jacobian(p, alpha)
            assert data.rho.degree() == 0
            assert data.character.dim == p - 1


def test_break_model_sums():
    for p in (3, 5, 7):
        params = validate_params(p, smallest_valid_unit(p))
        rep_a, rep_p = joint_break_model(params)
        assert swan_break(rep_a) == 1
        assert swan_break(rep_p) == p
        prod = tensor_break_rep(rep_a, rep_p)
        assert swan_break(prod) == p * (p - 1)
        assert len(prod.characters) == (p - 1) ** 2
        assert all(brk == Fraction(p, p - 1) for _, brk in prod.characters)


def test_break_rep_validation():
    with pytest.raises(ValueError):
        BreakRep(3, 1, (((0,), Fraction(1, 2)),))   # trivial listed
    with pytest.raises(ValueError):
        BreakRep(3, 1, (((1,), Fraction(1, 2)), ((2,), Fraction(3, 2))))
    rep = BreakRep(3, 1, (((1,), Fraction(1, 2)), ((2,), Fraction(1, 2))))
    with pytest.raises(PreconditionError):
        tensor_break_rep(rep, rep)   # equal slopes are ambiguous


def test_empty_break_rep():
    rep = BreakRep(3, 2, ())
    assert swan_break(rep) == 0


def test_verify_sharpness_all_primes():
    for p in PRIMES:
        a = smallest_valid_unit(p)
        report = verify_sharpness(validate_params(p, a))
        assert report.equal
        assert report.sw_a == 1
        assert report.sw_p == p
        assert report.sw_tensor == p * (p - 1)
        assert report.a_tensor == (2 * p - 1) * (p - 1)
        assert report.swan_rhs == report.sw_tensor
        assert report.conductor_rhs == report.a_tensor
    assert verify_sharpness(validate_params(3, 2)).a_tensor == 10
    assert verify_sharpness(validate_params(5, 2)).a_tensor == 36
