"""Identity checkers: spec'd instances, hypothesis gates, counters, chains."""

import itertools
import json
import random
from fractions import Fraction

import pytest

import oracles
from dedsums.reciprocity import (
    IDENTITIES,
    HypothesisError,
    check_apostol,
    check_berndt,
    check_carlitz,
    check_cor32,
    check_cor34,
    check_cor42,
    check_cor43,
    check_cor45,
    check_dedekind,
    check_rademacher15,
    check_rademacher_rad,
    check_rademacher_three,
    check_thm31,
    check_thm33,
    check_thm41,
    check_thm44,
    random_case,
    run_case,
)

F = Fraction
ZERO = F(0)


class TestDedekind:
    def test_two_three(self):
        rep = check_dedekind(2, 3)
        assert rep.passed and rep.lhs == F(-1, 18) and rep.rhs == F(-1, 18)

    def test_unit_pair(self):
        rep = check_dedekind(1, 1)
        assert rep.passed and rep.lhs == 0 and rep.rhs == 0

    def test_gcd_gate(self):
        with pytest.raises(HypothesisError) as exc:
            check_dedekind(2, 4)
        assert exc.value.clause == "gcd(a, b) = 1"

    def test_positivity_gate(self):
        with pytest.raises(HypothesisError):
            check_dedekind(-2, 3)


class TestRademacherThreeTerm:
    @pytest.mark.parametrize("triple", [(1, 1, 1), (2, 3, 5), (2, 3, 7)])
    def test_passes(self, triple):
        assert check_rademacher_three(*triple).passed

    def test_dieter_variant_same_value(self):
        strong = check_rademacher_three(3, 4, 5)
        weak = check_rademacher_three(3, 4, 5, dieter=True)
        assert strong.passed and weak.passed
        assert strong.lhs == weak.lhs and strong.rhs == weak.rhs

    def test_coprimality_gate(self):
        with pytest.raises(HypothesisError) as exc:
            check_rademacher_three(2, 4, 5)
        assert exc.value.clause == "gcd(a, b) = 1"
        with pytest.raises(HypothesisError):
            check_rademacher_three(3, 5, 10)


class TestShiftedTwoTerm:
    def test_eq_values(self):
        assert check_rademacher_rad(2, 3, ZERO, ZERO).passed
        assert check_rademacher_rad(2, 4, F(1, 3), F(1, 5)).passed
        assert check_rademacher_rad(1, 1, F(1, 2), F(1, 2)).passed

    def test_no_coprimality_needed(self):
        assert check_rademacher_rad(6, 9, F(2, 5), F(-7, 3)).passed

    def test_positivity_gate(self):
        with pytest.raises(HypothesisError):
            check_rademacher_rad(0, 3, ZERO, ZERO)

    def test_verbatim_variant_matches_on_coprime_inputs(self):
        for (a, b) in [(1, 1), (2, 3), (3, 5), (7, 4)]:
            for (x, y) in [(ZERO, ZERO), (F(1, 3), F(2, 5)), (F(-7, 3), F(1, 2))]:
                verbatim = check_rademacher15(a, b, x, y)
                corrected = check_rademacher_rad(a, b, x, y)
                assert verbatim.passed and corrected.passed
                assert verbatim.lhs == corrected.lhs
                assert verbatim.rhs == corrected.rhs

    def test_verbatim_requires_coprime(self):
        with pytest.raises(HypothesisError) as exc:
            check_rademacher15(2, 4, ZERO, ZERO)
        assert exc.value.clause == "gcd(a, b) = 1"


class TestBerndtThreeTerm:
    def test_all_units(self):
        rep = check_berndt(1, 1, 1, ZERO, ZERO, ZERO)
        assert rep.passed and rep.counter == 1 and rep.lhs == 0 and rep.rhs == 0

    def test_coprime_triple(self):
        rep = check_berndt(2, 3, 5, ZERO, ZERO, ZERO)
        assert rep.passed and rep.counter == 1

    def test_shifted(self):
        assert check_berndt(2, 3, 5, F(1, 2), F(1, 3), F(1, 7)).passed

    def test_counter_matches_enumeration(self):
        shifts = [ZERO, F(1, 2), F(1, 3)]
        for a, b, c in itertools.product(range(1, 5), repeat=3):
            for x, y, z in itertools.product(shifts, repeat=3):
                rep = check_berndt(a, b, c, x, y, z)
                assert rep.passed
                assert rep.counter == oracles.ladder_count_oracle(a, b, c, x, y, z)

    def test_positivity_gate(self):
        with pytest.raises(HypothesisError):
            check_berndt(1, -1, 1, ZERO, ZERO, ZERO)


class TestApostol:
    def test_order_one(self):
        assert check_apostol(1, 2, 3).passed

    def test_order_three(self):
        assert check_apostol(3, 3, 4).passed

    def test_even_order_gate(self):
        with pytest.raises(HypothesisError) as exc:
            check_apostol(2, 2, 3)
        assert exc.value.clause == "n odd"

    def test_gcd_gate(self):
        with pytest.raises(HypothesisError):
            check_apostol(3, 2, 4)


class TestCarlitz:
    def test_order_zero(self):
        assert check_carlitz(0, 2, 3, F(1, 3), F(1, 4)).passed

    def test_all_units_raw_kernel(self):
        rep = check_carlitz(1, 1, 1, ZERO, ZERO)
        assert rep.passed
        # single-term sums with the raw kernel: both sides nonzero
        assert rep.lhs == rep.rhs != 0

    def test_order_four(self):
        assert check_carlitz(4, 2, 3, F(1, 5), F(2, 7)).passed

    def test_gcd_gate(self):
        with pytest.raises(HypothesisError):
            check_carlitz(2, 2, 6, ZERO, ZERO)


class TestProductFormulas:
    def test_sawtooth_square(self):
        rep = check_thm31(1, 1, 1, 1, F(1, 2), ZERO, ZERO)
        assert rep.passed and rep.lhs == 0

    def test_general_orders(self):
        assert check_thm31(2, 3, 2, -3, F(1, 3), F(1, 5), F(1, 7)).passed

    def test_negative_moduli_delta_term(self):
        # both factor arguments integral and sgn(ab) = 1: the delta term fires
        assert check_thm31(1, 1, -1, -1, ZERO, ZERO, ZERO).passed

    def test_zero_modulus_gate(self):
        with pytest.raises(HypothesisError) as exc:
            check_thm31(1, 1, 0, 2, ZERO, ZERO, ZERO)
        assert exc.value.clause == "a != 0"
        with pytest.raises(HypothesisError):
            check_thm31(0, 1, 1, 2, ZERO, ZERO, ZERO)

    def test_derivative_level_branches(self):
        # all four order regimes of the derivative-level formula
        assert check_thm33(1, 1, 1, 1, ZERO, ZERO, ZERO).passed
        assert check_thm33(1, 2, 2, 3, F(1, 4), F(1, 3), F(1, 5)).passed
        assert check_thm33(2, 1, 3, -2, F(1, 4), F(1, 3), F(1, 5)).passed
        assert check_thm33(3, 2, -2, 3, F(1, 2), ZERO, F(1, 3)).passed

    def test_delta_weight_cases(self):
        # (m, n) in {(2,1), (1,2)} with integer arguments exercises the
        # derivative-level remainder weight
        assert check_thm33(2, 1, 1, 1, ZERO, ZERO, ZERO).passed
        assert check_thm33(1, 2, -1, 2, ZERO, ZERO, ZERO).passed


class TestProjections:
    def test_cor32_order_one_reduces(self):
        assert check_cor32(1, 1, 2, 3, ZERO, ZERO).passed

    def test_cor32_general(self):
        assert check_cor32(2, 2, 3, -5, F(1, 2), F(1, 3)).passed
        assert check_cor32(1, 2, 1, 1, ZERO, ZERO).passed

    def test_cor34(self):
        assert check_cor34(1, 1, 2, 3, ZERO, ZERO).passed
        assert check_cor34(2, 1, 3, 5, F(1, 2), F(1, 3)).passed
        assert check_cor34(2, 3, -1, 2, ZERO, F(1, 7)).passed

    def test_cor34_integer_shift_weight(self):
        assert check_cor34(2, 1, 3, 5, ZERO, ZERO).passed
        assert check_cor34(1, 2, 3, 5, ZERO, ZERO).passed


class TestThreeModulusLaws:
    def test_thm41_units(self):
        rep = check_thm41(1, 1, 1, 1, 1, ZERO, ZERO, ZERO)
        assert rep.passed and rep.counter == 1

    def test_thm41_reduces_to_three_term(self):
        rep = check_thm41(1, 1, 2, 3, 5, ZERO, ZERO, ZERO)
        assert rep.passed
        berndt = check_berndt(2, 3, 5, ZERO, ZERO, ZERO)
        assert berndt.passed and rep.counter == berndt.counter

    def test_thm41_general(self):
        assert check_thm41(2, 2, 2, -3, 5, F(1, 3), F(1, 4), F(1, 5)).passed

    def test_thm41_counter_signed(self):
        rng = random.Random(313)
        for _ in range(120):
            m, n = rng.randint(1, 2), rng.randint(1, 2)
            a = rng.choice((-1, 1)) * rng.randint(1, 5)
            b = rng.choice((-1, 1)) * rng.randint(1, 5)
            c = rng.choice((-1, 1)) * rng.randint(1, 5)
            x, y, z = (F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(3))
            rep = check_thm41(m, n, a, b, c, x, y, z)
            assert rep.passed
            assert rep.counter == oracles.ladder_count_oracle(a, b, c, x, y, z)

    def test_thm44(self):
        assert check_thm44(1, 1, 1, 1, 1, ZERO, ZERO, ZERO).passed
        assert check_thm44(2, 1, 2, 3, 5, F(1, 2), F(1, 3), F(1, 5)).passed
        assert check_thm44(1, 2, -2, 3, -5, ZERO, F(1, 4), ZERO).passed

    def test_zero_modulus_gate(self):
        with pytest.raises(HypothesisError) as exc:
            check_thm41(1, 1, 1, 1, 0, ZERO, ZERO, ZERO)
        assert exc.value.clause == "c != 0"
        with pytest.raises(HypothesisError):
            check_thm44(1, 1, 1, 0, 1, ZERO, ZERO, ZERO)


class TestCor42:
    def test_order_one_reduces(self):
        assert check_cor42(1, 2, 3, ZERO, ZERO).passed

    def test_order_zero(self):
        assert check_cor42(0, 2, 4, F(1, 3), F(1, 5)).passed

    def test_non_coprime(self):
        assert check_cor42(4, 2, 4, F(1, 2), F(1, 2)).passed

    def test_gates(self):
        with pytest.raises(HypothesisError):
            check_cor42(-1, 2, 3, ZERO, ZERO)
        with pytest.raises(HypothesisError):
            check_cor42(1, 0, 3, ZERO, ZERO)


class TestCor43:
    def test_smallest(self):
        rep = check_cor43(1, 0, 1, 1, 1)
        assert rep.passed and rep.counter == 1

    def test_non_pairwise_coprime(self):
        assert check_cor43(3, 1, 2, 3, 4).passed

    def test_even_row(self):
        assert check_cor43(5, 4, 2, 2, 2).passed

    def test_counter_is_gcd(self):
        rng = random.Random(314)
        for _ in range(60):
            p = rng.choice((1, 3, 5))
            r = rng.randint(0, p - 1)
            a, b, c = (rng.randint(1, 8) for _ in range(3))
            rep = check_cor43(p, r, a, b, c)
            assert rep.passed
            assert rep.counter == oracles.ladder_count_oracle(a, b, c, ZERO, ZERO, ZERO)

    def test_gates(self):
        with pytest.raises(HypothesisError) as exc:
            check_cor43(2, 0, 1, 1, 1)
        assert exc.value.clause == "p odd"
        with pytest.raises(HypothesisError) as exc:
            check_cor43(3, 3, 1, 1, 1)
        assert exc.value.clause == "0 <= r <= p - 1"


class TestCor45:
    def test_units(self):
        assert check_cor45(1, 1, 1, 1, 1).passed

    def test_examples(self):
        assert check_cor45(2, 2, 2, 3, 5).passed
        assert check_cor45(1, 2, 2, 4, 6).passed

    def test_gate(self):
        with pytest.raises(HypothesisError):
            check_cor45(1, 1, 1, 0, 1)


class TestSpecializationChains:
    def test_three_modulus_law_vs_three_term_arrangement(self):
        shifts = [ZERO, F(1, 2), F(1, 3)]
        for a, b, c in itertools.product((1, 2, 3), repeat=3):
            for x, y, z in itertools.product(shifts, repeat=3):
                general = check_thm41(1, 1, a, b, c, x, y, z)
                three_term = check_berndt(a, b, c, x, y, z)
                assert general.passed and three_term.passed
                assert general.counter == three_term.counter

    def test_cor42_at_order_one_matches_shifted_two_term(self):
        for a, b in itertools.product(range(1, 7), repeat=2):
            for x, y in [(ZERO, ZERO), (F(1, 3), F(2, 5)), (F(1, 2), F(1, 2))]:
                scaled = check_cor42(1, a, b, x, y)
                plain = check_rademacher_rad(a, b, x, y)
                assert scaled.passed and plain.passed
                assert scaled.lhs == a * b * plain.lhs
                assert scaled.rhs == a * b * plain.rhs

    def test_cor42_matches_raw_kernel_law_off_lattice(self):
        # with x, y, ay+bx all non-integral both kernels agree term by term
        cases = [
            (0, 2, 3, F(1, 3), F(1, 4)),
            (1, 2, 3, F(1, 5), F(1, 7)),
            (3, 3, 4, F(1, 5), F(2, 7)),
            (4, 1, 2, F(1, 3), F(1, 5)),
        ]
        for n, a, b, x, y in cases:
            assert (a * y + b * x).denominator > 1
            assert x.denominator > 1 and y.denominator > 1
            scaled = check_cor42(n, a, b, x, y)
            raw = check_carlitz(n, a, b, x, y)
            assert scaled.passed and raw.passed
            assert scaled.lhs == raw.lhs
            assert scaled.rhs == raw.rhs


class TestDispatchAndReports:
    def test_run_case_round_trip(self):
        rep = run_case("thm31", {"m": 1, "n": 2, "a": 2, "b": -3,
                                 "x": F(1, 3), "y": ZERO, "z": F(1, 7)})
        assert rep.passed

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            run_case("nope", {})

    def test_missing_parameter(self):
        with pytest.raises(ValueError):
            run_case("dedekind", {"a": 2})

    def test_json_field_order_and_literals(self):
        rep = check_berndt(2, 3, 5, F(1, 2), F(1, 3), F(1, 7))
        data = json.loads(rep.to_json())
        assert list(data) == ["identity", "params", "lhs", "rhs", "residual",
                              "pass", "counter"]
        assert list(data["params"]) == ["a", "b", "c", "x", "y", "z"]
        assert data["params"]["x"] == "1/2"
        assert data["pass"] is True
        rep2 = check_dedekind(2, 3)
        data2 = json.loads(rep2.to_json())
        assert "counter" not in data2
        assert data2["lhs"] == "-1/18"

    def test_random_cases_respect_hypotheses(self):
        rng = random.Random(12345)
        for identity in IDENTITIES:
            for _ in range(25):
                rep = run_case(identity, random_case(identity, rng))
                assert rep.passed, identity

    def test_registry_covers_all_identities(self):
        assert sorted(IDENTITIES) == sorted([
            "dedekind", "rademacher3", "rademacher15", "eq319", "berndt",
            "apostol", "carlitz", "thm31", "cor32", "thm33", "cor34",
            "thm41", "cor42", "cor43", "thm44", "cor45",
        ])


class TestGateExactness:
    """Validators reject exactly their pre-clauses, nothing more."""

    def test_rejections_name_the_clause(self):
        violations = [
            ("dedekind", {"a": 0, "b": 3}, "a >= 1"),
            ("rademacher3", {"a": 2, "b": 3, "c": 0}, "c >= 1"),
            ("rademacher15", {"a": 4, "b": 6, "x": ZERO, "y": ZERO}, "gcd(a, b) = 1"),
            ("eq319", {"a": 2, "b": -3, "x": ZERO, "y": ZERO}, "b >= 1"),
            ("berndt", {"a": 1, "b": 1, "c": -2, "x": ZERO, "y": ZERO, "z": ZERO},
             "c >= 1"),
            ("apostol", {"n": -1, "a": 2, "b": 3}, "n >= 1"),
            ("carlitz", {"n": -1, "a": 2, "b": 3, "x": ZERO, "y": ZERO}, "n >= 0"),
            ("thm31", {"m": 1, "n": 0, "a": 1, "b": 2,
                       "x": ZERO, "y": ZERO, "z": ZERO}, "n >= 1"),
            ("cor32", {"m": 1, "n": 1, "a": 1, "b": 0, "x": ZERO, "y": ZERO},
             "b != 0"),
            ("thm33", {"m": 0, "n": 1, "a": 1, "b": 2,
                       "x": ZERO, "y": ZERO, "z": ZERO}, "m >= 1"),
            ("cor34", {"m": 1, "n": 1, "a": 0, "b": 2, "x": ZERO, "y": ZERO},
             "a != 0"),
            ("thm41", {"m": 1, "n": 1, "a": 1, "b": 1, "c": 0,
                       "x": ZERO, "y": ZERO, "z": ZERO}, "c != 0"),
            ("cor42", {"n": 1, "a": 1, "b": -2, "x": ZERO, "y": ZERO}, "b >= 1"),
            ("cor43", {"p": 3, "r": 0, "a": 1, "b": 0, "c": 1}, "b >= 1"),
            ("thm44", {"m": 1, "n": 1, "a": 0, "b": 1, "c": 1,
                       "x": ZERO, "y": ZERO, "z": ZERO}, "a != 0"),
            ("cor45", {"m": 0, "n": 1, "a": 1, "b": 1, "c": 1}, "m >= 1"),
        ]
        for identity, params, clause in violations:
            with pytest.raises(HypothesisError) as exc:
                run_case(identity, params)
            assert exc.value.clause == clause, identity
            assert exc.value.identity == identity

    def test_no_spurious_rejections(self):
        # boundary-legal tuples right next to each gate must be accepted
        assert run_case("dedekind", {"a": 1, "b": 1}).passed
        assert run_case("apostol", {"n": 1, "a": 1, "b": 1}).passed
        assert run_case("carlitz", {"n": 0, "a": 1, "b": 1,
                                    "x": ZERO, "y": ZERO}).passed
        assert run_case("cor42", {"n": 0, "a": 1, "b": 1,
                                  "x": ZERO, "y": ZERO}).passed
        assert run_case("cor43", {"p": 1, "r": 0, "a": 1, "b": 1, "c": 1}).passed
        assert run_case("thm31", {"m": 1, "n": 1, "a": -1, "b": -1,
                                  "x": ZERO, "y": ZERO, "z": ZERO}).passed
        # non-coprime pairs are fine wherever no gcd clause exists
        assert run_case("eq319", {"a": 6, "b": 9, "x": F(1, 2), "y": ZERO}).passed
        assert run_case("cor42", {"n": 3, "a": 4, "b": 6,
                                  "x": F(1, 3), "y": F(1, 5)}).passed
        assert run_case("cor45", {"m": 1, "n": 2, "a": 2, "b": 4, "c": 6}).passed
