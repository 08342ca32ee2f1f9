import random

import pytest

from freegrp.autos import (
    Cut,
    Endomorphism,
    InnerAut,
    as_endo,
    compose,
    enumerate_whitehead,
    identity_endo,
)
from freegrp.endo import (
    WitnessError,
    WitnessSpec,
    check_preserves_primitivity,
    enumerate_endomorphisms,
    find_appenders,
    is_automorphism,
    make_witness,
    minimal_witness_bounds,
    nielsen_reduce,
    parse_endo,
    render_endo,
    sweep_to_json,
    theorem_sweep,
)
from freegrp.minimize import is_primitive
from freegrp.words import all_reduced_words, empty_word, parse_word


def w(text, rank=3):
    return parse_word(text, rank)


class TestFindAppenders:
    def test_generator_image(self):
        gamma1, gamma2 = find_appenders(w("b"))
        assert gamma1 == Cut(frozenset({-1, 2}), -1)
        assert gamma2 is not None

    def test_x1_itself_has_none(self):
        # the multiplier's own generator is fixed by every cut move
        assert find_appenders(w("a")) == (None, None)

    def test_palindromic_word_has_none(self):
        gamma1, gamma2 = find_appenders(w("bab"))
        assert gamma1 is None

    def test_appenders_imply_cyclically_reduced(self):
        for u in all_reduced_words(3, 4):
            gamma1, gamma2 = find_appenders(u)
            if gamma1 is not None and gamma2 is not None:
                assert u.is_cyclically_reduced


class TestWitnessBounds:
    def test_minimal_pair_for_single_letters(self):
        assert minimal_witness_bounds(w("b"), w("c")) == (18, 124)

    def test_bound_is_strict(self):
        with pytest.raises(WitnessError, match="s >"):
            WitnessSpec("A", w("b"), w("c"), 17, 124)
        with pytest.raises(WitnessError, match="r >"):
            WitnessSpec("A", w("b"), w("c"), 18, 123)

    def test_u_must_avoid_x1_at_ends(self):
        with pytest.raises(WitnessError, match="begin or end"):
            WitnessSpec("A", w("ba"), w("c"), 50, 1000)

    def test_u_must_be_cyclically_reduced(self):
        with pytest.raises(WitnessError, match="cyclically"):
            WitnessSpec("A", w("bcB"), w("c"), 50, 1000)

    def test_kind_specific_reducedness(self):
        # VU not reduced: V ends with b^-1, U starts with b
        with pytest.raises(WitnessError, match="VU"):
            WitnessSpec("B", w("b"), w("cB"), 50, 2000)
        with pytest.raises(WitnessError, match="UV"):
            WitnessSpec("B'", w("b"), w("Bc"), 50, 2000)
        with pytest.raises(WitnessError, match="UVU"):
            WitnessSpec("C", w("b"), w("cB"), 50, 2000)

    def test_unknown_kind(self):
        with pytest.raises(WitnessError):
            WitnessSpec("D", w("b"), w("c"), 18, 124)


class TestMakeWitness:
    def test_kind_a_length(self):
        spec = WitnessSpec("A", w("b"), w("c"), 18, 124)
        word = make_witness(spec)
        # (2s+6)|U| + (2s+2)r + |V|
        assert len(word.letters) == 42 * 1 + 38 * 124 + 1 == 4755
        assert word.is_reduced

    def test_all_kinds_reduced_no_cancellation(self):
        for u_text, v_text in (("b", "c"), ("bc", "cb"), ("bcb", "c")):
            u, v = w(u_text), w(v_text)
            s, r = minimal_witness_bounds(u, v)
            for kind in ("A", "B", "B'", "C"):
                word = make_witness(WitnessSpec(kind, u, v, s, r))
                assert word.is_reduced
                assert len(word.letters) == word.reduced_length

    def test_cancellation_rejected(self):
        # V starting with x1^-1 cancels against the x1^r padding in kind A
        with pytest.raises(WitnessError, match="not reduced"):
            make_witness(WitnessSpec("A", w("b"), w("Ac"), 50, 2000))


class TestPreservation:
    def test_identity_preserves(self):
        report = check_preserves_primitivity(identity_endo(3), 3)
        assert report.preserves
        assert report.tested_count > 0

    def test_collapse_fails(self):
        phi = Endomorphism(3, (w("a"), w("a"), w("a")))
        report = check_preserves_primitivity(phi, 2)
        assert not report.preserves
        p, image = report.counterexample
        assert is_primitive(p)
        assert not is_primitive(image)

    def test_inner_preserves(self):
        report = check_preserves_primitivity(InnerAut(1).as_endo(3), 3)
        assert report.preserves

    def test_random_whitehead_compositions_preserve(self):
        rng = random.Random(7)
        descriptors = enumerate_whitehead(3)
        for _ in range(5):
            phi = identity_endo(3)
            for _ in range(3):
                phi = compose(as_endo(rng.choice(descriptors), 3), phi)
            assert check_preserves_primitivity(phi, 3).preserves

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            check_preserves_primitivity(identity_endo(3), 0)


class TestNielsenReduce:
    def test_carries_pair_to_basis(self):
        reduced = nielsen_reduce((parse_word("a", 2), parse_word("ab", 2)))
        assert reduced == (parse_word("a", 2), parse_word("b", 2))

    def test_basis_unchanged(self):
        basis = (w("a"), w("b"), w("c"))
        assert nielsen_reduce(basis) == basis

    def test_duplicate_collapses(self):
        reduced = nielsen_reduce((parse_word("a", 2), parse_word("a", 2)))
        assert empty_word(2) in reduced


class TestIsAutomorphism:
    def test_signed_permutation(self):
        phi = Endomorphism(3, (w("b"), w("a"), w("c")))
        assert is_automorphism(phi)

    def test_non_injective(self):
        phi = Endomorphism(3, (w("a"), w("a"), w("c")))
        assert not is_automorphism(phi)

    def test_elementary_transvection(self):
        phi = Endomorphism(3, (w("a"), w("ab"), w("c")))
        assert is_automorphism(phi)

    def test_conjugated_basis(self):
        phi = Endomorphism(3, (w("bAB"), w("b"), w("bcB")))
        assert is_automorphism(phi)

    def test_matches_nielsen_exhaustive_rank2(self):
        # raises internally on any disagreement between the two methods
        for phi in enumerate_endomorphisms(2, 2):
            is_automorphism(phi)

    def test_stable_under_whitehead_composition(self):
        phi = Endomorphism(3, (w("a"), w("ab"), w("c")))
        for d in enumerate_whitehead(3)[:20]:
            assert is_automorphism(compose(as_endo(d, 3), phi))


class TestSweep:
    def test_image_len_one(self):
        report = theorem_sweep(3, 1, 2, workers=1)
        assert report.total == 7**3
        # the preserving endomorphisms are exactly the 48 signed permutations
        assert len(report.preserving) == 48
        assert len(report.automorphisms) == 48
        assert {e.endo for e in report.preserving} == {e.endo for e in report.automorphisms}
        assert not report.unresolved_entries

    def test_rank2_sanity(self):
        report = theorem_sweep(2, 1, 1, workers=1)
        for entry in report.entries:
            if entry.automorphism:
                assert entry.counterexample is None

    def test_json_schema(self):
        report = theorem_sweep(2, 1, 1, workers=1)
        payload = sweep_to_json(report)
        assert set(payload) == {
            "params",
            "total",
            "preserving",
            "automorphisms",
            "unresolved",
            "counterexamples",
        }
        assert payload["total"] == 5**2
        for ctr in payload["counterexamples"]:
            assert set(ctr) == {"endo", "bound", "primitive", "image"}

    def test_bad_rank(self):
        with pytest.raises(ValueError):
            theorem_sweep(1, 1, 1)


class TestEndoText:
    def test_round_trip(self):
        phi = Endomorphism(3, (w("ab"), w("1"), w("Ca")))
        assert parse_endo(render_endo(phi), 3) == phi

    def test_arity_checked(self):
        with pytest.raises(ValueError):
            parse_endo("a,b", 3)

    def test_enumeration_order_deterministic(self):
        first = list(enumerate_endomorphisms(2, 1))[:3]
        assert [render_endo(phi) for phi in first] == ["1,1", "1,a", "1,A"]
