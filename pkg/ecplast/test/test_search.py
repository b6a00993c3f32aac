import pytest

import ecplast.core as core
import ecplast.bounds as bounds
import ecplast.search as search
import ecplast.separation as separation
import ecplast.constructions as constructions

from fractions import Fraction
from itertools import product
from ecplast.eptypes import PointMap, MonotoneGauge
from ecplast.eptypes import ALL_MAPS, BIJECTIONS, NONCONTRACTIVE_MAPS
from ecplast.eptypes import NONCONTRACTIVE_BIJECTIONS, NONEXPANSIVE_SURJECTIONS
from ecplast.eptypes import VALUE, NOT_PLASTIC, VACUOUS
from ecplast.test.test import getEquilateral, getLine, getRandomSpace
from ecplast.test.test import getRandomPair, naiveMargins, naiveModulus


class TestMapEnumeration:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def tables(self, X, Y, map_class):
        ret = search.iter_maps(X, Y, map_class)
        assert ret.ok
        return list(ret.data)

    def test_counts(self):
        X = getEquilateral(3)
        Y = getEquilateral(2)
        assert len(self.tables(X, X, ALL_MAPS)) == 27
        assert len(self.tables(X, X, BIJECTIONS)) == 6
        assert len(self.tables(X, X, NONCONTRACTIVE_MAPS)) == 6
        assert len(self.tables(X, Y, NONEXPANSIVE_SURJECTIONS)) == 6
        assert len(self.tables(X, Y, BIJECTIONS)) == 0
        assert len(self.tables(Y, X, NONEXPANSIVE_SURJECTIONS)) == 0
        assert not search.iter_maps(X, Y, 'foo').ok

    def test_single_point_domain(self):
        Z = core.makeSpace(['z'], [[0]]).data
        X = getEquilateral(3)
        out = self.tables(Z, X, ALL_MAPS)
        assert out == [((0, ), 0, 0), ((1, ), 0, 0), ((2, ), 0, 0)]

    @pytest.mark.parametrize('seed', range(5))
    def test_oracle(self, seed):
        """
        Every class is exactly the filtered set of all maps.
        """
        X, Y = getRandomPair(3, seed)
        everything = {}
        for table in product(range(3), repeat=3):
            everything[table] = naiveMargins(X, Y, table)

        out = self.tables(X, Y, ALL_MAPS)
        assert [_[0] for _ in out] == sorted(everything)
        for table, E, C in out:
            assert (E, C) == everything[table]

        expected = {
            BIJECTIONS: [t for t in everything if len(set(t)) == 3],
            NONCONTRACTIVE_MAPS: [t for t, (E, C) in everything.items() if C <= 0],
            NONCONTRACTIVE_BIJECTIONS: [t for t, (E, C) in everything.items()
                                        if C <= 0 and len(set(t)) == 3],
            NONEXPANSIVE_SURJECTIONS: [t for t, (E, C) in everything.items()
                                       if E <= 0 and len(set(t)) == 3],
        }
        for map_class, tables in expected.items():
            assert [_[0] for _ in self.tables(X, Y, map_class)] == sorted(tables)


class TestModulus:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('seed', range(20))
    def test_oracle(self, seed):
        """
        The pruned search agrees with the enumeration of all 27 maps and
        all 6 bijections.
        """
        X, Y = getRandomPair(3, seed)
        for eps in (Fraction(1, 12), Fraction(1, 4), Fraction(1, 2)):
            for map_class, bijective in ((ALL_MAPS, False), (BIJECTIONS, True)):
                rep = search.exact_modulus(X, Y, eps, map_class).data
                naive = naiveModulus(X, Y, eps, bijective)
                assert rep.eps == eps
                assert rep.maps_checked == (6 if bijective else 27)
                if naive is None:
                    assert rep.verdict == VACUOUS
                    assert rep.value is None and rep.minimizing_map is None
                elif naive <= 0:
                    assert rep.verdict == NOT_PLASTIC
                    assert rep.value == 0
                else:
                    assert rep.verdict == VALUE
                    assert rep.value == naive

                # The witnesses belong to the minimising map.
                if rep.minimizing_map is not None:
                    tmp = core.margins(rep.minimizing_map).data
                    assert tmp.expansion > eps
                    assert tmp.expansion_pair == rep.expansion_witness
                    assert tmp.contraction_pair == rep.contraction_witness

    def test_workers(self):
        """
        The report does not depend on the number of workers.
        """
        X, Y = getRandomPair(4, 7)
        for eps in (Fraction(1, 12), Fraction(1, 3)):
            for map_class in (ALL_MAPS, BIJECTIONS):
                serial = search.exact_modulus(X, Y, eps, map_class, workers=1).data
                parallel = search.exact_modulus(X, Y, eps, map_class, workers=2).data
                assert serial == parallel

    def test_invalid(self):
        X = getEquilateral(3)
        assert not search.exact_modulus(X, X, 0).ok
        assert not search.exact_modulus(X, X, 0.5).ok
        assert not search.exact_modulus(X, X, 1, NONCONTRACTIVE_MAPS).ok
        Z = core.makeSpace(['z'], [[0]]).data
        assert not search.exact_modulus(Z, Z, 1).ok

        # No bijections between spaces of different size.
        rep = search.exact_modulus(X, getEquilateral(2), 1).data
        assert rep.verdict == VACUOUS and rep.maps_checked == 0

    def test_not_plastic(self):
        # Doubling all distances expands without contracting anything.
        X = getEquilateral(3)
        Y = getEquilateral(3, 2)
        rep = search.exact_modulus(X, Y, Fraction(1, 2)).data
        assert rep.verdict == NOT_PLASTIC
        assert rep.value == 0
        assert rep.minimizing_map.table == (0, 1, 2)

    @pytest.mark.parametrize('N, lo, hi', [(5, Fraction(99, 500), Fraction(1, 5)),
                                           (7, Fraction(99, 1100), Fraction(1, 11))])
    def test_sharp_example(self, N, lo, hi):
        """
        The orbit bound is sharp up to the level margin.
        """
        X, f = constructions.sharp_case1(N, 1, 1).data
        assert core.margins(f).data.contraction == hi
        eps = Fraction(99, 100)
        rep = search.exact_modulus(X, X, eps, BIJECTIONS).data
        assert rep.verdict == VALUE
        assert lo <= rep.value <= hi
        assert bounds.bound_orbit(N, eps).data == lo

    @pytest.mark.parametrize('seed', range(100))
    def test_pair_sum_property(self, seed):
        """
        If sigma(Y) <= sigma(X) no bijection expands without a contraction
        of at least eps/5.
        """
        X, Y = getRandomPair(4, seed)
        if core.sigma(Y, range(4)).data > core.sigma(X, range(4)).data:
            X, Y = Y, X
        for eps in (Fraction(1, 12), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            rep = search.exact_modulus(X, Y, eps, BIJECTIONS).data
            assert rep.verdict != NOT_PLASTIC
            if rep.verdict == VALUE:
                assert rep.value >= eps / 5

            report = search.verify_pair_sum_theorem(X, Y, eps).data
            assert report.applicable and report.passed

    @pytest.mark.parametrize('seed', range(20))
    def test_monotone_in_eps(self, seed):
        """
        Raising eps shrinks the admissible maps, so the verdicts run through
        NOT_PLASTIC, VALUE and VACUOUS in this order and the value never
        decreases.
        """
        rank = {NOT_PLASTIC: 0, VALUE: 1, VACUOUS: 2}
        X, Y = getRandomPair(4, seed)
        for map_class in (ALL_MAPS, BIJECTIONS):
            prev = None
            for k in range(1, 13):
                rep = search.exact_modulus(X, Y, Fraction(k, 12), map_class).data
                if rep.verdict == NOT_PLASTIC:
                    assert rep.value == 0
                if prev is not None:
                    assert rank[prev.verdict] <= rank[rep.verdict]
                    if rep.verdict != VACUOUS:
                        assert prev.value <= rep.value
                prev = rep

            # Distances lie in [1, 2], so no map expands a pair by more than 1.
            assert prev.verdict == VACUOUS

    @pytest.mark.parametrize('seed', range(50))
    def test_nitka_property(self, seed):
        X = getRandomSpace(4, seed)
        for eps in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            rep = search.exact_modulus(X, X, eps, ALL_MAPS).data
            assert rep.verdict in (VALUE, VACUOUS)
            if rep.verdict == VALUE:
                assert rep.value >= bounds.nitka_bound(X, eps).data


class TestPlasticity:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_ec_plastic(self):
        X = getEquilateral(3)
        Y = getEquilateral(3, 2)
        verdict = search.is_ec_plastic(X, Y).data
        assert not verdict.plastic
        assert core.classify(verdict.counterexample).data.expansion

        assert search.is_ec_plastic(X, X).data.plastic
        verdict = search.is_ec_plastic(X, getEquilateral(2)).data
        assert verdict.plastic and verdict.note == 'no bijections'

    def test_strongly_plastic(self):
        X = getEquilateral(3)
        Y = getEquilateral(4, 2)
        verdict = search.is_strongly_plastic(X, Y).data
        assert not verdict.plastic
        assert verdict.counterexample.table == (0, 1, 2)

        assert search.is_strongly_plastic(X, X).data.plastic
        verdict = search.is_strongly_plastic(X, getEquilateral(2, 5)).data
        assert verdict.plastic and verdict.note == 'every map glues a pair'

    def test_proper_measurement(self):
        X = getEquilateral(4)
        Y = getEquilateral(4, 2)
        rep = search.proper_measurement_check([X, Y]).data
        assert rep.pairs_checked == 4
        assert rep.expansions == ((0, 1), )
        assert rep.violations == ()

        # A measurement that decreases along expansions.
        rep = search.proper_measurement_check(
            [X, Y], lambda space: -core.sigma(space, range(space.size)).data).data
        assert rep.violations == ((0, 1), )

        assert not search.proper_measurement_check([]).ok
        assert not search.proper_measurement_check([X, getEquilateral(3)]).ok
        assert not search.proper_measurement_check([X], psi='foo').ok

    @pytest.mark.parametrize('psi', [None, MonotoneGauge('power', 2),
                                     MonotoneGauge('power', 3)])
    def test_proper_measurement_catalog(self, psi):
        catalog = [getRandomSpace(4, seed) for seed in range(30)]
        rep = search.proper_measurement_check(catalog, psi).data
        assert rep.pairs_checked == 900
        assert rep.violations == ()

    def test_orbit_period(self):
        X = getLine(range(5))
        f = PointMap(X, X, [1, 0, 3, 4, 2])
        assert search.orbit_period(f, 0, 2).data == 6
        assert search.orbit_period(f, 0, 1).data == 2
        assert search.orbit_period(f, 3, 3).data == 3
        assert not search.orbit_period(PointMap(X, X, [0, 0, 1, 2, 3]), 0, 1).ok
        assert not search.orbit_period(f, 0, 7).ok
        Y = getLine(range(6))
        assert not search.orbit_period(PointMap(X, Y, [1, 0, 3, 4, 2]), 0, 1).ok


class TestVerifiers:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def pairs(self, count):
        """
        Return random pairs plus pairs that satisfy the profile hypotheses:
        (X, X) and (X, three point subspace of X).
        """
        out = []
        for seed in range(count):
            X, Y = getRandomPair(4, seed)
            out.append((X, Y))
            out.append((X, X))
            out.append((X, core.subspace(X, [0, 1, 2]).data))
        return out

    def test_s_comparison(self):
        applicable = 0
        for X, Y in self.pairs(50):
            rep = search.verify_s_comparison_plasticity(X, Y).data
            if rep.applicable:
                applicable += 1
                assert rep.passed
            else:
                assert 'failed_at' in rep.details
        assert applicable >= 100

    def test_surjection_theorem(self):
        applicable = 0
        for X, Y in self.pairs(50):
            rep = search.verify_surjection_theorem(X, Y).data
            if rep.applicable:
                applicable += 1
                assert rep.passed
        assert applicable >= 50

    def test_separation_gap(self):
        X = getRandomSpace(4, 3)
        rep = search.verify_separation_gap_theorem(X, X).data
        assert rep.applicable and rep.passed

    def test_separated_image_lemma(self):
        X = getEquilateral(3)
        f = core.identity_map(X).data
        rep = search.verify_separated_image_lemma(X, X, 1, f, [0, 1, 2]).data
        assert rep.applicable and rep.passed
        assert rep.details['image'] == (0, 1, 2)

        rep = search.verify_separated_image_lemma(X, X, 1, f, [0]).data
        assert not rep.applicable

        # Contracting maps are outside the hypothesis.
        g = PointMap(X, X, [0, 0, 1])
        assert not search.verify_separated_image_lemma(X, X, 1, g, [0, 1]).data.applicable

    @pytest.mark.parametrize('seed', range(10))
    def test_separated_image_lemma_random(self, seed):
        """
        Every noncontractive self map sends an optimal separated set onto a
        maximal separated set.
        """
        X = getRandomSpace(5, seed)
        applicable = 0
        for eps in X.distances():
            A = separation.s_max(X, eps).data[1]
            for table, E, C in search.iter_maps(X, X, NONCONTRACTIVE_MAPS).data:
                f = PointMap(X, X, table)
                rep = search.verify_separated_image_lemma(X, X, eps, f, A).data
                if len(A) >= 2:
                    assert rep.applicable
                if rep.applicable:
                    applicable += 1
                    assert rep.passed
                    assert separation.is_maximal_separated(
                        X, rep.details['image'], eps).data

        # At least the identity at every level up to the diameter.
        assert applicable >= len(X.distances())

    @pytest.mark.parametrize('seed', range(10))
    def test_orbit_and_equivalence(self, seed):
        X, Y = getRandomPair(4, seed)
        rep = search.verify_orbit_theorem(X, Fraction(1, 4)).data
        assert rep.applicable and rep.passed
        rep = search.verify_ec_strong_equivalence(X, Y).data
        assert rep.applicable and rep.passed
        rep = search.proper_measurement_remark(X, X).data
        assert rep.applicable and rep.passed

    def test_orbit_theorem_sharp(self):
        X, f = constructions.sharp_case1(5, 1, 1).data
        rep = search.verify_orbit_theorem(X, Fraction(99, 100)).data
        assert rep.applicable and rep.passed
        assert rep.checked > 0

    def test_contraction_certificate(self):
        X, f = constructions.sharp_case1(5, 1, 1).data
        rep = search.verify_contraction_certificate(X, X, 1, Fraction(1, 5)).data
        assert rep.passed
        assert rep.details['min_contraction'] == Fraction(1, 5)

        rep = search.verify_contraction_certificate(X, X, 1, Fraction(1, 2)).data
        assert not rep.passed
        assert core.margins(rep.counterexample).data.expansion >= 1

        # Strict expansion: no map expands by more than the largest gap.
        rep = search.verify_contraction_certificate(X, X, 1, 5, strict=True).data
        assert rep.passed and rep.details['min_contraction'] is None
