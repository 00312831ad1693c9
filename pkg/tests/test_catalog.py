import dataclasses
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relcalc import algebra, formats
from relcalc.algebra import STANCES, RelationStance, WeightConfig
from relcalc.catalog import (
    Assessment,
    Dossier,
    PropertyCatalog,
    PropertyDef,
    Status,
    assemble_masses,
    contributions,
    default_catalog,
    effective_value,
    evaluate_dossier,
)
from relcalc.errors import MassOverflow, OutOfRange, UnknownProperty, ValidationError

H, N, F = RelationStance.HOSTILE, RelationStance.NEUTRAL, RelationStance.FRIENDLY
W = WeightConfig(0.40, 0.20, 0.40)


def dossier(*assessments, subject="USA", obj="IRN"):
    return Dossier("tester", subject, obj, tuple(Assessment(*a) for a in assessments), (1999, 2014))


USA_IRN = dossier(
    (H, "P2"), (H, "P3"), (H, "P4"), (H, "P5"), (H, "P6"), (N, "P1"), (N, "P2", Status.TOGGLED),
)
USA_IND = dossier(
    (H, "P2"), (H, "P3"), (H, "P6"),
    (N, "P1"), (N, "P2", Status.TOGGLED), (N, "P3"),
    (F, "P4", Status.ENABLED, 0.125), (F, "P5"), (F, "P6", Status.ENABLED, 0.05),
    obj="IND",
)


class TestDefaultCatalog:
    def test_values(self):
        c = default_catalog()
        assert [p.value for p in c.by_stance(F)] == [0.5, 0.2, 0.1, 0.1, 0.075, 0.025]
        assert [p.value for p in c.by_stance(N)] == [0.25, 0.35, 0.40]
        assert [p.value for p in c.by_stance(H)] == [0.5, 0.2, 0.075, 0.125, 0.05, 0.05]

    def test_descriptions(self):
        c = default_catalog()
        assert c.get(H, "P1").description.lower().startswith("war enemy")
        assert c.get(N, "P3").description.startswith("Diplomatic mission")

    @pytest.mark.parametrize("stance", STANCES)
    def test_stance_totals(self, stance):
        assert math.fsum(p.value for p in default_catalog().by_stance(stance)) == pytest.approx(1.0, abs=1e-12)

    def test_unknown(self):
        with pytest.raises(UnknownProperty):
            default_catalog().get(N, "P4")

    def test_invariants(self):
        with pytest.raises(ValidationError):
            PropertyCatalog((PropertyDef("P1", H, 0.6), PropertyDef("P2", H, 0.6)))
        with pytest.raises(ValidationError):
            PropertyCatalog((PropertyDef("P1", H, 0.1), PropertyDef("P1", H, 0.2)))
        with pytest.raises(OutOfRange):
            PropertyDef("P1", H, 1.1)


class TestEffectiveValue:
    P = PropertyDef("P2", N, 0.35)

    def test_toggled_halves(self):
        assert effective_value(self.P, Assessment(N, "P2", Status.TOGGLED)) == pytest.approx(0.175)

    def test_disabled_and_enabled(self):
        assert effective_value(self.P, Assessment(N, "P2", Status.DISABLED)) == 0.0
        assert effective_value(PropertyDef("P1", H, 0.5), Assessment(H, "P1")) == 0.5
        assert effective_value(self.P, None) == 0.0

    def test_override(self):
        assert effective_value(self.P, Assessment(N, "P2", Status.TOGGLED, 0.2)) == pytest.approx(0.1)
        with pytest.raises(OutOfRange):
            Assessment(N, "P2", Status.ENABLED, 1.5)


class TestDossier:
    def test_nation_codes(self):
        with pytest.raises(ValidationError):
            dossier(subject="usa")
        with pytest.raises(ValidationError):
            dossier(obj="")

    def test_period_order(self):
        with pytest.raises(ValidationError):
            Dossier("x", "USA", "IRN", (), (2014, 1999))

    def test_duplicate_assessment(self):
        with pytest.raises(ValidationError):
            dossier((H, "P1"), (H, "P1", Status.TOGGLED))

    def test_unknown_property(self):
        with pytest.raises(UnknownProperty):
            evaluate_dossier(dossier((N, "P9")), default_catalog(), W)


class TestAssemble:
    def test_usa_irn(self):
        m = assemble_masses(USA_IRN, default_catalog())
        assert m.as_tuple() == pytest.approx((0.50, 0.425, 0.0), abs=1e-12)

    def test_usa_ind(self):
        m = assemble_masses(USA_IND, default_catalog())
        assert m.as_tuple() == pytest.approx((0.325, 0.825, 0.25), abs=1e-12)

    def test_empty(self):
        assert assemble_masses(dossier(), default_catalog()).as_tuple() == (0.0, 0.0, 0.0)

    def test_override_overflow(self):
        d = dossier((H, "P1", Status.ENABLED, 0.9), (H, "P2", Status.ENABLED, 0.9))
        with pytest.raises(MassOverflow):
            assemble_masses(d, default_catalog())


class TestEvaluate:
    def test_usa_irn(self):
        p = evaluate_dossier(USA_IRN, default_catalog(), W)
        assert p.t_mass == pytest.approx(-0.115, abs=1e-12)
        assert p.strength == pytest.approx(0.285, abs=1e-12)
        assert p.stance is H

    def test_usa_ind(self):
        p = evaluate_dossier(USA_IND, default_catalog(), W)
        assert (p.t_mass, p.strength) == pytest.approx((0.135, 0.395), abs=1e-12)
        assert p.stance is N
        assert p.fragile

    def test_reflexive(self):
        p = evaluate_dossier(dossier((H, "P1"), obj="USA"), default_catalog(), W)
        assert p.stance is F
        assert p.t_mass == pytest.approx(0.6, abs=1e-12)
        assert p.notes == (algebra.NOTE_REFLEXIVE,)

    def test_undefined(self):
        for d in (dossier(), dossier((H, "P1", Status.DISABLED))):
            p = evaluate_dossier(d, default_catalog(), W)
            assert p.stance is None
            assert p.stance_label == "Undefined"
            assert p.t_mass == 0.0

    def test_symmetric(self):
        c = default_catalog()
        assert evaluate_dossier(USA_IND, c, W) == evaluate_dossier(USA_IND.swapped(), c, W)

    def test_contributions_sum_to_t_mass(self):
        c = default_catalog()
        for d in (USA_IRN, USA_IND, dossier(obj="USA"), dossier()):
            rows = contributions(d, c, W)
            assert math.fsum(r.contribution for r in rows) == pytest.approx(
                evaluate_dossier(d, c, W).t_mass, abs=1e-9)

    @pytest.mark.parametrize("index", range(len(USA_IND.assessments)))
    def test_disabling_moves_by_its_contribution(self, index):
        c = default_catalog()
        base = evaluate_dossier(USA_IND, c, W)
        a = USA_IND.assessments[index]
        changed = list(USA_IND.assessments)
        changed[index] = dataclasses.replace(a, status=Status.DISABLED)
        after = evaluate_dossier(dataclasses.replace(USA_IND, assessments=tuple(changed)), c, W)
        p = c.get(a.stance, a.property_id)
        sign = -1 if a.stance is H else 1
        weight = W.as_tuple()[STANCES.index(a.stance)]
        assert base.t_mass - after.t_mass == pytest.approx(sign * weight * effective_value(p, a), abs=1e-12)


@st.composite
def random_dossiers(draw):
    c = default_catalog()
    picks = draw(st.lists(st.sampled_from(c.properties), unique=True))
    statuses = draw(st.lists(st.sampled_from(list(Status)), min_size=len(picks), max_size=len(picks)))
    return Dossier("h", "AAA", "BBB", tuple(Assessment(p.stance, p.id, s) for p, s in zip(picks, statuses)))


@given(random_dossiers())
def test_masses_never_overflow_with_valid_catalog(d):
    m = assemble_masses(d, default_catalog())
    assert all(0 <= x <= 1 + 1e-9 for x in m.as_tuple())
    rep = formats.build_report(d, default_catalog(), formats.RunConfig())
    assert math.fsum(x.contribution for x in rep.contributions) == pytest.approx(rep.t_mass, abs=1e-9)
