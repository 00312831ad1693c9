import pytest
from hypothesis import given
from hypothesis import strategies as st

from relcalc.errors import NotAdditive, OutOfRange, UnknownHypothesis, WholeFrame
from relcalc.evidence import Frame, make_mass, vacuous
from relcalc.opinion import (
    DOGMATIC,
    FALSE,
    TRUE,
    UNCERTAIN,
    VACUOUS,
    Opinion,
    classify_opinion,
    complement,
    make_opinion,
    opinion_from_mass,
    projection,
)

FH = Frame(("FRIENDLY", "HOSTILE"))
SURVEY = make_mass(FH, [("FRIENDLY", 0.2), ("HOSTILE", 0.5), (("FRIENDLY", "HOSTILE"), 0.3)])


@st.composite
def opinions(draw):
    b = draw(st.floats(0, 1))
    d = draw(st.floats(0, 1 - b))
    return Opinion(b, d, max(0.0, 1 - b - d), draw(st.floats(0, 1)))


def _close(o, expected):
    assert (o.b, o.d, o.u, o.a) == pytest.approx(expected, abs=1e-12)


class TestConstruction:
    def test_true_false(self):
        assert classify_opinion(make_opinion(1, 0, 0, 0.5)) == {TRUE, DOGMATIC}
        assert classify_opinion(make_opinion(0, 1, 0, 0.5)) == {FALSE, DOGMATIC}

    def test_not_additive(self):
        with pytest.raises(NotAdditive):
            make_opinion(0.5, 0.6, 0.2, 0.5)

    @pytest.mark.parametrize("args", [(1.2, -0.2, 0, 0.5), (0.5, 0.5, 0, 1.5), (True, 0, 0, 0.5)])
    def test_out_of_range(self, args):
        with pytest.raises(OutOfRange):
            make_opinion(*args)

    def test_json_round_trip(self):
        o = Opinion(0.2, 0.5, 0.3, 0.5)
        assert o.to_json() == {"b": 0.2, "d": 0.5, "u": 0.3, "a": 0.5}
        assert Opinion.from_json(o.to_json()) == o


class TestClassify:
    @pytest.mark.parametrize(
        "o, flags",
        [
            ((0, 0, 1, 0.3), {UNCERTAIN, VACUOUS}),
            ((0.7, 0.3, 0, 0.5), {DOGMATIC}),
            ((0.2, 0.5, 0.3, 0.5), {UNCERTAIN}),
        ],
    )
    def test_cases(self, o, flags):
        assert classify_opinion(Opinion(*o)) == flags


class TestProjection:
    def test_examples(self):
        assert projection(Opinion(0.2, 0.5, 0.3, 0.5)) == pytest.approx(0.35, abs=1e-12)
        assert projection(Opinion(0.7, 0.3, 0.0, 0.9)) == pytest.approx(0.7)
        assert projection(Opinion(0, 0, 1, 0.25)) == pytest.approx(0.25)

    @given(opinions())
    def test_within_belief_and_plausibility(self, o):
        assert o.b - 1e-12 <= projection(o) <= o.b + o.u + 1e-12

    @given(opinions(), st.floats(0, 1))
    def test_monotone_in_base_rate(self, o, a2):
        other = Opinion(o.b, o.d, o.u, a2)
        if a2 >= o.a:
            assert projection(other) >= projection(o) - 1e-12

    @given(opinions(), st.floats(0, 1))
    def test_monotone_in_belief(self, o, shift):
        # move mass from uncertainty to belief at fixed d
        delta = shift * o.u
        more = Opinion(o.b + delta, o.d, o.u - delta, o.a)
        assert projection(more) >= projection(o) - 1e-12


class TestComplement:
    def test_examples(self):
        _close(complement(Opinion(1, 0, 0, 0.5)), (0, 1, 0, 0.5))
        _close(complement(Opinion(0.2, 0.5, 0.3, 0.5)), (0.5, 0.2, 0.3, 0.5))

    @given(opinions())
    def test_involution_and_projection(self, o):
        c = complement(o)
        _close(complement(c), (o.b, o.d, o.u, o.a))
        assert projection(c) == pytest.approx(1 - projection(o), abs=1e-12)
        assert c.b + c.d + c.u == pytest.approx(1.0, abs=1e-9)


class TestFromMass:
    def test_survey_example(self):
        _close(opinion_from_mass(SURVEY, "FRIENDLY", 0.5), (0.2, 0.5, 0.3, 0.5))
        _close(opinion_from_mass(SURVEY, "HOSTILE"), (0.5, 0.2, 0.3, 0.5))

    def test_vacuous_and_dogmatic(self):
        _close(opinion_from_mass(vacuous(FH), "HOSTILE", 0.4), (0, 0, 1, 0.4))
        _close(opinion_from_mass(make_mass(FH, {"FRIENDLY": 1}), "FRIENDLY", 0.5), (1, 0, 0, 0.5))

    def test_default_base_rate_is_uniform(self):
        f3 = Frame(("HOSTILE", "NEUTRAL", "FRIENDLY"))
        assert opinion_from_mass(vacuous(f3), "NEUTRAL").a == pytest.approx(1 / 3)

    def test_errors(self):
        with pytest.raises(WholeFrame):
            opinion_from_mass(SURVEY, ("FRIENDLY", "HOSTILE"))
        with pytest.raises(UnknownHypothesis):
            opinion_from_mass(SURVEY, "ALLY")
        with pytest.raises(UnknownHypothesis):
            opinion_from_mass(SURVEY, ())
