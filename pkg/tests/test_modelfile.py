"""Model file parsing, canonical printing and error locations."""

import pytest

from liedouble.poly import Polynomial, ONE
from liedouble.modelfile import ModelError, parse_model, print_model
from liedouble.algebroid import check_axioms
from liedouble.matched_pair import check_matched_pair

DEMO = """
# matched pair of aff(1) with an abelian rank-2 complement
algebroid A { base; rank 2; bracket [1,2] = e2; }
algebroid B { base; rank 2; }
rep rho A on B { e1 = [[1,0],[0,0]]; e2 = [[0,1],[0,0]]; }
rep sigma B on A { }
matchedpair MP { A = A; B = B; rho = rho; sigma = sigma; }

algebroid T { base x; rank 1; anchor [1] = 1; }
poisson P { vars x y; pi [x,y] = x^2 + 1/2; }
dvb D { dims 2 1 2; sign minus; }
"""


def test_parse_demo_and_check():
    model = parse_model(DEMO)
    assert model.kind_of("MP") == "matchedpair"
    assert check_matched_pair(model.objects["MP"]).passed
    assert check_axioms(model.objects["T"]).passed
    x = Polynomial.var("x")
    assert model.objects["P"].pi("x", "y") == x * x + Polynomial.const("1/2")


def test_print_parse_fixed_point():
    model = parse_model(DEMO)
    text1 = print_model(model)
    model2 = parse_model(text1)
    assert model2 == model
    assert print_model(model2) == text1


def test_rational_coefficients_and_powers():
    m = parse_model("algebroid A { base x; rank 1; anchor [1] = 2/3*x^2 - x; }")
    x = Polynomial.var("x")
    from fractions import Fraction
    assert m.objects["A"].anchor[0][0] == Fraction(2, 3) * x * x - x


@pytest.mark.parametrize("text,fragment,line", [
    ("algebroid A { base; rank 2; bracket [1,3] = e1; }", "out of range", 1),
    ("algebroid A { base; rank 1; }\nrep r A on Q { }", "unresolved reference", 2),
    ("poisson P { vars x; pi [x,x] = 1/0; }", "zero denominator", 1),
    ("algebroid A { base; rank 1; bracket [1,1] = e1*e1; }", "linear in frame", 1),
    ("widget W { }", "unknown declaration", 1),
])
def test_errors_carry_location(text, fragment, line):
    with pytest.raises(ModelError) as exc:
        parse_model(text)
    assert fragment in str(exc.value)
    assert exc.value.line == line


def test_nonsection_bracket_value_rejected():
    with pytest.raises(ModelError, match="non-section part"):
        parse_model("algebroid A { base x; rank 1; bracket [1,1] = x; }")


def test_comments_and_whitespace_ignored():
    m = parse_model("# leading comment\nalgebroid A{base;rank 1;} # trailing")
    assert m.objects["A"].rank == 1
