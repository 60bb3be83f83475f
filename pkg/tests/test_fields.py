import pytest

from fusiondescent.errors import InputError
from fusiondescent.fields import FieldClass, FieldKind


@pytest.mark.parametrize("text, kind", [
    ("real", FieldKind.REAL),
    ("Q", FieldKind.RATIONAL),
    ("Qp:7", FieldKind.PADIC),
    ("Fq:9", FieldKind.FINITE),
    ("algclosed0", FieldKind.ALG_CLOSED_CHAR0),
    ("funcfield:2", FieldKind.FUNCTION_FIELD),
    ("Q+zeta3", FieldKind.RATIONAL),
])
def test_parse_and_print(text, kind):
    K = FieldClass.parse(text)
    assert K.kind is kind
    assert str(K) == text


@pytest.mark.parametrize("text", ["Qp:6", "Fq:6", "Fq:1", "funcfield:0", "bogus",
                                  "Q+eta3", "Qp:x", "real:3", "Q+zeta"])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        FieldClass.parse(text)


def test_characteristic():
    assert FieldClass.finite(9).characteristic == 3
    assert FieldClass.finite(8).characteristic == 2
    assert FieldClass.padic(5).characteristic == 0
    assert FieldClass.real().characteristic == 0


@pytest.mark.parametrize("K, n, expected", [
    (FieldClass.padic(7), 3, True),
    (FieldClass.padic(5), 3, False),
    (FieldClass.padic(3), 3, False),
    (FieldClass.finite(9), 4, True),
    (FieldClass.finite(8), 2, False),
    (FieldClass.finite(8), 7, True),
    (FieldClass.real(), 2, True),
    (FieldClass.real(), 3, False),
    (FieldClass.rational(), 5, False),
    (FieldClass.parse("Q+zeta5"), 5, True),
    (FieldClass.algebraically_closed(), 11, True),
    (FieldClass.function_field(1), 3, True),
])
def test_roots_of_unity(K, n, expected):
    assert K.contains_roots_of_unity(n) is expected


def test_assumed_roots_are_sorted_and_unique():
    K = FieldClass.parse("Q+zeta5+zeta3+zeta5")
    assert K.assumed_roots == (3, 5)
    assert str(K) == "Q+zeta3+zeta5"
