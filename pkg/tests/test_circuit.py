import pytest
from hypothesis import given, strategies as st

from bladesim import Circuit, GateOp, ParseError, parse, random_clifford_circuit, serialize
from corpus import INVALID_FILES, VALID_FILES


def test_parse_basic():
    c = parse("qubits 2\nh 0\ncnot 0 1")
    assert c.n == 2
    assert c.ops == (GateOp("h", (0,)), GateOp("cnot", (0, 1)))
    assert c.creg == 0


def test_parse_measure_slots():
    c = parse("qubits 2\nmeasure 0\nmeasure 1\n")
    assert [op.slot for op in c.ops] == [0, 1]
    assert c.creg == 2
    c = parse("qubits 2\nmeasure 0 -> 3\nmeasure 1\n")
    assert [op.slot for op in c.ops] == [3, 4]
    assert c.creg == 5
    c = parse("qubits 1\nmeasure 0 -> 0\nmeasure 0 -> 0\n")
    assert c.creg == 1


def test_parse_error_positions():
    with pytest.raises(ParseError) as e:
        parse("qubits 1\ncnot 0 0")
    assert e.value.line == 2
    with pytest.raises(ParseError) as e:
        parse("qubits 2\nh 5")
    assert e.value.line == 2 and e.value.token == "5"
    with pytest.raises(ParseError) as e:
        parse("qubits 2\n  frobnicate 1")
    assert (e.value.line, e.value.column) == (2, 3)


def test_valid_corpus_round_trips():
    assert len(VALID_FILES) >= 20
    for source in VALID_FILES:
        c = parse(source)
        again = parse(serialize(c))
        assert again == c, source
        # canonical form is a fixed point
        assert serialize(again) == serialize(c)


def test_invalid_corpus_positions():
    assert len(INVALID_FILES) >= 15
    for source, line in INVALID_FILES:
        with pytest.raises(ParseError) as e:
            parse(source)
        assert e.value.line == line, (source, e.value)
        assert e.value.column >= 1


def test_serialize_canonical_form():
    c = parse("qubits 2\nh 0\nmeasure 0\n")
    assert serialize(c) == "qubits 2\nh 0\nmeasure 0 -> 0\n"
    assert serialize(Circuit(3)) == "qubits 3\n"


def test_crlf_accepted_lf_emitted():
    c = parse("qubits 2\r\nh 0\r\n")
    assert "\r" not in serialize(c)
    assert c.ops == (GateOp("h", (0,)),)


@st.composite
def circuits(draw):
    n = draw(st.integers(1, 6))
    depth = draw(st.integers(0, 12))
    seed = draw(st.integers(0, 10_000))
    prob = draw(st.sampled_from([0.0, 0.2, 0.5]))
    return random_clifford_circuit(
        n, depth, seed=seed, gate_kinds=("h", "s", "sdg", "x", "y", "z", "cnot", "cz", "swap"),
        measure_prob=prob,
    )


@given(circuits())
def test_round_trip_random_circuits(c):
    assert parse(serialize(c)) == c


def test_random_circuit_reproducible():
    a = random_clifford_circuit(4, 30, seed=9, measure_prob=0.25)
    b = random_clifford_circuit(4, 30, seed=9, measure_prob=0.25)
    assert a == b
    assert all(op.qubits[0] < 4 for op in a.ops)


def test_parse_error_str_is_informative():
    try:
        parse("qubits 2\nh x")
    except ParseError as e:
        text = str(e)
        assert "line 2" in text and "'x'" in text
    else:
        pytest.fail("expected ParseError")
