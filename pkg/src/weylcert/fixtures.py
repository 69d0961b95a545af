"""Static scenario tables at the subregular central character.

Each classical row records a simple module appearing at nu = h_sr/2 for
sl(4) or sp(6): the orbit of its parameter, the local system, the full
W-structure, and whether the module is unitary.  The unitary column is
declared data (temperedness, duality, complementary-series endpoints and
signature computations), not something the certificate engine derives;
the engine is only required never to contradict a unitary row.

The F4 table is inert reference data: certificates need orbit norms that
are not carried for exceptional types.  Its first row's 4-dimensional
entry is stored as phi(4,13): the label phi(4,15) printed in the source
table does not exist in W(F4), and phi(4,13) is the sign twist of
phi(4,1) forced by the table's own duality column.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .certify import ModuleProfile
from .orbits import sl, sp


class ScenarioRow(NamedTuple):
    name: str                 # parameter-dimension label from the table
    orbit: tuple[int, ...]    # Jordan type of the parameter's orbit
    local_system: str
    wtypes: tuple             # W-structure, one label per occurring type
    unitary: bool
    hermitian: bool = True


A3_NU = (Fraction(1), Fraction(0), Fraction(0), Fraction(-1))

A3_ROWS: tuple[ScenarioRow, ...] = (
    ScenarioRow("4", (3, 1), "1", ((2, 1, 1), (1, 1, 1, 1)), True),
    ScenarioRow("3", (2, 2), "1", ((2, 2),), True),
    ScenarioRow("2_a", (2, 1, 1), "1", ((3, 1), (2, 1, 1)), False,
                hermitian=False),
    ScenarioRow("2_b", (2, 1, 1), "1", ((3, 1), (2, 1, 1)), False,
                hermitian=False),
    ScenarioRow("0", (1, 1, 1, 1), "1", ((4,), (3, 1)), True),
)

C3_NU = (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2))

C3_ROWS: tuple[ScenarioRow, ...] = (
    ScenarioRow("5_t", (4, 2), "(2)",
                (((1,), (1, 1)), ((), (1, 1, 1))), True),
    ScenarioRow("5_s", (4, 2), "(11)", (((1, 1, 1), ()),), True),
    ScenarioRow("4_b", (4, 1, 1), "1", (((), (2, 1)),), True),
    ScenarioRow("4_a", (3, 3), "1", (((1, 1), (1,)),), True),
    ScenarioRow("3_a", (2, 2, 2), "1", (((1,), (2,)),), True),
    ScenarioRow("3_b_t", (2, 2, 1, 1), "(2)",
                (((2,), (1,)), ((1,), (2,)), ((), (2, 1)), ((1,), (1, 1))),
                False),
    ScenarioRow("3_b_s", (2, 2, 1, 1), "(11)", (((2, 1), ()),), True),
    ScenarioRow("2_a", (2, 2, 1, 1), "1",
                (((2,), (1,)), ((2, 1), ()), ((1, 1), (1,)),
                 ((1,), (1, 1))), False),
    ScenarioRow("2_b", (2, 1, 1, 1, 1), "1", (((), (3,)),), True),
    ScenarioRow("0", (1, 1, 1, 1, 1, 1), "1",
                (((3,), ()), ((2,), (1,))), True),
)


def a3_profile(row: ScenarioRow) -> ModuleProfile:
    return ModuleProfile(sl(4), A3_NU, row.wtypes, row.hermitian)


def c3_profile(row: ScenarioRow) -> ModuleProfile:
    return ModuleProfile(sp(6), C3_NU, row.wtypes, row.hermitian)


def scenario_profiles():
    """(family letter, row, profile) for every classical scenario row."""
    for row in A3_ROWS:
        yield "A", row, a3_profile(row)
    for row in C3_ROWS:
        yield "C", row, c3_profile(row)


class F4Row(NamedTuple):
    orbit: str                # orbit of the parameter, Bala-Carter label
    local_system: str
    name: str                 # parameter-dimension label
    wstructure: tuple[tuple[str, int], ...]
    unitary: bool
    dual: str                 # name of the sign-twisted row


F4_NU_LABEL = "F4(a3)"        # the minimal solvable-centralizer orbit

F4_ROWS: tuple[F4Row, ...] = (
    F4Row("F4(a3)", "(4)", "12",
          (("phi(12,4)", 1), ("phi(8,9)''", 1), ("phi(8,9)'", 1),
           ("phi(9,10)", 1), ("phi(4,13)", 1), ("phi(1,24)", 1)),
          True, "[0]"),
    F4Row("F4(a3)", "(31)", "12",
          (("phi(9,6)''", 1), ("phi(8,9)''", 1), ("phi(2,16)''", 1)),
          True, "[4]"),
    F4Row("F4(a3)", "(22)", "12",
          (("phi(6,6)''", 1), ("phi(4,13)", 1)), True, "[6,(2)]"),
    F4Row("F4(a3)", "(211)", "12", (("phi(1,12)''", 1),), True,
          "[8_a,(11)]"),
    F4Row("C3(a1)", "(2)", "11",
          (("phi(16,5)", 1), ("phi(9,10)", 1)), True, "[7_a]"),
    F4Row("C3(a1)", "(11)", "11", (("phi(4,7)''", 1),), True, "[9]"),
    F4Row("A1+~A2", "1", "10_a", (("phi(6,6)'", 1),), True, "[10_a]"),
    F4Row("~A1+A2", "1", "9", (("phi(4,7)'", 1),), True, "[11,(11)]"),
    F4Row("B2", "(2)", "10_b",
          (("phi(9,6)'", 1), ("phi(8,9)'", 1), ("phi(2,16)'", 1)),
          True, "[6,(11)]"),
    F4Row("B2", "(11)", "10_b", (("phi(4,8)", 1),), True, "[10_b,(11)]"),
    F4Row("A2", "(2)", "8_a",
          (("phi(8,3)'", 1), ("phi(12,4)", 1), ("phi(9,6)'", 1),
           ("phi(8,9)'", 1)), True, "[8_b]"),
    F4Row("A2", "(11)", "8_a", (("phi(1,12)'", 1),), True, "[12,(211)]"),
    F4Row("~A2", "1", "8_b",
          (("phi(8,3)''", 1), ("phi(12,4)", 1), ("phi(9,6)''", 1),
           ("phi(8,9)''", 1)), True, "[8_a,(2)]"),
    F4Row("A1+~A1", "1", "7_a",
          (("phi(9,2)", 1), ("phi(16,5)", 1)), True, "[11,(2)]"),
    F4Row("A1+~A1", "1", "7_b",
          (("phi(9,2)", 1), ("phi(16,5)", 2), ("phi(8,3)''", 1),
           ("phi(8,3)'", 1), ("phi(8,9)''", 1), ("phi(8,9)'", 1),
           ("phi(12,4)", 2), ("phi(9,6)''", 1), ("phi(9,6)'", 1),
           ("phi(9,10)", 1)), False, "[7_b]"),
    F4Row("~A1", "(2)", "6",
          (("phi(4,1)", 1), ("phi(6,6)''", 1)), True, "[12,(22)]"),
    F4Row("~A1", "(11)", "6",
          (("phi(2,4)''", 1), ("phi(8,3)''", 1), ("phi(9,6)''", 1)),
          True, "[10_b,(2)]"),
    F4Row("A1", "1", "4",
          (("phi(2,4)'", 1), ("phi(8,3)'", 1), ("phi(9,6)'", 1)),
          True, "[12,(31)]"),
    F4Row("0", "1", "0",
          (("phi(1,0)", 1), ("phi(4,1)", 1), ("phi(9,2)", 1),
           ("phi(8,3)''", 1), ("phi(8,3)'", 1), ("phi(12,4)", 1)),
          True, "[12,(4)]"),
)
