import gc
import weakref

from hypothesis import given
from hypothesis import strategies as st

from omtense import fixtures
from omtense.sasaki import sasaki_and, sasaki_imp, sasaki_projection, sasaki_tables
from omtense.write import format_sasaki_tables

FIG1 = fixtures.lattice("fig1")
BOOLEAN8 = fixtures.lattice("boolean8")

fig1_elements = st.integers(min_value=0, max_value=FIG1.n - 1)
boolean8_elements = st.integers(min_value=0, max_value=BOOLEAN8.n - 1)


def test_non_commutative_in_mo2(mo2):
    a, b = mo2.index("a"), mo2.index("b")

    assert mo2.names[sasaki_and(mo2, a, b)] == "b"
    assert mo2.names[sasaki_and(mo2, b, a)] == "a"
    assert mo2.names[sasaki_imp(mo2, a, b)] == "a'"
    assert sasaki_projection(mo2, b, a) == sasaki_and(mo2, a, b)


def test_tables_are_cached(fig1):
    assert sasaki_tables(fig1) is sasaki_tables(fig1)


def test_tables_are_released_with_their_lattice():
    lattice = fixtures.lattice("mo2")
    tables = sasaki_tables(lattice)

    assert lattice.sasaki is tables

    ref = weakref.ref(lattice)
    del lattice
    gc.collect()

    assert ref() is None


def test_chain2_tables(chain2):
    assert format_sasaki_tables(chain2) == "\n".join(
        [
            "x ⊙ y | 0 | 1",
            "------+---+--",
            "0     | 0 | 0",
            "1     | 0 | 1",
            "",
            "x → y | 0 | 1",
            "------+---+--",
            "0     | 1 | 1",
            "1     | 0 | 1",
        ]
    )


@given(boolean8_elements, boolean8_elements)
def test_boolean_connectives(x, y):
    assert sasaki_and(BOOLEAN8, x, y) == BOOLEAN8.meet[x, y]
    assert sasaki_imp(BOOLEAN8, x, y) == BOOLEAN8.join[BOOLEAN8.comp[x], y]


@given(fig1_elements, fig1_elements, fig1_elements)
def test_adjointness(x, y, z):
    assert FIG1.leq[sasaki_and(FIG1, x, y), z] == FIG1.leq[x, sasaki_imp(FIG1, y, z)]


@given(fig1_elements, fig1_elements)
def test_lemma_identities(x, y):
    assert sasaki_and(FIG1, sasaki_imp(FIG1, x, y), x) == FIG1.meet[x, y]
    assert FIG1.leq[x, sasaki_imp(FIG1, y, sasaki_and(FIG1, x, y))]
    assert sasaki_imp(FIG1, x, FIG1.bottom) == FIG1.comp[x]
