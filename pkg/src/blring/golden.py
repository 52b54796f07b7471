"""Reference tables of small BL-algebras, transcribed as printed.

Each entry is an :class:`AlgebraTableSpec` with its arrow table supplied, so
loading one re-derives the residuum and rejects any transcription that is not
a residuated lattice.

    luk3                3-element Lukasiewicz chain, the ideal lattice of Z_4
    godel3              3-element Goedel chain, the only order-3 BL non-MV algebra
    boolean4            4-element Boolean algebra (diamond), Id(Z_2 x Z_2)
    luk4                4-element Lukasiewicz chain, Id(Z_8)
    luk3_plus_bool      4-chain, Lukasiewicz 3-chain below a Boolean step
    bool_plus_luk3      4-chain, Boolean step below a Lukasiewicz 3-chain
    godel4              4-element Goedel chain
    godel3_squared      godel3 x godel3 on the labels O..Z
    godel3_squared_upper  the interval above C of godel3_squared
    comet5              the subalgebra {O, D, E, G, Z} of godel3_squared
"""
from .resalg import AlgebraTableSpec, from_tables


def _rows(text):
    return [line.split() for line in text.strip().splitlines()]


def _chain(labels):
    return [[a, b] for a, b in zip(labels, labels[1:])]


# coordinates of O..Z as pairs over the 3-chain 0 < I < R
_SQUARE = dict(zip("OABCDEFGZ", [(a, b) for a in range(3) for b in range(3)]))


def _square_order(labels):
    return [[x, y] for x in labels for y in labels
            if x != y and _SQUARE[x][0] <= _SQUARE[y][0] and _SQUARE[x][1] <= _SQUARE[y][1]]


SPECS = {
    "luk3": AlgebraTableSpec(
        size=3, labels=["0", "I", "R"], leq_pairs=_chain(["0", "I", "R"]),
        arrow=_rows("""
            R R R
            I R R
            0 I R"""),
        odot=_rows("""
            0 0 0
            0 0 I
            0 I R"""),
    ),
    "godel3": AlgebraTableSpec(
        size=3, labels=["0", "I", "R"], leq_pairs=_chain(["0", "I", "R"]),
        arrow=_rows("""
            R R R
            0 R R
            0 I R"""),
        odot=_rows("""
            0 0 0
            0 I I
            0 I R"""),
    ),
    "boolean4": AlgebraTableSpec(
        size=4, labels=["0", "I", "J", "R"],
        leq_pairs=[["0", "I"], ["0", "J"], ["I", "R"], ["J", "R"]],
        arrow=_rows("""
            R R R R
            J R J R
            I I R R
            0 I J R"""),
        odot=_rows("""
            0 0 0 0
            0 I 0 I
            0 0 J J
            0 I J R"""),
    ),
    "luk4": AlgebraTableSpec(
        size=4, labels=["0", "I", "J", "R"], leq_pairs=_chain(["0", "I", "J", "R"]),
        arrow=_rows("""
            R R R R
            J R R R
            I J R R
            0 I J R"""),
        odot=_rows("""
            0 0 0 0
            0 0 0 I
            0 0 I J
            0 I J R"""),
    ),
    "luk3_plus_bool": AlgebraTableSpec(
        size=4, labels=["0", "I", "J", "R"], leq_pairs=_chain(["0", "I", "J", "R"]),
        arrow=_rows("""
            R R R R
            I R R R
            0 I R R
            0 I J R"""),
        odot=_rows("""
            0 0 0 0
            0 0 I I
            0 I J J
            0 I J R"""),
    ),
    "bool_plus_luk3": AlgebraTableSpec(
        size=4, labels=["0", "I", "J", "R"], leq_pairs=_chain(["0", "I", "J", "R"]),
        arrow=_rows("""
            R R R R
            0 R R R
            0 J R R
            0 I J R"""),
        odot=_rows("""
            0 0 0 0
            0 I I I
            0 I I J
            0 I J R"""),
    ),
    "godel4": AlgebraTableSpec(
        size=4, labels=["0", "I", "J", "R"], leq_pairs=_chain(["0", "I", "J", "R"]),
        arrow=_rows("""
            R R R R
            0 R R R
            0 I R R
            0 I J R"""),
        odot=_rows("""
            0 0 0 0
            0 I I I
            0 I J J
            0 I J R"""),
    ),
    "godel3_squared": AlgebraTableSpec(
        size=9, labels=list("OABCDEFGZ"), leq_pairs=_square_order("OABCDEFGZ"),
        arrow=_rows("""
            Z Z Z Z Z Z Z Z Z
            F Z Z F Z Z F Z Z
            F G Z F G Z F G Z
            B B B Z Z Z Z Z Z
            O B B F Z Z F Z Z
            O A B F G Z F G Z
            B B B E E E Z Z Z
            O B B C E E F Z Z
            O A B C D E F G Z"""),
        odot=_rows("""
            O O O O O O O O O
            O A A O A A O A A
            O A B O A B O A B
            O O O C C C C C C
            O A A C D D C D D
            O A B C D E C D E
            O O O C C C F F F
            O A A C D D F G G
            O A B C D E F G Z"""),
    ),
    "godel3_squared_upper": AlgebraTableSpec(
        size=6, labels=list("CDEFGZ"), leq_pairs=_square_order("CDEFGZ"),
        arrow=_rows("""
            Z Z Z Z Z Z
            F Z Z F Z Z
            F G Z F G Z
            E E E Z Z Z
            C E E F Z Z
            C D E F G Z"""),
        odot=_rows("""
            C C C C C C
            C D D C D D
            C D E C D E
            C C C F F F
            C D D F G G
            C D E F G Z"""),
    ),
    "comet5": AlgebraTableSpec(
        size=5, labels=list("ODEGZ"), leq_pairs=_square_order("ODEGZ"),
        arrow=_rows("""
            Z Z Z Z Z
            O Z Z Z Z
            O G Z G Z
            O E E Z Z
            O D E G Z"""),
        odot=_rows("""
            O O O O O
            O D D D D
            O D E D E
            O D D G G
            O D E G Z"""),
    ),
}

# printed 4-element tables by the chain-case / lattice-case that produces them
FOUR_ELEMENT = ("boolean4", "luk4", "luk3_plus_bool", "bool_plus_luk3", "godel4")


def load(name):
    return from_tables(SPECS[name])
