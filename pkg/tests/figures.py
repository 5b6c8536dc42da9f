"""Worked examples used as golden data throughout the test suite."""

from alntrim.alignment import AlignmentMatrix
from alntrim.corrpat import Site

FIG3_DOCULECTS = ("A", "B", "C", "D")
FIG3 = (
    "s - t e r b -",
    "m e tʰ e - - -",
    "- a t e - b u",
    "- - t e - b -",
)

ASHES_DOCULECTS = ("Boruca", "Cabecar", "Chimila", "Malayo", "Ngabere")
ASHES = (
    "- - b r u - ŋ - - -",
    "- - b - u - ɭ i t u",
    "- - b - u h ŋ a ? -",
    "- - b - i - n - - -",
    "ŋ ɥ b r ɥ - - - - -",
)

WATER_DOCULECTS = ("Boruca", "Bribri", "Buglere", "Cogui", "Ngabere")
WATER = ("d i ?", "d i ?", "tʃ i -", "n i -", "ɲ x -")

QUECHUA_TSV = """ID\tDOCULECT\tCONCEPT\tCOGID\tALIGNMENT
1\tPacaraos\tcry\t1\tw a ɲ u + k u
2\tNapo\tcry\t1\tw a ɲ u + n a
3\tPastaza\tcry\t1\tw a ɲ u + n a
4\tAyacucho\tcry\t1\tw a ɲ u - - -
5\tJauja\tcry\t1\tw a ɲ u - - -
6\tLamas\tcry\t1\tw a ɲ u - - -
"""

# two fictitious words over four languages; the labelled consonant sites
FIG1_WORD1 = {"A": "t a h e", "B": "tʰ a x e", "C": "t a x e", "D": "ts a x e"}
FIG1_WORD2 = {"A": "h i t u", "B": "x u tʰ i", "C": "x u t i", "D": "x u ts i"}


def fig3():
    return AlignmentMatrix.from_strings(FIG3, cogid="fig3", doculects=FIG3_DOCULECTS)


def ashes():
    return AlignmentMatrix.from_strings(ASHES, cogid="ashes", doculects=ASHES_DOCULECTS)


def water():
    return AlignmentMatrix.from_strings(WATER, cogid="water", doculects=WATER_DOCULECTS)


def fig1_site(word, column, cogid):
    return Site(cogid, column, {d: alm.split()[column] for d, alm in word.items()})


def fig1_sites():
    return [
        fig1_site(FIG1_WORD1, 0, "1"),
        fig1_site(FIG1_WORD1, 2, "1"),
        fig1_site(FIG1_WORD2, 0, "2"),
        fig1_site(FIG1_WORD2, 2, "2"),
    ]


def wordlist_tsv(sets, concept=None):
    """TSV text for ``{cogid: {doculect: alignment}}``."""
    lines = ["ID\tDOCULECT\tCONCEPT\tCOGID\tALIGNMENT"]
    n = 0
    for cogid, rows in sets.items():
        for doculect, alm in rows.items():
            n += 1
            lines.append(f"{n}\t{doculect}\t{concept or cogid}\t{cogid}\t{alm}")
    return "\n".join(lines) + "\n"
