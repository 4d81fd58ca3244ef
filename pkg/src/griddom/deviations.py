"""Machine-readable deviation ledger.

Every divergence between the baseline case tables bundled in
griddom.construction and what construct() actually emits is recorded here,
each justified by a verifier counterexample or an exhaustive-search bound.
The ledger ships as JSON (data/deviations.json, regenerated from this module)
and the active copy may be swapped via the GRIDDOM_DEVIATION_LEDGER
environment variable; count_cross_check uses the active copy to decide which
count-table mismatches are expected.
"""

import json
import os
from dataclasses import asdict, dataclass, field
from importlib import resources

ENV_LEDGER_PATH = "GRIDDOM_DEVIATION_LEDGER"


@dataclass(frozen=True)
class TableCell:
    """A cell of the bundled count tables this entry is expected to perturb.

    table is "first" / "middle" / "last" (black disks per block) or "white"
    (white-square total); m_mod None matches every m residue.
    """

    table: str
    n_mod: int
    m_mod: int | None
    printed_minus_actual: int


@dataclass(frozen=True)
class DeviationEntry:
    id: str
    kind: str                      # reading-correction | table-correction | orientation | table-errata | deficit
    classes: tuple[tuple[int, int], ...]   # (n mod 5, m mod 5) keys affected
    target: str
    baseline: str
    corrected: str
    rationale: str
    counterexample: dict | None = None
    table_cells: tuple[TableCell, ...] = field(default_factory=tuple)


DEVIATIONS: tuple[DeviationEntry, ...] = (
    DeviationEntry(
        id="DEV-DM-RANGE",
        kind="reading-correction",
        classes=tuple((rn, rm) for rn in range(5) for rm in range(5)),
        target="middle-row black disks",
        baseline="row range written 2 <= p <= n-1 with column guard 1 <= 5k+a_1 <= n",
        corrected="rows 2 <= p <= m-1 with column guard 1 <= 5k+a_p <= n",
        rationale="p indexes rows and each row selects columns by its own "
                  "offset; as written the rule is vacuous for m > n and "
                  "mis-selects columns whenever a_p != a_1.",
    ),
    DeviationEntry(
        id="DEV-DL-OFFSET",
        kind="reading-correction",
        classes=tuple((rn, rm) for rn in range(5) for rm in range(5)),
        target="last-row black disks",
        baseline="columns 5k+a_n with range guard on 5k+a_1",
        corrected="columns 5k+a_m with range guard on 5k+a_m",
        rationale="the last row is row m; its disks follow row m's offset.",
    ),
    DeviationEntry(
        id="DEV-FIX-11",
        kind="table-correction",
        classes=((1, 1),),
        target="last-row whites, class n=5k+1 / m=5l+1",
        baseline="A_4^(1,S-1) + {3, n-1}",
        corrected="A_4^(1,S-2) + {3, n-1}",
        rationale="(m, n-2) is redundant: (m, n-1) already covers it, and "
                  "keeping it makes the pattern one larger than optimal.",
        counterexample={"m": 16, "n": 16, "baseline_cardinality": 61,
                        "optimal": 60},
        table_cells=(TableCell("white", 1, 1, +1),),
    ),
    DeviationEntry(
        id="DEV-FIX-13",
        kind="table-correction",
        classes=((1, 3),),
        target="last-column whites and last-row disks, class n=5k+1 / m=5l+3",
        baseline="last column A_3^(1,T-2) + {2}; last-row disks from column 3",
        corrected="last column A_3^(1,T-1) + {2}; last-row disks from column 2",
        rationale="(m-5, n) and the bottom-left cells (m-1,2), (m,1..3) are "
                  "uncovered and the pattern is two members short.",
        counterexample={"m": 18, "n": 16,
                        "undominated": [[13, 16], [17, 2], [18, 1], [18, 2], [18, 3]],
                        "baseline_cardinality": 66, "optimal": 68},
        table_cells=(TableCell("white", 1, 3, -1),),
    ),
    DeviationEntry(
        id="DEV-FIX-14",
        kind="table-correction",
        classes=((1, 4),),
        target="last-column whites, class n=5k+1 / m=5l+4",
        baseline="A_3^(1,T-1) + {2, m-2}",
        corrected="A_3^(1,T-1) + {2, m-1}",
        rationale="with the extra at row m-2 both (m, n) and the near-corner "
                  "(m-1, n-1) stay undominated; row m-1 covers both.",
        counterexample={"m": 19, "n": 16, "undominated": [[18, 15], [19, 16]]},
    ),
    DeviationEntry(
        id="DEV-FIX-21",
        kind="table-correction",
        classes=((2, 1),),
        target="last-row disks, class n=5k+2 / m=5l+1",
        baseline="columns congruent to a_m in [3, n-2]",
        corrected="columns congruent to a_m in [2, n-2] (adds the disk (m, 2))",
        rationale="(m-1,2), (m,1), (m,2), (m,3) are uncovered and the pattern "
                  "is one short; the single disk at (m, 2) fixes all four.",
        counterexample={"m": 16, "n": 17,
                        "undominated": [[15, 2], [16, 1], [16, 2], [16, 3]],
                        "baseline_cardinality": 63, "optimal": 64},
    ),
    DeviationEntry(
        id="DEV-FIX-23",
        kind="table-correction",
        classes=((2, 3),),
        target="first-column whites, class n=5k+2 / m=5l+3",
        baseline="A_2^(0,T-1)",
        corrected="A_2^(0,T) (adds (m-1, 1))",
        rationale="(m-1, 1) and (m, 1) are uncovered and the pattern is one "
                  "short; the added white covers both.",
        counterexample={"m": 18, "n": 17, "undominated": [[17, 1], [18, 1]],
                        "baseline_cardinality": 71, "optimal": 72},
        table_cells=(TableCell("white", 2, 3, -1),),
    ),
    DeviationEntry(
        id="DEV-FIX-34",
        kind="table-correction",
        classes=((3, 4),),
        target="last-row disks, class n=5k+3 / m=5l+4",
        baseline="columns congruent to a_m in [3, n-2]",
        corrected="columns congruent to a_m in [2, n-2] (adds the disk (m, 2))",
        rationale="same bottom-left gap as class (2,1): four uncovered cells, "
                  "one member short, fixed by the single disk (m, 2).",
        counterexample={"m": 19, "n": 18,
                        "undominated": [[18, 2], [19, 1], [19, 2], [19, 3]],
                        "baseline_cardinality": 79, "optimal": 80},
    ),
    DeviationEntry(
        id="DEV-FIX-44",
        kind="table-correction",
        classes=((4, 4),),
        target="first- and last-column whites, class n=5k+4 / m=5l+4",
        baseline="A_3^(1,T-1) + {2} on both columns",
        corrected="A_3^(1,T-1) + {2, m-1} on both columns",
        rationale="five cells around the bottom corners are uncovered and the "
                  "pattern is two short; the whites at (m-1, 1) and (m-1, n) "
                  "fix all of them.",
        counterexample={"m": 19, "n": 19,
                        "undominated": [[18, 1], [18, 18], [18, 19], [19, 1], [19, 19]],
                        "baseline_cardinality": 82, "optimal": 84},
        table_cells=(TableCell("white", 4, 4, -2),),
    ),
    DeviationEntry(
        id="DEV-FIX-33",
        kind="table-correction",
        classes=((3, 3),),
        target="diagonal offset and all frame whites, class n=5k+3 / m=5l+3",
        baseline="offset a_1 = 3 with the bundled frame tables",
        corrected="offset a_1 = 4; first row A_2^(1,S); first column "
                  "A_4^(1,T-1)+{2}; last column A_2^(1,T); last row A_4^(1,S-1)+{2}",
        rationale="exhaustive search over every frame-white arrangement (and "
                  "every optional corner disk) shows offset 3 cannot reach "
                  "the optimal size; offset 4 reaches it with the tables above.",
        counterexample={"m": 18, "n": 18, "baseline_minimum": 77, "optimal": 76},
        table_cells=(TableCell("first", 3, 3, -1), TableCell("white", 3, 3, +1)),
    ),
    DeviationEntry(
        id="DEV-ORIENT",
        kind="orientation",
        classes=((0, 1), (0, 3), (0, 4), (1, 2), (4, 1), (4, 2)),
        target="build orientation for six residue classes",
        baseline="tables applied to (m, n) as given",
        corrected="pattern built on the transposed grid and flipped back",
        rationale="for these classes exhaustive search proves the direct "
                  "tables cannot reach the optimal size (minimum is optimal+1) "
                  "while the mirrored class reaches it exactly.",
        counterexample={"examples": [
            {"class": [0, 1], "m": 16, "n": 20, "direct_minimum": 76, "optimal": 75},
            {"class": [0, 3], "m": 18, "n": 20, "direct_minimum": 85, "optimal": 84},
            {"class": [0, 4], "m": 19, "n": 20, "direct_minimum": 89, "optimal": 88},
            {"class": [1, 2], "m": 17, "n": 16, "direct_minimum": 65, "optimal": 64},
            {"class": [4, 1], "m": 16, "n": 19, "direct_minimum": 72, "optimal": 71},
            {"class": [4, 2], "m": 17, "n": 19, "direct_minimum": 76, "optimal": 75},
        ]},
    ),
    DeviationEntry(
        id="DEV-CLIP-04",
        kind="table-correction",
        classes=((0, 4),),
        target="last-row whites, class n=5k / m=5l+4 (direct tables only)",
        baseline="A_4^(1,S) + {3}: the top element 5S+4 exceeds n = 5S",
        corrected="out-of-range entries denote no vertex and are dropped",
        rationale="column 5S+4 does not exist on the grid; construct() builds "
                  "this class transposed, so the clip only affects direct "
                  "table queries.",
        counterexample={"m": 19, "n": 20, "out_of_range_column": 24},
    ),
    DeviationEntry(
        id="DEV-DEFICIT-00",
        kind="deficit",
        classes=((0, 0),),
        target="class n=5k / m=5l",
        baseline="bundled tables, emitted unchanged",
        corrected="none: cardinality check fails by +2",
        rationale="exhaustive search over all frame-white arrangements and "
                  "optional corner disks proves the minimum is optimal+2 with "
                  "the bundled offset and optimal+1 for every other offset, in "
                  "both orientations; no table amendment can restore the "
                  "cardinality invariant, so the baseline is kept.",
        counterexample={"m": 20, "n": 20, "constructed": 94,
                        "architecture_minimum": 94, "optimal": 92},
        table_cells=(),
    ),
    DeviationEntry(
        id="DEV-DEFICIT-02",
        kind="deficit",
        classes=((0, 2),),
        target="class n=5k / m=5l+2",
        baseline="bundled tables, emitted unchanged",
        corrected="none: cardinality check fails by +1",
        rationale="exhaustive search proves optimal+1 is the minimum for this "
                  "class at every offset and in both orientations; the "
                  "baseline already attains it.",
        counterexample={"m": 17, "n": 20, "constructed": 80,
                        "architecture_minimum": 80, "optimal": 79},
    ),
    DeviationEntry(
        id="DEV-DEFICIT-20",
        kind="deficit",
        classes=((2, 0),),
        target="class n=5k+2 / m=5l",
        baseline="bundled tables, emitted unchanged",
        corrected="none: cardinality check fails by +1",
        rationale="mirror of class (0,2): optimal+1 proven minimal in both "
                  "orientations and at every offset.",
        counterexample={"m": 20, "n": 17, "constructed": 80,
                        "architecture_minimum": 80, "optimal": 79},
    ),
    DeviationEntry(
        id="DEV-T2-MID-N1",
        kind="table-errata",
        classes=((1, 0), (1, 1), (1, 3), (1, 4)),
        target="black-disk count table, middle blocks, n = 5k+1",
        baseline="5S+11",
        corrected="5S+1 (every full middle block holds exactly n disks)",
        rationale="five consecutive full rows hit each column residue once, "
                  "so a middle block always holds n = 5S+1 disks.",
        table_cells=(TableCell("middle", 1, None, +10),),
    ),
    DeviationEntry(
        id="DEV-T2-FIRST-N0",
        kind="table-errata",
        classes=((0, 0), (0, 2)),
        target="black-disk count table, first block, n = 5k",
        baseline="5S-2",
        corrected="5S-1 (row 1 holds S-1 disks and rows 2-5 hold 4S)",
        rationale="the placement rules the table summarizes yield 5S-1.",
        table_cells=(TableCell("first", 0, None, -1),),
    ),
    DeviationEntry(
        id="DEV-T2-LAST-M0",
        kind="table-errata",
        classes=((0, 0), (2, 0), (3, 0)),
        target="black-disk count table, last block, m = 5l",
        baseline="5S-2 / 5S+1 / 5S+2 for n = 5k / 5k+2 / 5k+3",
        corrected="5S-1 / 5S+2 / 5S+3",
        rationale="each cell is one below the count the placement rules "
                  "yield for the final five rows.",
        table_cells=(TableCell("last", 0, 0, -1), TableCell("last", 2, 0, -1),
                     TableCell("last", 3, 0, -1)),
    ),
    DeviationEntry(
        id="DEV-T3-N2M0",
        kind="table-errata",
        classes=((2, 0),),
        target="white-square count table, n = 5k+2 / m = 5l",
        baseline="2T+2S+1",
        corrected="2T+2S (the bundled white tables for this class emit 2T+2S)",
        rationale="the count table disagrees with the white tables it "
                  "summarizes; the placement is kept and the count corrected.",
        table_cells=(TableCell("white", 2, 0, +1),),
    ),
    DeviationEntry(
        id="DEV-T3-N4M0",
        kind="table-errata",
        classes=((4, 0),),
        target="white-square count table, n = 5k+4 / m = 5l",
        baseline="2T+2S+1",
        corrected="2T+2S",
        rationale="same as DEV-T3-N2M0 for the mirrored class.",
        table_cells=(TableCell("white", 4, 0, +1),),
    ),
)

BY_ID = {e.id: e for e in DEVIATIONS}

_CLASS_FIXES = {
    (1, 1): ("DEV-FIX-11",),
    (1, 3): ("DEV-FIX-13",),
    (1, 4): ("DEV-FIX-14",),
    (2, 1): ("DEV-FIX-21",),
    (2, 3): ("DEV-FIX-23",),
    (3, 3): ("DEV-FIX-33",),
    (3, 4): ("DEV-FIX-34",),
    (4, 4): ("DEV-FIX-44",),
}

_DEFICIT_IDS = {(0, 0): "DEV-DEFICIT-00", (0, 2): "DEV-DEFICIT-02",
                (2, 0): "DEV-DEFICIT-20"}


def deviation_ids_for_class(cls: tuple[int, int], transposed: bool) -> tuple[str, ...]:
    """Ledger ids a construct() call for this class applies or triggers."""
    ids = ["DEV-DM-RANGE", "DEV-DL-OFFSET"]
    if transposed:
        ids.append("DEV-ORIENT")
        core = (cls[1], cls[0])
        ids.extend(_CLASS_FIXES.get(core, ()))
    else:
        ids.extend(_CLASS_FIXES.get(cls, ()))
        if cls in _DEFICIT_IDS:
            ids.append(_DEFICIT_IDS[cls])
    return tuple(ids)


def ledger_as_json() -> str:
    payload = {
        "schema_version": 1,
        "entries": [asdict(e) for e in DEVIATIONS],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _packaged_ledger_text() -> str:
    return resources.files("griddom").joinpath("data/deviations.json").read_text("utf-8")


def load_ledger(path: str | None = None) -> dict:
    """Load the active ledger: explicit path, else $GRIDDOM_DEVIATION_LEDGER,
    else the packaged copy. Returns {id: entry-dict}."""
    if path is None:
        path = os.environ.get(ENV_LEDGER_PATH)
    if path:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    else:
        payload = json.loads(_packaged_ledger_text())
    return {e["id"]: e for e in payload["entries"]}


def expected_table_mismatches(ledger: dict | None = None) -> dict:
    """Map (table, n_mod, m_mod) -> (printed_minus_actual, ledger id).

    m_mod may be None in the ledger (wildcard); the returned map keeps the
    wildcard key and lookups must try both forms.
    """
    if ledger is None:
        ledger = load_ledger()
    out = {}
    for entry in ledger.values():
        for cell in entry.get("table_cells", ()):
            key = (cell["table"], cell["n_mod"], cell["m_mod"])
            out[key] = (cell["printed_minus_actual"], entry["id"])
    return out


def lookup_expected_mismatch(table: str, n_mod: int, m_mod: int,
                             expected: dict) -> tuple[int, str] | None:
    return expected.get((table, n_mod, m_mod)) or expected.get((table, n_mod, None))
