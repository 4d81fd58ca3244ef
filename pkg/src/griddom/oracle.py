"""Independent exact solvers for the domination numbers of small grids.

Two methods, kept deliberately separate from the constructor so they can act
as oracles for it:

  * exhaustive search over vertex subsets (grids up to 20 cells), returning
    the lexicographically least minimum witness;
  * a broken-profile dynamic program sweeping along the longer dimension,
    one cell at a time, with a dense base-3 (domination) or base-4
    ([1,2]-domination) state encoding over a frontier of width min(m, n).

Frontier states track, per cell: 0 = member; then for plain domination
1 = dominated non-member, 2 = not yet dominated; for [1,2]-domination
1 = covered once, 2 = covered twice, 3 = uncovered (a non-member reaching a
third covering neighbor is pruned immediately). A cell leaves the frontier
when its right neighbor is decided, at which point it must not be uncovered.

Because a member cell is exactly "new digit 0", the place / no-place branches
write disjoint slices of the next layer, so each cell transition is a few
reshaped slice-min passes over a dense numpy vector, with no scatter.
Back-pointers cost one byte per (cell, state) and are dropped above a byte
budget, in which case only the value is returned.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .construction import MIN_SIDE, gamma_formula
from .grid import GridDims, Vertex

BRUTE_FORCE_CELL_CAP = 20
DEFAULT_WIDTH_CAPS = {"domination": 12, "one-two": 10}
DEFAULT_BACKPOINTER_BUDGET = 256 * 2**20   # bytes
VARIANTS = ("domination", "one-two")
_INF = np.int32(2**30)


class CapacityError(ValueError):
    """Requested instance exceeds the solver's stated capacity."""


@dataclass(frozen=True)
class OracleResult:
    dims: GridDims
    variant: str
    value: int
    witness: tuple[Vertex, ...] | None
    method: str
    work: int
    witness_dropped: bool = False


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------

def exact_gamma_bruteforce(dims: GridDims, variant: str = "domination") -> OracleResult:
    """Minimum over all vertex subsets, smallest size first.

    Within one size, subsets are generated in lexicographic row-major order,
    so the first feasible one is the lexicographically least witness.
    """
    _check_variant(variant)
    m, n = dims.m, dims.n
    cells = m * n
    if cells > BRUTE_FORCE_CELL_CAP:
        raise CapacityError(
            f"{m}x{n} has {cells} > {BRUTE_FORCE_CELL_CAP} cells; "
            "use exact_gamma_dp instead"
        )
    def idx(r, c):
        return r * n + c
    open_masks = []
    for r in range(m):
        for c in range(n):
            mask = 0
            if r > 0: mask |= 1 << idx(r - 1, c)
            if r < m - 1: mask |= 1 << idx(r + 1, c)
            if c > 0: mask |= 1 << idx(r, c - 1)
            if c < n - 1: mask |= 1 << idx(r, c + 1)
            open_masks.append(mask)
    closed_masks = [om | (1 << i) for i, om in enumerate(open_masks)]
    full = (1 << cells) - 1
    work = 0
    for k in range(cells + 1):
        for combo in combinations(range(cells), k):
            work += 1
            dset = 0
            covered = 0
            for i in combo:
                dset |= 1 << i
                covered |= closed_masks[i]
            if covered != full:
                continue
            if variant == "one-two":
                ok = True
                rest = full & ~dset
                while rest:
                    i = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if not 1 <= (open_masks[i] & dset).bit_count() <= 2:
                        ok = False
                        break
                if not ok:
                    continue
            witness = tuple(Vertex(i // n + 1, i % n + 1) for i in combo)
            return OracleResult(dims=dims, variant=variant, value=k,
                                witness=witness, method="brute-force", work=work)
    raise AssertionError("the full vertex set is always feasible")


# ---------------------------------------------------------------------------
# Broken-profile dynamic program
# ---------------------------------------------------------------------------

def _cell_step_domination(V: np.ndarray, r: int, w: int, keep_bp: bool):
    B = 3
    hi = B ** (w - 1 - r)
    new = np.full(V.shape, _INF, dtype=np.int32)
    bp = np.full(V.shape, 255, dtype=np.uint8) if keep_bp else None
    if r == 0:
        V2 = V.reshape(hi, B)
        n2 = new.reshape(hi, B)
        # place: any old digit; the left neighbor, leaving the frontier, is saved
        n2[:, 0] = V2.min(axis=1) + 1
        # no place: old digit 2 would abandon the left neighbor
        n2[:, 1] = V2[:, 0]            # dominated by the left member
        n2[:, 2] = V2[:, 1]            # still waiting for right/down
        if keep_bp:
            b2 = bp.reshape(hi, B)
            b2[:, 0] = 1 | (V2.argmin(axis=1).astype(np.uint8) << 1)
            b2[:, 1] = 0
            b2[:, 2] = 1 << 1
        return new, bp
    l2 = B ** (r - 1)
    V4 = V.reshape(hi, B, B, l2)       # axes: high digits, digit r, digit r-1, low
    n4 = new.reshape(hi, B, B, l2)
    # -- place (new digit r = 0): up digit 2 -> 1, others unchanged
    M = V4.min(axis=1)                 # over old digit r, any value allowed
    n4[:, 0, 0, :] = M[:, 0, :] + 1
    up1 = M[:, 1, :]
    up2 = M[:, 2, :]
    take2 = up2 < up1                  # tie keeps the already-dominated branch
    n4[:, 0, 1, :] = np.where(take2, up2, up1) + 1
    # -- no place (new digit r in {1,2}): old digit r in {0,1} only
    n4[:, 1, 0, :] = np.minimum(V4[:, 0, 0, :], V4[:, 1, 0, :])   # up member
    n4[:, 1, 1:, :] = V4[:, 0, 1:, :]                             # left member
    n4[:, 2, 1:, :] = V4[:, 1, 1:, :]                             # uncovered yet
    if keep_bp:
        b4 = bp.reshape(hi, B, B, l2)
        Marg = V4.argmin(axis=1).astype(np.uint8)
        b4[:, 0, 0, :] = 1 | (Marg[:, 0, :] << 1)
        b4[:, 0, 1, :] = 1 | (np.where(take2, Marg[:, 2, :], Marg[:, 1, :]) << 1) \
                           | (take2.astype(np.uint8) << 3)
        b4[:, 1, 0, :] = (V4[:, 1, 0, :] < V4[:, 0, 0, :]).astype(np.uint8) << 1
        b4[:, 1, 1:, :] = 0
        b4[:, 2, 1:, :] = 1 << 1
    return new, bp


def _cell_step_one_two(V: np.ndarray, r: int, w: int, keep_bp: bool):
    B = 4
    hi = B ** (w - 1 - r)
    new = np.full(V.shape, _INF, dtype=np.int32)
    bp = np.full(V.shape, 255, dtype=np.uint8) if keep_bp else None
    sel = np.array([0, 1, 3], dtype=np.uint8)      # old digits compatible with placing
    if r == 0:
        V2 = V.reshape(hi, B)
        n2 = new.reshape(hi, B)
        stack = np.stack([V2[:, 0], V2[:, 1], V2[:, 3]], axis=1)
        n2[:, 0] = stack.min(axis=1) + 1
        n2[:, 1] = V2[:, 0]                        # covered once by the left member
        n2[:, 3] = np.minimum(V2[:, 1], V2[:, 2])  # uncovered so far
        if keep_bp:
            b2 = bp.reshape(hi, B)
            b2[:, 0] = 1 | (sel[stack.argmin(axis=1)] << 1)
            b2[:, 1] = 0
            b2[:, 3] = ((V2[:, 2] < V2[:, 1]).astype(np.uint8) + 1) << 1
        return new, bp
    l2 = B ** (r - 1)
    V4 = V.reshape(hi, B, B, l2)
    n4 = new.reshape(hi, B, B, l2)
    # -- place: old digit r in {0,1,3}; up digit maps 0->0, 1->2, 3->1, 2 pruned
    stack = np.stack([V4[:, 0], V4[:, 1], V4[:, 3]], axis=1)    # (hi, 3, B, l2)
    M = stack.min(axis=1)
    for nd_up, od_up in ((0, 0), (2, 1), (1, 3)):
        n4[:, 0, nd_up, :] = M[:, od_up, :] + 1
    # -- no place: old digit r in {0,1,2}; fresh count = left-member + up-member
    n4[:, 2, 0, :] = V4[:, 0, 0, :]
    n4[:, 1, 0, :] = np.minimum(V4[:, 1, 0, :], V4[:, 2, 0, :])
    n4[:, 1, 1:, :] = V4[:, 0, 1:, :]
    n4[:, 3, 1:, :] = np.minimum(V4[:, 1, 1:, :], V4[:, 2, 1:, :])
    if keep_bp:
        b4 = bp.reshape(hi, B, B, l2)
        Marg = sel[stack.argmin(axis=1)]
        for nd_up, od_up in ((0, 0), (2, 1), (1, 3)):
            b4[:, 0, nd_up, :] = 1 | (Marg[:, od_up, :] << 1)
        b4[:, 2, 0, :] = 0
        b4[:, 1, 0, :] = ((V4[:, 2, 0, :] < V4[:, 1, 0, :]).astype(np.uint8) + 1) << 1
        b4[:, 1, 1:, :] = 0
        b4[:, 3, 1:, :] = ((V4[:, 2, 1:, :] < V4[:, 1, 1:, :]).astype(np.uint8) + 1) << 1
    return new, bp


def _final_min(values: np.ndarray, base: int, w: int, bad: int):
    """Min (and argmin state) over states with no digit equal to `bad`."""
    cube = values.reshape((base,) * w)
    view = cube[(slice(0, bad),) * w]
    flat = int(np.argmin(view))
    best = int(view.reshape(-1)[flat])
    digits_rev = np.unravel_index(flat, (bad,) * w)
    state = 0
    for j, d in enumerate(digits_rev):     # axis 0 is the most significant digit
        state += int(d) * base ** (w - 1 - j)
    return best, state


def _reconstruct(bps, final_state: int, width: int, length: int, base: int):
    members = []
    state = final_state
    for idx in range(width * length - 1, -1, -1):
        r = idx % width
        col = idx // width
        b = int(bps[idx][state])
        if b == 255:
            raise AssertionError("back-pointer chain broken")
        action = b & 1
        old_dr = (b >> 1) & 3
        up_was2 = (b >> 3) & 1
        pr = base ** r
        d_r = (state // pr) % base
        state += (old_dr - d_r) * pr
        if action:
            members.append((r, col))
            if r > 0:
                pr1 = base ** (r - 1)
                d_up = (state // pr1) % base
                if base == 3:
                    old_up = 2 if (d_up == 1 and up_was2) else d_up
                else:
                    old_up = {0: 0, 2: 1, 1: 3}[d_up]
                state += (old_up - d_up) * pr1
    return members


def exact_gamma_dp(
    dims: GridDims,
    variant: str = "domination",
    width_cap: int | None = None,
    return_witness: bool = True,
    backpointer_budget: int = DEFAULT_BACKPOINTER_BUDGET,
) -> OracleResult:
    """Exact minimum via the frontier DP; witness via back-pointers.

    The sweep always runs along the longer dimension so the frontier width is
    min(m, n). Exceeding the width cap raises CapacityError naming the state
    count the request would need. When the back-pointer log would exceed its
    byte budget (or return_witness is false) only the value is computed and
    the result is flagged witness_dropped.
    """
    _check_variant(variant)
    cap = width_cap if width_cap is not None else DEFAULT_WIDTH_CAPS[variant]
    base = 3 if variant == "domination" else 4
    width, length = min(dims.m, dims.n), max(dims.m, dims.n)
    if width > cap:
        raise CapacityError(
            f"frontier width {width} exceeds cap {cap}: {base}**{width} = "
            f"{base**width} states per layer"
        )
    states = base ** width
    keep_bp = return_witness and states * width * length <= backpointer_budget
    step = _cell_step_domination if base == 3 else _cell_step_one_two
    values = np.full(states, _INF, dtype=np.int32)
    values[(states - 1) // (base - 1)] = 0      # every frontier digit = 1
    bps = [] if keep_bp else None
    work = 0
    for _col in range(length):
        for row in range(width):
            values, bp = step(values, row, width, keep_bp)
            work += states
            if keep_bp:
                bps.append(bp)
    bad = 2 if variant == "domination" else 3
    value, final_state = _final_min(values, base, width, bad)
    if value >= int(_INF):
        raise AssertionError("no feasible completion; the DP is inconsistent")
    witness = None
    if keep_bp:
        cells = _reconstruct(bps, final_state, width, length, base)
        if dims.m <= dims.n:
            witness = tuple(sorted(Vertex(r + 1, c + 1) for r, c in cells))
        else:
            witness = tuple(sorted(Vertex(c + 1, r + 1) for r, c in cells))
        if len(witness) != value:
            raise AssertionError("witness size disagrees with DP value")
    return OracleResult(
        dims=dims, variant=variant, value=value, witness=witness,
        method="profile-dp", work=work,
        witness_dropped=return_witness and not keep_bp,
    )


# ---------------------------------------------------------------------------
# Comparison against the closed form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormulaComparison:
    dims: GridDims
    oracle_value: int
    formula_value: int | None
    equal: bool | None
    method: str


def oracle_vs_formula(dims: GridDims, variant: str = "domination",
                      width_cap: int | None = None) -> FormulaComparison:
    """Exact oracle value next to the closed form, when the form applies."""
    res = exact_gamma_dp(dims, variant=variant, width_cap=width_cap,
                         return_witness=False)
    if min(dims.m, dims.n) >= MIN_SIDE:
        formula = gamma_formula(dims)
        return FormulaComparison(dims, res.value, formula,
                                 res.value == formula, res.method)
    return FormulaComparison(dims, res.value, None, None, res.method)
