"""Octonionic left/right matrices written as 2x2 Pauli blocks.

``appendix_block(k, a, b, c, d)`` places four 2x2 blocks in an 8x8 matrix
according to layout ``k``:

    (1)  a . . .    (2)  . a . .    (3)  . . a .    (4)  . . . a
         . b . .         b . . .         . . . b         . . b .
         . . c .         . . . c         c . . .         . c . .
         . . . d         . . d .         . d . .         d . . .
"""

from __future__ import annotations

from .matrix import IntMatrix, MatrixLabel

ONE = ((1, 0), (0, 1))
SIGMA1 = ((0, 1), (1, 0))
SIGMA3 = ((1, 0), (0, -1))
I_SIGMA2 = ((0, 1), (-1, 0))  # i * sigma_2 is real

# block-row -> block-column for each layout
BLOCK_LAYOUTS = {
    1: (0, 1, 2, 3),
    2: (1, 0, 3, 2),
    3: (2, 3, 0, 1),
    4: (3, 2, 1, 0),
}


def _neg(b):
    return tuple(tuple(-x for x in r) for r in b)


def _block(b):
    if isinstance(b, IntMatrix):
        b = b.rows
    b = tuple(tuple(r) for r in b)
    if len(b) != 2 or any(len(r) != 2 for r in b):
        raise ValueError("appendix blocks must be 2x2")
    return b


def appendix_block(pattern: int, a, b, c, d, label: MatrixLabel | str = MatrixLabel()) -> IntMatrix:
    try:
        cols = BLOCK_LAYOUTS[pattern]
    except KeyError:
        raise ValueError(f"block layout must be 1..4, got {pattern!r}") from None
    rows = [[0] * 8 for _ in range(8)]
    for br, (bc, blk) in enumerate(zip(cols, (a, b, c, d))):
        blk = _block(blk)
        for r in range(2):
            for s in range(2):
                rows[2 * br + r][2 * bc + s] = blk[r][s]
    m = IntMatrix(tuple(tuple(r) for r in rows))
    return m.relabel(label) if label else m


_TOKENS = {
    "1": ONE,
    "-1": _neg(ONE),
    "s1": SIGMA1,
    "-s1": _neg(SIGMA1),
    "s3": SIGMA3,
    "-s3": _neg(SIGMA3),
    "is2": I_SIGMA2,
    "-is2": _neg(I_SIGMA2),
}

# label -> (layout, blocks) exactly as tabulated
APPENDIX_RECIPES = {
    "e1": (1, ("-is2", "-is2", "-is2", "is2")),
    "e2": (2, ("-s3", "s3", "-1", "1")),
    "e3": (2, ("-s1", "s1", "-is2", "-is2")),
    "e4": (3, ("-s3", "1", "s3", "-1")),
    "e5": (3, ("-s1", "is2", "s1", "is2")),
    "e6": (4, ("-1", "-s3", "s3", "1")),
    "e7": (4, ("-is2", "-s1", "s1", "-is2")),
    "1|e1": (1, ("-is2", "is2", "is2", "-is2")),
    "1|e2": (2, ("-1", "1", "1", "-1")),
    "1|e3": (2, ("-is2", "-is2", "is2", "is2")),
    "1|e4": (3, ("-1", "-1", "1", "1")),
    "1|e5": (3, ("-is2", "-is2", "-is2", "-is2")),
    "1|e6": (4, ("-s3", "s3", "-s3", "s3")),
    "1|e7": (4, ("-s1", "s1", "-s1", "s1")),
}


def appendix_tables() -> dict[str, IntMatrix]:
    out = {}
    for name, (layout, blocks) in APPENDIX_RECIPES.items():
        side = "right" if name.startswith("1|") else "left"
        index = int(name[-1])
        label = MatrixLabel("O", side, (index,), name)
        out[name] = appendix_block(layout, *(_TOKENS[t] for t in blocks), label=label)
    return out
