"""Reference decision matrix for the 19-bank financial performance case study."""

from __future__ import annotations

from importlib import resources

from ..matrix import DecisionMatrix, Direction, validate_matrix

CRITERIA = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")
CRITERION_DESCRIPTIONS = {
    "C1": "loans / total assets",
    "C2": "loans / total deposits",
    "C3": "equity / total assets",
    "C4": "net profit / total assets",
    "C5": "net profit / total equity",
    "C6": "branches / net profit",
    "C7": "employees / net profit",
}
DIRECTIONS = (Direction.BENEFIT,) * 5 + (Direction.COST,) * 2
ALTERNATIVES = tuple(f"B{i}" for i in range(1, 20))

# bank rows as published
_ROWS = (
    (0.5478, 0.7281, 0.0876, 0.0178, 0.2029, 0.0428, 0.5958),
    (0.5673, 0.8457, 0.0636, 0.0143, 0.2245, 0.0395, 0.7062),
    (0.5556, 0.8403, 0.1359, 0.0437, 0.3216, 0.0184, 0.3788),
    (0.6053, 0.7942, 0.0645, 0.0106, 0.1642, 0.0704, 1.4085),
    (0.5810, 0.8466, 0.1325, 0.0508, 0.3832, 0.0143, 0.3169),
    (0.5455, 0.8984, 0.1139, 0.0476, 0.4178, 0.0152, 0.2926),
    (0.5212, 0.8249, 0.1429, 0.0558, 0.3908, 0.0118, 0.2119),
    (0.6007, 0.9168, 0.0736, 0.0286, 0.3891, 0.0253, 0.6634),
    (0.5721, 0.8514, 0.1036, 0.0326, 0.3150, 0.0391, 0.7652),
    (0.5427, 0.7452, 0.0921, 0.0407, 0.4416, 0.0400, 0.7795),
    (0.6327, 0.9294, 0.1368, 0.0266, 0.1943, 0.0564, 1.1381),
    (0.4423, 0.5461, 0.0843, 0.0342, 0.4064, 0.0232, 0.6126),
    (0.5334, 0.8436, 0.0879, 0.0360, 0.4099, 0.0165, 0.7408),
    (0.4716, 0.6609, 0.0731, 0.0124, 0.1693, 0.0563, 1.3010),
    (0.5656, 0.7648, 0.0742, 0.0238, 0.3199, 0.1584, 2.2814),
    (0.4436, 1.1095, 0.0474, 0.0217, 0.4579, 0.0296, 0.5734),
    (0.6363, 0.9184, 0.0881, 0.0208, 0.2359, 0.0266, 0.8488),
    (0.5976, 1.0592, 0.0678, 0.0179, 0.2635, 0.0321, 0.8248),
    (0.5463, 0.7063, 0.1757, 0.0488, 0.2781, 0.0604, 0.8705),
)

# B14's C7 entry is published as 1.3010, but the same table's column-best
# row gives 0.1301 for C7 and B14 is named as the C7 minimum. Every
# reported weight, score, rank and stability figure is reproduced only
# with 0.1301, so that is the default.
B14_C7_PUBLISHED = 1.3010
B14_C7_RECONCILED = 0.1301


def load_reference_dataset(as_printed: bool = False) -> DecisionMatrix:
    """The 19 x 7 bank matrix (B1..B19, C1..C7; C6 and C7 are cost criteria).

    ``as_printed=True`` returns the bank rows exactly as published, with
    B14/C7 = 1.3010 instead of the reconciled 0.1301.
    """
    rows = [list(r) for r in _ROWS]
    if not as_printed:
        rows[13][6] = B14_C7_RECONCILED
    return validate_matrix(ALTERNATIVES, CRITERIA, rows, directions=DIRECTIONS)


def reference_csv_path():
    """Path-like handle to the bundled CSV (reconciled values)."""
    return resources.files(__name__).joinpath("banks.csv")
