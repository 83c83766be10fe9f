"""Published census figures that ``verify`` checks against.

Edited only by hand; the numbers are data, not something computed here.
"""

import json

# surface -> edge count -> number of classes
PUBLISHED_COUNTS = {
    "sphere": {1: 2, 2: 4, 4: 26},
    "plane": {1: 2, 2: 6, 3: 25, 4: 55},
}

# edge count -> {face orbits per spherical class: number of classes}
PUBLISHED_DECOMPOSITION = {
    4: {1: 4, 2: 15, 3: 7},
}

# flow structures on the disk with e saddles
PUBLISHED_FLOW_COUNTS = {1: 2, 2: 6, 3: 25, 4: 55}


def default_expectations() -> dict:
    return {
        "sphere": dict(PUBLISHED_COUNTS["sphere"]),
        "plane": dict(PUBLISHED_COUNTS["plane"]),
        "decomposition": {e: dict(h) for e, h in PUBLISHED_DECOMPOSITION.items()},
    }


def load_expectations(path) -> dict:
    """Read an expectation file with the same layout as :func:`default_expectations`.

    JSON object keys are strings; they are converted back to integers.
    """
    with open(path) as fh:
        raw = json.load(fh)
    out = {"sphere": {}, "plane": {}, "decomposition": {}}
    for surface in ("sphere", "plane"):
        out[surface] = {int(k): int(v) for k, v in raw.get(surface, {}).items()}
    for e, hist in raw.get("decomposition", {}).items():
        out["decomposition"][int(e)] = {int(k): int(v) for k, v in hist.items()}
    return out
