"""JSON encodings for ring elements, matrices, systems and measures.

Scalars: rationals are strings "p/q", quaternions are 4-arrays of
rational strings, blocks are nested arrays of rational strings.
Matrices: {"ring": "rational"|"quaternion"|"block", "block_dim": m?,
"rows": r, "cols": c, "entries": [[...]]}.  Systems add "rhs"; measures
use {"ring", "block_dim"?, "nodes", "weights", "snapshot"}.
"""

from __future__ import annotations

from fractions import Fraction

from qpf.moments import DiscreteMeasure, MomentState
from qpf.ncmatrix import NCMatrix
from qpf.rings import BlockMatrix, Quaternion, Ring
from qpf.skewsolve import SkewSystem


def fraction_to_json(x):
    return f"{x.numerator}/{x.denominator}"


def fraction_from_json(s):
    return Fraction(s)


def elem_to_json(x):
    if isinstance(x, Fraction):
        return fraction_to_json(x)
    if isinstance(x, Quaternion):
        return [fraction_to_json(c) for c in x.components()]
    if isinstance(x, BlockMatrix):
        return [[fraction_to_json(c) for c in row] for row in x.rows]
    raise TypeError(f"cannot encode {type(x).__name__}")


def elem_from_json(ring, data):
    if ring.name == "rational":
        return fraction_from_json(data)
    if ring.name == "quaternion":
        return Quaternion(*(fraction_from_json(c) for c in data))
    block = BlockMatrix([[fraction_from_json(c) for c in row] for row in data])
    if block.dim != ring.block_dim:
        raise ValueError(f"expected block dim {ring.block_dim}, got {block.dim}")
    return block


def ring_to_json(ring):
    out = {"ring": ring.name}
    if ring.block_dim:
        out["block_dim"] = ring.block_dim
    return out


def ring_from_json(data):
    return Ring(data["ring"], data.get("block_dim"))


def matrix_to_json(ring, m):
    out = ring_to_json(ring)
    out.update({
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[elem_to_json(x) for x in row] for row in m.data],
    })
    return out


def matrix_from_json(data):
    ring = ring_from_json(data)
    entries = [[elem_from_json(ring, x) for x in row] for row in data["entries"]]
    m = NCMatrix(entries)
    if m.rows != data.get("rows", m.rows) or m.cols != data.get("cols", m.cols):
        raise ValueError("declared shape does not match entries")
    return ring, m


def system_to_json(ring, system):
    out = matrix_to_json(ring, system.matrix)
    out["rhs"] = [elem_to_json(x) for x in system.rhs]
    return out


def system_from_json(data):
    ring, m = matrix_from_json(data)
    rhs = [elem_from_json(ring, x) for x in data["rhs"]]
    return ring, SkewSystem(m, rhs)


def measure_to_json(state):
    meas = state.measure
    out = ring_to_json(meas.ring)
    out.update({
        "nodes": [fraction_to_json(x) for x in meas.nodes],
        "weights": [elem_to_json(w) for w in meas.weights],
        "snapshot": [fraction_to_json(v) for v in state.snapshot],
    })
    return out


def measure_from_json(data):
    ring = ring_from_json(data)
    nodes = [fraction_from_json(x) for x in data["nodes"]]
    weights = [elem_from_json(ring, w) for w in data["weights"]]
    measure = DiscreteMeasure(ring, nodes, weights)
    snapshot = [fraction_from_json(v) for v in data["snapshot"]]
    return MomentState(measure, snapshot)
