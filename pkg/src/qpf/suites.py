"""Seeded verification suites behind the command-line runner.

Every suite function takes a configuration and returns a list of record
dicts {"suite", "instance", "ok", ...} plus a re-seed counter.  Records
are deterministic functions of (config, seed): singular draws bump a
sub-seed and are counted, never silently skipped.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from qpf import btoda, derivatives, skoly
from qpf.moments import random_state
from qpf.ncmatrix import NCMatrix, SingularMinor, block_invert, sylvester_expand
from qpf.pfaffian import (
    cayley_pair,
    det_bareiss,
    perk_residual,
    pfaffian,
    pfaffian_condense,
    pfaffian_labels,
    tanner_residual,
)
from qpf.quasipfaffian import (
    EntryOracle,
    body,
    body_range,
    mom,
    qpf_condense,
    qpf_direct,
    swap_residual,
    zero_condition_values,
)
from qpf.rings import (
    QUATERNION,
    RATIONAL,
    block_ring,
    involute,
    is_zero,
    rand_fraction,
)
from qpf.skewsolve import SkewSystem, jacobi_ratio, residual as solve_residual
from qpf.skewsolve import solve_direct, solve_qpf

RINGS = {"rational": RATIONAL, "quaternion": QUATERNION}


def ring_from_config(name, block_dim=2):
    if name == "block":
        return block_ring(block_dim)
    return RINGS[name]


def _rng(seed, *tags):
    return random.Random(":".join(str(t) for t in (seed,) + tags))


def _skew_fraction_matrix(n, rng):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rand_fraction(rng)
            m[i][j] = v
            m[j][i] = -v
    return m


def _skew_table(ring, labels, rng, zero_diag=False):
    table = {}
    for i in labels:
        table[(i, i)] = ring.zero() if zero_diag else ring.random_skew(rng)
        for j in labels:
            if j > i:
                table[(i, j)] = ring.random(rng)
    return table


def classical_suite(seed, instances=10):
    records = []
    for n in (2, 4, 6, 8, 10):
        for t in range(instances):
            rng = _rng(seed, "pfdet", n, t)
            m = _skew_fraction_matrix(n, rng)
            ok = pfaffian(m) ** 2 == det_bareiss(m)
            ok = ok and pfaffian_condense(m) == pfaffian(m)
            records.append({"suite": "classical", "instance": f"pf-det-{n}-{t}", "ok": ok})
    for core in (0, 2, 4):
        for t in range(instances):
            rng = _rng(seed, "tanner", core, t)
            labels = tuple(range(core + 4))
            table = {k: Fraction(v) for k, v in _skew_table(RATIONAL, labels, rng, True).items()}
            entry = lambda i, j, tb=table: tb[(i, j)] if i <= j else -tb[(j, i)]
            ok = tanner_residual(entry, labels[:core], labels[core:]) == 0
            records.append({"suite": "classical", "instance": f"tanner-{core}-{t}", "ok": ok})
    for m_len, n_len in ((2, 0), (2, 2), (4, 2)):
        for t in range(instances):
            rng = _rng(seed, "perk", m_len, n_len, t)
            labels = tuple(range(m_len + n_len + 2))
            table = {k: Fraction(v) for k, v in _skew_table(RATIONAL, labels, rng, True).items()}
            entry = lambda i, j, tb=table: tb[(i, j)] if i <= j else -tb[(j, i)]
            ok = perk_residual(entry, labels[:m_len + 1], labels[m_len + 1:]) == 0
            records.append({"suite": "classical",
                            "instance": f"compound-{m_len}-{n_len}-{t}", "ok": ok})
    for k, parity in ((1, "even"), (3, "even"), (2, "odd")):
        for t in range(instances):
            rng = _rng(seed, "cayley", k, t)
            bodym = _skew_fraction_matrix(k, rng)
            x_row = [rand_fraction(rng) for _ in range(k)]
            y_col = [rand_fraction(rng) for _ in range(k)]
            corner = rand_fraction(rng) if parity == "even" else Fraction(0)
            lhs, rhs = cayley_pair(bodym, x_row, y_col, corner)
            records.append({"suite": "classical",
                            "instance": f"cayley-{parity}-{k}-{t}", "ok": lhs == rhs})
    return records, 0


def quasipf_suite(seed, ring_names=("rational", "quaternion", "block"),
                  block_dim=2, instances=5, sizes=(2, 4, 6)):
    records = []
    reseeds = 0
    for name in ring_names:
        ring = ring_from_config(name, block_dim)
        for n2 in sizes:
            done = 0
            attempt = 0
            while done < instances:
                rng = _rng(seed, "cond", name, n2, attempt)
                attempt += 1
                table = _skew_table(ring, range(n2 + 2), rng)
                oracle = EntryOracle.from_table(ring, table)
                labels = body_range(n2)
                boxed = (body(n2), body(n2 + 1))
                try:
                    direct = qpf_direct(oracle, labels, boxed)
                    cond = qpf_condense(oracle, labels, boxed)
                except SingularMinor:
                    reseeds += 1
                    continue
                swap = swap_residual(oracle, labels, *boxed)
                z1, z2 = zero_condition_values(oracle, labels, body(0), body(n2))
                ok = cond == direct and is_zero(swap) and is_zero(z1) and is_zero(z2)
                records.append({"suite": "quasipf",
                                "instance": f"cond-{name}-{n2}-{attempt - 1}", "ok": ok})
                done += 1
    # three-ring bordered expansion identity
    for name in ring_names:
        ring = ring_from_config(name, block_dim)
        done = 0
        attempt = 0
        while done < instances:
            rng = _rng(seed, "sylv", name, attempt)
            attempt += 1
            core = NCMatrix([[ring.random(rng) for _ in range(2)] for _ in range(2)])
            rows = [[ring.random(rng) for _ in range(2)] for _ in range(3)]
            cols = [[ring.random(rng) for _ in range(2)] for _ in range(3)]
            corner = [[ring.random(rng) for _ in range(3)] for _ in range(3)]
            try:
                lhs, rhs = sylvester_expand(core, rows, cols, corner)
            except SingularMinor:
                reseeds += 1
                continue
            records.append({"suite": "quasipf",
                            "instance": f"sylvester-{name}-{attempt - 1}",
                            "ok": lhs == rhs})
            done += 1
    return records, reseeds


def ratio_suite(seed, instances=10, sizes=(2, 4, 6)):
    """Commutative bordered values against classical Pfaffian ratios."""
    records = []
    reseeds = 0
    for n2 in sizes:
        done = 0
        attempt = 0
        while done < instances:
            rng = _rng(seed, "ratio", n2, attempt)
            attempt += 1
            table = _skew_table(RATIONAL, range(n2 + 2), rng, zero_diag=True)
            oracle = EntryOracle.from_table(RATIONAL, table)
            entry = lambda i, j, tb=table: tb[(i, j)] if i <= j else -tb[(j, i)]
            denom = pfaffian_labels(entry, range(n2))
            if denom == 0:
                reseeds += 1
                continue
            got = qpf_direct(oracle, body_range(n2), (body(n2), body(n2 + 1)))
            ok = got == pfaffian_labels(entry, range(n2 + 2)) / denom
            records.append({"suite": "ratio", "instance": f"ratio-{n2}-{attempt - 1}",
                            "ok": ok})
            done += 1
    return records, reseeds


def derivative_suite(seed, ring_name="block", block_dim=2, ns=(1, 2), seeds_per_n=3):
    ring = ring_from_config(ring_name, block_dim)
    reports, reseeds = derivatives.verify_suite(
        ring, ns=ns, seeds_per_n=seeds_per_n, seed_base=seed)
    by_key = {}
    for rep in reports:
        key = (rep.law, rep.n, rep.seed)
        by_key.setdefault(key, True)
        by_key[key] = by_key[key] and rep.ok
    records = [{"suite": "derivatives",
                "instance": f"{law}-n{n}-{s}", "ok": ok}
               for (law, n, s), ok in sorted(by_key.items(),
                                             key=lambda kv: str(kv[0]))]
    return records, reseeds


def btoda_suite(seed, ring_name="block", block_dim=2, ns=(1, 2), seeds_per_n=3,
                nodes=None):
    ring = ring_from_config(ring_name, block_dim)
    records = []
    reseeds = 0
    for n in ns:
        produced = 0
        attempt = 0
        while produced < seeds_per_n:
            tag = f"{seed}:latt:{n}:{attempt}"
            attempt += 1
            k = nodes or (2 * n + 2)
            state = random_state(ring, k, tag)
            try:
                residuals = btoda.verify_level(state, n)
            except SingularMinor:
                reseeds += 1
                continue
            ok = all(is_zero(r) for r in residuals)
            records.append({"suite": "btoda", "instance": f"lattice-n{n}-{attempt - 1}",
                            "ok": ok})
            produced += 1
    # commutative bilinear reduction
    for n in ns:
        for t in range(seeds_per_n):
            state = random_state(RATIONAL, 2 * n + 2, f"{seed}:bilin:{n}:{t}")
            res = btoda.bilinear_residuals(state.measure, n)
            red = btoda.reduction_residuals(state, n)
            ok = all(r.is_zero() for r in res) and all(r == 0 for r in red)
            records.append({"suite": "btoda", "instance": f"bilinear-n{n}-{t}", "ok": ok})
    return records, reseeds


def sop_suite(seed, ring_name="block", block_dim=2, nmax=2, instances=2):
    ring = ring_from_config(ring_name, block_dim)
    records = []
    reseeds = 0
    produced = 0
    attempt = 0
    while produced < instances:
        tag = f"{seed}:sop:{attempt}"
        attempt += 1
        state = random_state(ring, 2 * nmax + 2, tag)
        try:
            fam = skoly.PolyFamily(state, nmax)
            residuals = (skoly.verify_orthogonality(fam)
                         + skoly.verify_derivative_formulas(fam)
                         + skoly.verify_spectral(fam)
                         + skoly.verify_recurrences(fam))
        except SingularMinor:
            reseeds += 1
            continue
        ok = all(is_zero(r) for r in residuals)
        records.append({"suite": "sop", "instance": f"family-{attempt - 1}", "ok": ok})
        produced += 1
    return records, reseeds


def solve_suite(seed, ring_names=("rational", "quaternion", "block"), block_dim=2,
                sizes=(2, 4, 6), instances=3):
    records = []
    reseeds = 0
    for name in ring_names:
        ring = ring_from_config(name, block_dim)
        for n in sizes:
            done = 0
            attempt = 0
            while done < instances:
                rng = _rng(seed, "solve", name, n, attempt)
                attempt += 1
                data = [[ring.zero()] * n for _ in range(n)]
                for i in range(n):
                    data[i][i] = ring.random_skew(rng)
                    for j in range(i + 1, n):
                        a = ring.random(rng)
                        data[i][j] = a
                        data[j][i] = -involute(a)
                rhs = [ring.random(rng) for _ in range(n)]
                system = SkewSystem(NCMatrix(data), rhs)
                try:
                    direct = solve_direct(system)
                    viaqpf = solve_qpf(system)
                except SingularMinor:
                    reseeds += 1
                    continue
                ok = direct == viaqpf and all(
                    is_zero(r) for r in solve_residual(system, direct))
                records.append({"suite": "solve",
                                "instance": f"solve-{name}-{n}-{attempt - 1}", "ok": ok})
                done += 1
    return records, reseeds


SUITES = {
    "classical": classical_suite,
    "quasipf": quasipf_suite,
    "ratio": ratio_suite,
    "derivatives": derivative_suite,
    "btoda": btoda_suite,
    "sop": sop_suite,
    "solve": solve_suite,
}


def run_suites(names, seed):
    """Run the named suites; returns (records, reseeds)."""
    records = []
    reseeds = 0
    for name in names:
        recs, rs = SUITES[name](seed)
        records.extend(recs)
        reseeds += rs
    records.sort(key=lambda r: (r["suite"], r["instance"]))
    return records, reseeds
