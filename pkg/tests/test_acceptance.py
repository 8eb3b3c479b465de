"""Acceptance criteria, one test each.

Every test appends a ``PASS``/``FAIL`` line (with its runtime and budget) that
is printed in the pytest terminal summary.  Run the file directly to get the
same lines without pytest's own output::

    python tests/test_acceptance.py
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from worked_tables import ALL as WORKED  # noqa: E402

from kpotent.bruteforce import brute_force_count, brute_force_potents  # noqa: E402
from kpotent.counting import (count_triangular, num_scalars, rhombus_count, slowik_equiv_check,  # noqa: E402
                              star_count, y_count)
from kpotent.field import char_divisibility_guard, parse_field, potent_codes, primitive_kth_root  # noqa: E402
from kpotent.incmat import is_potent, lemma21_power_blocks, power_blocks, random_matrix  # noqa: E402
from kpotent.poset import poset_chain, poset_rhombus, poset_star, poset_y  # noqa: E402
from kpotent.potent import (DiagonalAssignment, complete_potent, count_by_construction,  # noqa: E402
                            enumerate_potents, free_slots)
from kpotent.tables import check_table, load_table, render_table  # noqa: E402


class Criterion:
    def __init__(self, number, title, budget=None):
        self.number, self.title, self.budget = number, title, budget
        self.notes: list[str] = []
        self.ok = True

    def check(self, cond, note):
        if not cond:
            self.ok = False
            self.notes.append(note)


@contextmanager
def criterion(number, title, budget=None):
    c = Criterion(number, title, budget)
    t0 = time.perf_counter()
    try:
        yield c
    except Exception as exc:
        c.ok = False
        c.notes.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed >= budget:
        c.ok = False
        c.notes.append(f"over budget ({elapsed:.2f}s >= {budget}s)")
    timing = f"{elapsed:.2f}s" + (f" / {budget}s" if budget is not None else "")
    line = f"{'PASS' if c.ok else 'FAIL'} [{number:>2}] {title} ({timing})"
    if c.notes:
        line += ": " + "; ".join(c.notes)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert c.ok, line


def _table_ok(c, tid):
    rep = check_table(load_table(tid))
    c.check(rep.ok, render_table(rep).replace("\n", " | "))
    return rep


def test_c01_table4():
    with criterion(1, "star_P(m,3), m=3..7 against Table 4", budget=1.0) as c:
        rep = _table_ok(c, 4)
        c.check(str(rep.computed[0]) == "12q^5+6q^4+8q^3+1", f"m=3 gives {rep.computed[0]}")
        if c.ok and rep.diffs:
            c.notes.append(f"{len(rep.diffs)} adjudicated erratum term(s)")


def test_c02_tables_5_to_7():
    with criterion(2, "star_P(m,s), s=4,5,6 against Tables 5-7", budget=5.0) as c:
        n_diffs = sum(len(_table_ok(c, tid).diffs) for tid in (5, 6, 7))
        if c.ok:
            c.notes.append(f"{n_diffs} adjudicated erratum term(s)")


def test_c03_rhombus():
    with criterion(3, "rhombus_count(2,2,3) anchors and Tables 9-11") as c:
        r = rhombus_count(2, 2, 3)
        c.check(r.leading == (12, 10), f"leading term {r.leading}")
        c.check(r.coeff(0) == 3, f"constant term {r.coeff(0)}")
        for tid in (9, 10, 11):
            rep = _table_ok(c, tid)
            c.check(not rep.diffs, f"table {tid} diffs {[str(d) for d in rep.diffs]}")


def test_c04_y():
    with criterion(4, "y_count(3,3,3,3) anchors and the Y table") as c:
        y = y_count(3, 3, 3, 3)
        c.check(y.leading == (270, 22), f"leading term {y.leading}")
        c.check(y.coeff(0) == 3 and y.coeff(5) == 36, f"low terms {y.coeff(5)}q^5, {y.coeff(0)}")
        rep = _table_ok(c, 12)
        c.check(not rep.diffs, f"diffs {[str(d) for d in rep.diffs]}")


def test_c05_slowik():
    with criterion(5, "slowik_equiv_check(6,5)", budget=1.0) as c:
        rep = slowik_equiv_check(6, 5)
        c.check(rep.ok, f"counterexample {rep.counterexample}")
        if c.ok:
            c.notes.append(f"{rep.checked} identities")


ORACLE_CASES = [
    ("chain(2)", poset_chain(2), "3", 1, 8),
    ("chain(3)", poset_chain(3), "3", 1, None),
    ("chain(2)", poset_chain(2), "5", 2, None),
    ("chain(3)", poset_chain(3), "5", 2, None),
    ("chain(2)", poset_chain(2), "7", 2, None),
    ("chain(3)", poset_chain(3), "7", 2, None),
    ("diamond", poset_rhombus(1, 1), "5", 2, None),
    ("Y(1,1,1)", poset_y(1, 1, 1), "5", 2, None),
    ("star(1,[1])", poset_star(1, [1]), "5", 2, None),
]


def _formula(name, poset, s, q):
    if name.startswith("chain"):
        return count_triangular(poset.n, s, q)
    if name == "diamond":
        return rhombus_count(1, 1, s, q)
    if name.startswith("Y"):
        return y_count(1, 1, 1, s, q)
    return star_count(1, [1], s, q)


def test_c06_oracle():
    with criterion(6, "brute force = closed form on the oracle cases", budget=60.0) as c:
        seen = []
        for name, poset, fname, k, expect in ORACLE_CASES:
            f = parse_field(fname)
            oracle = brute_force_count(poset, f, k)
            formula = _formula(name, poset, num_scalars(f, k), f.q)
            built = count_by_construction(poset, f, k)
            c.check(oracle == formula == built,
                    f"{name} GF({fname}) k={k}: oracle {oracle}, formula {formula}, built {built}")
            if expect is not None:
                c.check(oracle == expect, f"{name} GF({fname}) k={k}: expected {expect}, got {oracle}")
            seen.append(f"{name}/GF({fname})/k={k}={oracle}")
        if c.ok:
            c.notes.append(", ".join(seen))


SOUNDNESS_POSETS = [poset_chain(n) for n in range(2, 7)] + [
    poset_star(1, [1]), poset_star(2, [1, 2]), poset_rhombus(1, 1), poset_y(1, 1, 1), poset_y(2, 1, 2)]


def test_c07_soundness():
    with criterion(7, "1000 random complete_potent outputs are potent", budget=30.0) as c:
        combos = list(itertools.product(["4", "5", "7", "9"], range(1, 6)))
        allowed = [(fn, k) for fn, k in combos if char_divisibility_guard(parse_field(fn), k)]
        rng = random.Random(7)
        done = failures = 0
        per_field = dict.fromkeys(["4", "5", "7", "9"], 0)
        while done < 1000:
            fname, k = rng.choice(allowed)
            f, poset = parse_field(fname), rng.choice(SOUNDNESS_POSETS)
            d = DiagonalAssignment(poset, f, k, [rng.choice(potent_codes(f, k)) for _ in range(poset.n)])
            a = complete_potent(d, {ij: rng.randrange(f.q) for ij in free_slots(d)})
            failures += not is_potent(a, k)
            per_field[fname] += 1
            done += 1
        c.check(failures == 0, f"{failures} outputs not potent")
        if c.ok:
            skipped = sorted({fn for fn, _ in combos} - {fn for fn, _ in allowed})
            c.notes.append(f"instances per field {per_field}; guard excludes every k for GF({', GF('.join(skipped)})")


def test_c08_bijection():
    with criterion(8, "construction set = brute-force set on chain(3), GF(5), k=2") as c:
        f, poset = parse_field("5"), poset_chain(3)
        built = list(enumerate_potents(poset, f, 2))
        found = set(brute_force_potents(poset, f, 2))
        expect = count_triangular(3, num_scalars(f, 2), f.q)
        c.check(len(built) == len(set(built)), "construction produced duplicates")
        c.check(set(built) == found, f"sets differ: {len(set(built) ^ found)} elements")
        c.check(len(found) == expect, f"{len(found)} elements, count_triangular gives {expect}")
        if c.ok:
            c.notes.append(f"{len(found)} elements = count_triangular(3,3) at q=5")


def test_c09_corner_blocks():
    with criterion(9, "closed-form corner blocks = blocks of A^(k+1), 1000 samples", budget=5.0) as c:
        rng = random.Random(9)
        fields = [parse_field(x) for x in ("5", "7", "4")]
        bad = 0
        for _ in range(1000):
            f, n, k = rng.choice(fields), rng.choice([3, 4, 5]), rng.randint(1, 5)
            a = random_matrix(poset_chain(n), f, rng)
            bad += lemma21_power_blocks(a, k) != power_blocks(a, k)
        c.check(bad == 0, f"{bad} mismatches")


def _corner_runs(w, f, rng, runs):
    """Complete with random free values; yield (letter values, computed target) per run."""
    diag = [f.zero if e is None else primitive_kth_root(f, w.k) ** e for e in w.diag]
    d = DiagonalAssignment(poset_chain(len(diag)), f, w.k, diag)
    slots = free_slots(d)
    named = {(i - 1, j - 1) for i, j in w.free.values()}
    assert named == set(slots), f"free pairs {sorted(slots)} vs named {sorted(named)}"
    seen = set()
    while len(seen) < runs:
        vals = tuple(rng.randrange(f.q) for _ in slots)
        if vals in seen:
            continue
        seen.add(vals)
        a = complete_potent(d, dict(zip(slots, vals)))
        letters = {L: a[(i - 1, j - 1)] for L, (i, j) in w.free.items()}
        yield a, letters


def test_c10_worked_tables():
    with criterion(10, "worked corner entries of Tables 1-3") as c:
        rng = random.Random(10)
        matched = errata = 0
        for w in WORKED:
            for fname in (("9", "13") if w.k == 4 else ("7", "13")):
                f = parse_field(fname)
                omega = primitive_kth_root(f, w.k)
                where = f"Table {w.table} diag {w.diag} GF({fname})"
                # two runs with distinct free values, then a few more for safety
                for a, v in _corner_runs(w, f, rng, runs=8):
                    c.check(is_potent(a, w.k), f"{where}: completion not potent")
                    if w.target is None:
                        continue
                    got = a[(w.target[0] - 1, w.target[1] - 1)]
                    printed = w.formula(omega, v)
                    if w.erratum:
                        # the printed value must fail; the oracle rejects it when it differs
                        if printed != got:
                            bad = a.with_entries({(w.target[0] - 1, w.target[1] - 1): printed.code})
                            c.check(not is_potent(bad, w.k), f"{where}: printed value also potent")
                            errata += 1
                    else:
                        c.check(got == printed, f"{where}: computed {got}, printed {printed}")
                        matched += 1
        c.check(errata > 0, "recorded erratum did not reproduce")
        if c.ok:
            c.notes.append(f"{matched} corner evaluations match; Table 3 (2,4) printed as hl "
                           f"rejected by is_potent in {errata} runs")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
