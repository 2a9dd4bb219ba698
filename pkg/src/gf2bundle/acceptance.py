"""End-to-end verification suite behind ``gf2bundle selftest``.

Every check returns ``(passed, detail)``; ``run_checks`` times them and
turns exceptions into failures.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import chow
from .bipoly import h0_line
from .enriques import (
    F_SINGULAR,
    SUPERSINGULAR,
    DEFAULT_SEED,
    WVector,
    classify,
    half_fibers,
    ideal_from_section,
    ideal_from_w,
    match_w,
    minimal_zeroscheme,
    reducible_model,
    restrict_to_A,
    sample_surfaces,
    smooth_check,
)
from .groebner import codim, hilbert_function, ideal_equal, sat_irrelevant
from .sheafcoh import _gf2_points, cohomology_table, hf_ideal_oracle, jumping_line, linear_form, monad_cohomology_dims, random_section

A_RANGE = (-5, 4)
B_RANGE = (-5, 3)

# nonzero entries of the published tables of h^i E(a, b); all others vanish
H0_TABLE = {
    (-1, 0): 3, (-1, 1): 9, (-1, 2): 17, (-1, 3): 27,
    (0, -1): 3, (0, 0): 19, (0, 1): 42, (0, 2): 72, (0, 3): 109,
    (1, -1): 9, (1, 0): 42, (1, 1): 89, (1, 2): 150, (1, 3): 225,
    (2, -1): 17, (2, 0): 72, (2, 1): 150, (2, 2): 251, (2, 3): 375,
    (3, -1): 27, (3, 0): 109, (3, 1): 225, (3, 2): 375, (3, 3): 559,
    (4, -1): 39, (4, 0): 153, (4, 1): 314, (4, 2): 522, (4, 3): 777,
}
H1_TABLE = {
    (-4, -1): 1, (-4, 0): 3, (-4, 1): 6, (-4, 2): 10, (-4, 3): 15,
    (-3, -1): 3, (-3, 0): 8, (-3, 1): 15, (-3, 2): 24, (-3, 3): 35,
    (-2, -2): 1, (-2, -1): 3, (-2, 0): 6, (-2, 1): 10, (-2, 2): 15, (-2, 3): 21,
    (-1, -4): 1, (-1, -3): 3, (-1, -2): 3, (-1, -1): 1,
    (0, -4): 3, (0, -3): 8, (0, -2): 6,
    (1, -4): 6, (1, -3): 15, (1, -2): 10,
    (2, -4): 10, (2, -3): 24, (2, -2): 15,
    (3, -4): 15, (3, -3): 35, (3, -2): 21,
    (4, -4): 21, (4, -3): 48, (4, -2): 28,
}
H2_TABLE = {
    (-5, -1): 3, (-5, 0): 9, (-5, 1): 17, (-5, 2): 27, (-5, 3): 39,
    (-3, -3): 1,
    (-1, -5): 3, (0, -5): 9, (1, -5): 17, (2, -5): 27, (3, -5): 39, (4, -5): 53,
}
H3_TABLE = {
    (-5, -5): 1, (-5, -4): 3, (-5, -3): 3, (-5, -2): 1,
    (-4, -5): 3, (-4, -4): 1, (-3, -5): 3, (-2, -5): 1,
}
PUBLISHED = (H0_TABLE, H1_TABLE, H2_TABLE, H3_TABLE)

EXAMPLE_W = "b+c,b+c,x+z,a+c,z,y,1"
EXAMPLE_D_L = "a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3"
EXAMPLE_D_H = "y^3+x^2*z+x*y*z+x*z^2+z^3"

SAMPLE_COUNT = 50


def grid() -> list[tuple[int, int]]:
    return [(a, b) for a in range(A_RANGE[0], A_RANGE[1] + 1) for b in range(B_RANGE[0], B_RANGE[1] + 1)]


def published_dims(a: int, b: int) -> tuple[int, int, int, int, int]:
    return tuple(t.get((a, b), 0) for t in PUBLISHED) + (0,)


_table_cache: dict = {}


def computed_table() -> dict:
    if not _table_cache:
        _table_cache.update(cohomology_table(*A_RANGE, *B_RANGE))
    return _table_cache


def _in_grid(a: int, b: int) -> bool:
    return A_RANGE[0] <= a <= A_RANGE[1] and B_RANGE[0] <= b <= B_RANGE[1]


# ----------------------------------------------------------------- checks


def check_tables(seed: int):
    t0 = time.perf_counter()
    T = computed_table()
    elapsed = time.perf_counter() - t0
    bad = [(ab, T[ab], published_dims(*ab)) for ab in grid() if T[ab] != published_dims(*ab)]
    if bad:
        return False, f"{len(bad)} mismatches, first {bad[0]}"
    if elapsed > 120:
        return False, f"grid took {elapsed:.1f}s > 120s"
    return True, f"{len(T)} cells match, h^4 = 0, {elapsed:.2f}s"


def check_vanishing(seed: int):
    T = computed_table()
    if T[(0, 0)][0] != 19:
        return False, f"h^0 E = {T[(0, 0)][0]}"
    bad = [ab for ab, d in T.items() if ab[0] >= 0 and ab[1] >= 0 and any(d[1:])]
    return not bad, "h^0 E = 19, higher cohomology vanishes on a,b >= 0" if not bad else f"nonzero at {bad}"


def check_chi(seed: int):
    T = computed_table()
    for (a, b), d in T.items():
        chi = chow.chi_E(a, b)
        alt = d[0] - d[1] + d[2] - d[3] + d[4]
        if alt != chi:
            return False, f"alternating sum {alt} != chi {chi} at ({a},{b})"
    spots = {(0, 0): 19, (-1, -1): -1, (1, 1): 89}
    got = {ab: chow.chi_E(*ab) for ab in spots}
    return got == spots, f"spot values {got}"


def check_serre(seed: int):
    T = computed_table()
    pairs = 0
    for (a, b), d in T.items():
        a2, b2 = -6 - a, -6 - b
        if not _in_grid(a2, b2):
            continue
        pairs += 1
        dual = T[(a2, b2)]
        if any(d[i] != dual[4 - i] for i in range(5)):
            return False, f"h^i E({a},{b}) != h^(4-i) E({a2},{b2})"
    return T[(-1, -2)][1] == 3 == T[(-5, -4)][3], f"{pairs} dual pairs agree"


def check_chern(seed: int):
    t0 = time.perf_counter()
    c0 = chow.chern_E0()
    want0 = chow.ChowClass.from_dict({(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 2, (0, 2): 2, (1, 1): 1})
    _, c2 = chow.chern_twisted(0, 0)
    _, c2m = chow.chern_twisted(-1, 0)
    ok = (
        c0 == want0
        and c2 == chow.ChowClass.from_dict({(2, 0): 4, (1, 1): 5, (0, 2): 4})
        and c2m == chow.ChowClass.from_dict({(2, 0): 2, (1, 1): 2, (0, 2): 4})
    )
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 1, f"c(E0) = {c0}, c2(E) = {c2}, c2(E(-1,0)) = {c2m}, {elapsed * 1000:.1f}ms"


def check_betti(seed: int):
    bad = []
    for m in range(-2, 5):
        for n in range(-2, 5):
            if chow.resolution_hf(m, n) != monad_cohomology_dims(m, n)[0]:
                bad.append((m, n))
    return not bad, "resolution Hilbert function equals h^0 E on [-2,4]^2" if not bad else f"mismatch at {bad}"


def check_example(seed: int):
    t0 = time.perf_counter()
    w = WVector.parse(EXAMPLE_W)
    I = sat_irrelevant(ideal_from_w(w))
    cd = codim(I)
    smooth = smooth_check(I)
    H = half_fibers(I)
    cls = classify(w, smooth=smooth)
    elapsed = time.perf_counter() - t0
    ok = (
        cd == 2
        and smooth
        and str(H.D_L) == EXAMPLE_D_L
        and str(H.D_h) == EXAMPLE_D_H
        and cls == F_SINGULAR
        and elapsed <= 180
    )
    return ok, f"codim {cd}, smooth {smooth}, D_L {H.D_L}, D_h {H.D_h}, {cls}, {elapsed:.1f}s"


def check_constructions(seed: int):
    rng = random.Random(seed)
    for i in range(5):
        v = random_section(0, 0, rng)
        I = sat_irrelevant(ideal_from_section(v))
        w = match_w(I)
        if not ideal_equal(sat_irrelevant(ideal_from_w(w)), I):
            return False, f"section {i}: ideals differ"
    return True, "5 sections: minors route equals matrix route"


def _smooth_samples(seed: int) -> list:
    return [(w, I) for w, I, smooth in sample_surfaces(SAMPLE_COUNT, seed) if smooth]


_sample_cache: dict = {}


def smooth_samples(seed: int) -> list:
    if seed not in _sample_cache:
        _sample_cache[seed] = _smooth_samples(seed)
    return _sample_cache[seed]


def check_oracle(seed: int):
    samples = smooth_samples(seed)[:3]
    if len(samples) < 3:
        return False, f"only {len(samples)} smooth samples"
    for w, I in samples:
        for a in range(6):
            for b in range(6):
                got = h0_line(a, b) - hilbert_function(I, a, b)
                if got != hf_ideal_oracle(0, 0, a, b):
                    return False, f"w = {w}: ideal dimension {got} at ({a},{b})"
    return True, "3 smooth surfaces match the oracle on [0..5]^2"


def check_classifier(seed: int):
    samples = smooth_samples(seed)
    kinds = set()
    for w, I in samples:
        h = 1 if w.h else 0
        cls = classify(w, smooth=True)
        kinds.add(cls)
        if (cls == SUPERSINGULAR) != (h == 0):
            return False, f"w = {w}: {cls} with h = {h}"
        H = half_fibers(I)
        p, q = restrict_to_A(w)
        coeffs = (H.D_L.coefficient("a*b*c"), H.D_h.coefficient("x*y*z"), p.coefficient("a*b*c"), q.coefficient("x*y*z"))
        if any(c != h for c in coeffs):
            return False, f"w = {w}: coefficients {coeffs} with h = {h}"
    ok = kinds == {F_SINGULAR, SUPERSINGULAR}
    return ok, f"{len(samples)} smooth samples, classes seen {sorted(kinds)}"


def check_jumping(seed: int):
    for pt in _gf2_points():
        got = jumping_line(pt)
        if got != linear_form(pt):
            return False, f"point {pt}: jumping line {got}"
    return True, "7 points: jumping line is f(., x)"


def check_reducible(seed: int):
    r = reducible_model("a", "b", "c")
    ok = r.class_Y1 == (1, 2, 4) and r.class_Y2 == (3, 3, 0) and r.f_in_Y2 and r.classification == SUPERSINGULAR
    return ok, f"[Y1] {r.class_Y1}, [Y2] {r.class_Y2}, f in Y2 {r.f_in_Y2}, {r.classification}"


def check_minimal(seed: int):
    r = minimal_zeroscheme(1, 0, 0)
    ok = r.cycle_class == (2, 2, 4) and not r.smooth and r.witness is not None
    return ok, f"class {r.cycle_class}, smooth {r.smooth}, witness {r.witness}"


CHECKS: tuple[tuple[int, str, Callable], ...] = (
    (1, "cohomology tables", check_tables),
    (2, "h0 E = 19 and vanishing", check_vanishing),
    (3, "Euler characteristics", check_chi),
    (4, "Serre duality", check_serre),
    (5, "Chern classes", check_chern),
    (6, "resolution Hilbert function", check_betti),
    (7, "worked example surface", check_example),
    (8, "construction equivalence", check_constructions),
    (9, "oracle Hilbert functions", check_oracle),
    (10, "classifier", check_classifier),
    (11, "jumping lines", check_jumping),
    (12, "reducible model", check_reducible),
    (13, "minimal zero scheme", check_minimal),
)


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed, "detail": self.detail}


def run_check(number: int, seed: int = DEFAULT_SEED) -> CheckResult:
    _, title, fn = next(c for c in CHECKS if c[0] == number)
    t0 = time.perf_counter()
    try:
        passed, detail = fn(seed)
    except Exception as exc:  # a crash is a failed check, reported with its message
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(number, title, bool(passed), detail, time.perf_counter() - t0)


def run_checks(numbers: Optional[Iterable[int]] = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    wanted = [c[0] for c in CHECKS] if numbers is None else list(numbers)
    return [run_check(n, seed) for n in wanted]
