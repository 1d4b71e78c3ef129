"""Verification suites tying the combinatorial families to the closure machinery.

Each check returns a VerificationReport with a status of "pass", "fail", or
"inconclusive", witness strings for the first few failures, and counters.
The converse half of the image check can only be sampled at finite generator
bounds, so a candidate that satisfies every sampled inequality without being
reachable is reported as inconclusive rather than as a silent pass.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .root_data import AdaptedSequence, p_table
from .lattice_crystal import (
    LatticeElement,
    enumerate_image,
    epsilon,
    etilde,
    ftilde,
    phi,
    sigma,
    weight_coeffs,
)
from .forms import (
    LinearForm,
    beta_index,
    beta_pair,
    check_xi_positivity,
    closure,
    evaluate,
)
from . import eyd as eyd_mod
from . import reyd as reyd_mod
from . import young_wall as wall_mod

MAX_WITNESSES = 10


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str
    counts: Dict[str, int] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "counts": self.counts,
            "witnesses": self.witnesses,
        }

    def summary(self) -> str:
        counts = " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"{self.check}: {self.status} ({counts})"


def _note(witnesses: List[str], message: str) -> None:
    if len(witnesses) < MAX_WITNESSES:
        witnesses.append(message)


def generator_kinds(seq: AdaptedSequence) -> List[Tuple[str, int]]:
    """The (kind, charge) pairs whose assignment images generate the system."""
    fam = seq.root_system.algebra.family
    n = seq.root_system.n
    if fam in ("A1", "D2"):
        return [("eyd", k) for k in range(1, n + 1)]
    if fam == "A2":
        return [("wall", 1)] + [("reyd", k) for k in range(2, n + 1)]
    return [("wall", 1), ("wall", n)] + [("reyd", k) for k in range(2, n)]


def _reyd_flavor(seq: AdaptedSequence) -> str:
    return "A2" if seq.root_system.algebra.family == "A2" else "D2target"


def _wall_kind(seq: AdaptedSequence, k: int) -> wall_mod.WallKind:
    fam = seq.root_system.algebra.family
    family = "A2wall" if fam == "A2" else "D2wall"
    return wall_mod.WallKind(family, seq.root_system.n, k)


def generator_objects(seq: AdaptedSequence, kind: str, k: int, size_bound: int) -> list:
    """Generator objects of the given kind with at most size_bound toggle steps."""
    n = seq.root_system.n
    if kind == "eyd":
        return eyd_mod.enumerate_eyd(k, size_bound)
    if kind == "reyd":
        return reyd_mod.enumerate_reyd(_reyd_flavor(seq), n, k, size_bound)
    walls = wall_mod.enumerate_walls(_wall_kind(seq, k), 2 * size_bound)
    return [Y for Y in walls if Y.block_count() <= size_bound]


def generator_form(seq: AdaptedSequence, kind: str, obj, s: int) -> LinearForm:
    if kind == "eyd":
        fam = seq.root_system.algebra.family
        if fam == "A1":
            return eyd_mod.assign_a1(seq, obj, s)
        return eyd_mod.assign_d2(seq, obj, s)
    if kind == "reyd":
        return reyd_mod.assign(seq, obj, s)
    return wall_mod.assign_wall(seq, obj, s)


def generator_forms(seq: AdaptedSequence, size_bound: int, s_values: Iterable[int]) -> set:
    """The sampled inequality system over all kinds, charges, and base offsets."""
    out = set()
    for kind, k in generator_kinds(seq):
        for obj in generator_objects(seq, kind, k, size_bound):
            for s in s_values:
                out.add(generator_form(seq, kind, obj, s))
    return out


def check_step_identities(
    seq: AdaptedSequence,
    s_values: Sequence[int] = (1, 2),
    size_bound: int = 6,
    wall_halves: int = 8,
) -> VerificationReport:
    """Every legal toggle shifts the assigned form by exactly minus or plus beta."""
    fam = seq.root_system.algebra.family
    n = seq.root_system.n
    checked = 0
    witnesses: List[str] = []

    def expect_match(label: str, actual: LinearForm, expected: LinearForm) -> None:
        nonlocal checked
        checked += 1
        if actual != expected:
            _note(witnesses, f"{label}: got {actual}, expected {expected}")

    for kind, k in generator_kinds(seq):
        if kind == "eyd":
            fold_kind = "overline" if fam == "A1" else "pi"
            assigner = eyd_mod.assign_a1 if fam == "A1" else eyd_mod.assign_d2
            for T in eyd_mod.enumerate_eyd(k, size_bound):
                for corner in eyd_mod.corners(T):
                    for s in s_values:
                        base = assigner(seq, T, s)
                        if corner.kind == "concave":
                            T2 = eyd_mod.toggle_concave(T, corner)
                            occ, color = eyd_mod.corner_address(
                                seq, k, corner.x, corner.y, fold_kind, s
                            )
                            expected = base - beta_pair(seq, occ, color)
                        else:
                            T2 = eyd_mod.toggle_convex(T, corner)
                            occ, color = eyd_mod.corner_address(
                                seq, k, corner.x - 1, corner.y + 1, fold_kind, s
                            )
                            expected = base + beta_pair(seq, occ, color)
                        expect_match(
                            f"eyd k={k} {corner} s={s} of {T.ys}", assigner(seq, T2, s), expected
                        )
        elif kind == "reyd":
            variant = "pi1" if fam == "A2" else "pi2"
            for T in reyd_mod.enumerate_reyd(_reyd_flavor(seq), n, k, size_bound):
                for pt in reyd_mod.classify_points(T):
                    T2 = reyd_mod.toggle_point(T, pt)
                    for s in s_values:
                        base = reyd_mod.assign(seq, T, s)
                        if pt.role == "admissible":
                            occ = s + p_table(seq, variant, k, pt.x + k) + min(pt.x, 0) + k - pt.y
                            expected = base - beta_pair(seq, occ, pt.color)
                        else:
                            occ = (
                                s
                                + p_table(seq, variant, k, pt.x + k - 1)
                                + min(pt.x - 1, 0)
                                + k
                                - pt.y
                                - 1
                            )
                            expected = base + beta_pair(seq, occ, pt.color)
                        expect_match(
                            f"reyd k={k} {pt} s={s} of {T.ys}", reyd_mod.assign(seq, T2, s), expected
                        )
        else:
            kind_obj = _wall_kind(seq, k)
            for Y in wall_mod.enumerate_walls(kind_obj, wall_halves):
                singles = wall_mod.legal_single_adds(Y) + wall_mod.legal_single_removes(Y)
                doubles = [st for st in wall_mod.classify_sites(Y) if st.multiplicity == 2]
                for site in singles + doubles:
                    Y2 = wall_mod.toggle_block(Y, site)
                    sign = -1 if site.role == "slot" else 1
                    for s in s_values:
                        base = wall_mod.assign_wall(seq, Y, s)
                        occ = s + p_table(seq, "pi_prime", k, site.row) + site.column - 1
                        expected = base + sign * site.multiplicity * beta_pair(
                            seq, occ, site.color
                        )
                        expect_match(
                            f"wall k={k} {site} s={s} of {Y.halves}",
                            wall_mod.assign_wall(seq, Y2, s),
                            expected,
                        )

    status = "pass" if not witnesses else "fail"
    return VerificationReport(
        "step-identities",
        {"family": fam, "n": n, "word": list(seq.word), "size_bound": size_bound},
        status,
        {"toggles_checked": checked, "failures": len(witnesses)},
        witnesses,
    )


def check_closure_equality(
    seq: AdaptedSequence,
    k: int,
    depth: int = 4,
    s: int = 1,
    index_bound: Optional[int] = None,
) -> VerificationReport:
    """Closure of {x_{s,k}} equals the assignment image of size-bounded generators."""
    fam = seq.root_system.algebra.family
    if index_bound is None:
        index_bound = seq.L * 6
    seed = LinearForm.x(s, k)
    closed, pruned = closure(seq, [seed], depth, index_bound)
    kind = dict((kk, kd) for kd, kk in generator_kinds(seq))[k]
    images = {
        generator_form(seq, kind, obj, s) for obj in generator_objects(seq, kind, k, depth)
    }
    extra = sorted(closed - images, key=LinearForm.sort_key)
    missing = sorted(images - closed, key=LinearForm.sort_key)
    witnesses = [f"closure-only: {f}" for f in extra[:MAX_WITNESSES]]
    for f in missing[: MAX_WITNESSES - len(witnesses)]:
        witnesses.append(f"image-only: {f}")
    status = "pass" if not (extra or missing or pruned) else "fail"
    if pruned:
        witnesses.insert(0, f"{pruned} forms pruned at index bound {index_bound}")
    return VerificationReport(
        "closure-equality",
        {
            "family": fam,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "k": k,
            "s": s,
            "depth": depth,
        },
        status,
        {
            "closure_size": len(closed),
            "image_size": len(images),
            "pruned": pruned,
            "symmetric_difference": len(extra) + len(missing),
        },
        witnesses,
    )


def _candidates(window: Sequence[int], max_total: int) -> Iterable[LatticeElement]:
    """All nonnegative vectors supported on the window with total <= max_total."""

    def rec(pos: int, remaining: int, acc: List[Tuple[int, int]]):
        if pos == len(window):
            yield LatticeElement(list(acc))
            return
        for v in range(remaining + 1):
            if v:
                acc.append((window[pos], v))
            yield from rec(pos + 1, remaining - v, acc)
            if v:
                acc.pop()

    yield from rec(0, max_total, [])


def check_image_equality(
    seq: AdaptedSequence,
    max_weight: int = 4,
    size_bound: Optional[int] = None,
    s_bound: Optional[int] = None,
) -> VerificationReport:
    """Reachable elements and inequality solutions agree up to the weight bound.

    Forward: every reachable element satisfies every sampled inequality.
    Converse: every solution of the sampled system within the support window
    of the reachable set is itself reachable; a miss is inconclusive since it
    may only reflect the finite sample.
    """
    fam = seq.root_system.algebra.family
    if size_bound is None:
        size_bound = max_weight + 2
    if s_bound is None:
        s_bound = max_weight + 1
    image = enumerate_image(seq, max_weight)
    forms = sorted(
        generator_forms(seq, size_bound, range(1, s_bound + 1)), key=LinearForm.sort_key
    )
    witnesses: List[str] = []
    forward_bad = 0
    for a in sorted(image, key=LatticeElement.items):
        for f in forms:
            if evaluate(seq, f, a) < 0:
                forward_bad += 1
                _note(witnesses, f"reachable {a} violates {f}")
                break
    window = sorted({j for a in image for j in a.support()})
    converse_bad = 0
    tested = 0
    for a in _candidates(window, max_weight):
        tested += 1
        if a in image:
            continue
        if all(evaluate(seq, f, a) >= 0 for f in forms):
            converse_bad += 1
            _note(witnesses, f"unreachable {a} satisfies all {len(forms)} sampled forms")
    if forward_bad:
        status = "fail"
    elif converse_bad:
        status = "inconclusive"
    else:
        status = "pass"
    return VerificationReport(
        "image-equality",
        {
            "family": fam,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "max_weight": max_weight,
            "size_bound": size_bound,
            "s_bound": s_bound,
        },
        status,
        {
            "image_size": len(image),
            "forms": len(forms),
            "candidates": tested,
            "forward_violations": forward_bad,
            "converse_misses": converse_bad,
        },
        witnesses,
    )


def check_crystal_axioms(seq: AdaptedSequence, depth: int = 5) -> VerificationReport:
    """Kashiwara axioms and operator inverses on the reachable set."""
    image = sorted(enumerate_image(seq, depth), key=LatticeElement.items)
    witnesses: List[str] = []
    checked = 0
    for a in image:
        for i in seq.root_system.index_set:
            checked += 1
            eps = epsilon(seq, a, i)
            ph = phi(seq, a, i)
            b = ftilde(seq, a, i)
            if etilde(seq, b, i) != a:
                _note(witnesses, f"etilde_{i} ftilde_{i} != id at {a}")
            if epsilon(seq, b, i) != eps + 1 or phi(seq, b, i) != ph - 1:
                _note(witnesses, f"epsilon/phi do not step under ftilde_{i} at {a}")
            ca, cb = weight_coeffs(seq, a), weight_coeffs(seq, b)
            if any(cb[l] - ca[l] != (1 if l == i else 0) for l in ca):
                _note(witnesses, f"weight does not drop by alpha_{i} under ftilde_{i} at {a}")
            e = etilde(seq, a, i)
            if eps == 0:
                if e is not None:
                    _note(witnesses, f"etilde_{i} defined at epsilon 0 at {a}")
            else:
                if e is None or ftilde(seq, e, i) != a:
                    _note(witnesses, f"ftilde_{i} etilde_{i} != id at {a}")
            x, raises = a, 0
            while raises <= eps + 1:
                x2 = etilde(seq, x, i)
                if x2 is None:
                    break
                x, raises = x2, raises + 1
            if raises != eps:
                _note(witnesses, f"epsilon_{i}({a}) = {eps} but {raises} raises apply")
    status = "pass" if not witnesses else "fail"
    return VerificationReport(
        "crystal-axioms",
        {
            "family": seq.root_system.algebra.family,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "depth": depth,
        },
        status,
        {"elements": len(image), "pairs_checked": checked, "failures": len(witnesses)},
        witnesses,
    )


def check_positivity(
    seq: AdaptedSequence,
    depth: int = 6,
    s_max: int = 2,
    index_bound: Optional[int] = None,
) -> VerificationReport:
    """No closure form carries a negative coefficient at a first occurrence."""
    witnesses: List[str] = []
    total = 0
    for k in seq.root_system.index_set:
        for s in range(1, s_max + 1):
            closed, _ = closure(seq, [LinearForm.x(s, k)], depth, index_bound)
            total += len(closed)
            ok, bad = check_xi_positivity(seq, closed)
            if not ok:
                for f, pair, c in bad:
                    _note(witnesses, f"seed x[{s},{k}]: {f} has coefficient {c} at {pair}")
    status = "pass" if not witnesses else "fail"
    return VerificationReport(
        "xi-positivity",
        {
            "family": seq.root_system.algebra.family,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "depth": depth,
            "s_max": s_max,
        },
        status,
        {"forms_checked": total, "failures": len(witnesses)},
        witnesses,
    )


def check_beta_agreement(seq: AdaptedSequence, max_index: int = 30) -> VerificationReport:
    """The single- and double-index beta constructions coincide."""
    witnesses: List[str] = []
    from .root_data import index_to_pair

    for j in range(1, max_index + 1):
        s, l = index_to_pair(seq, j)
        if beta_index(seq, j) != beta_pair(seq, s, l):
            _note(witnesses, f"beta mismatch at j={j} (s={s}, l={l})")
    status = "pass" if not witnesses else "fail"
    return VerificationReport(
        "beta-agreement",
        {
            "family": seq.root_system.algebra.family,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "max_index": max_index,
        },
        status,
        {"indices_checked": max_index, "failures": len(witnesses)},
        witnesses,
    )


def check_sigma_difference(
    seq: AdaptedSequence, samples: int = 100, depth: int = 6, seed: int = 7
) -> VerificationReport:
    """beta_j(a) = sigma_j(a) - sigma_{j+}(a) on random reachable elements."""
    rng = random.Random(seed)
    pool = sorted(enumerate_image(seq, depth), key=LatticeElement.items)
    witnesses: List[str] = []
    checked = 0
    for _ in range(samples):
        a = pool[rng.randrange(len(pool))]
        j = rng.randrange(1, max(a.max_index(), seq.L) + 1)
        jplus = j + 1
        while seq.color_of(jplus) != seq.color_of(j):
            jplus += 1
        value = evaluate(seq, beta_index(seq, j), a)
        diff = sigma(seq, a, j) - sigma(seq, a, jplus)
        checked += 1
        if value != diff:
            _note(witnesses, f"sigma difference mismatch at j={j} on {a}")
    status = "pass" if not witnesses else "fail"
    return VerificationReport(
        "sigma-difference",
        {
            "family": seq.root_system.algebra.family,
            "n": seq.root_system.n,
            "word": list(seq.word),
            "samples": samples,
        },
        status,
        {"samples_checked": checked, "failures": len(witnesses)},
        witnesses,
    )
