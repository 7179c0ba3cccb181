"""Invertible combinatorial maps: slide insertion, the rectangle bijection,
the fixed-hook bijection, and the mex bijection.

The slide insertion works on a sequence padded with zero parts up to its
declared capacity.  A new value R compared from the bottom slides past an
entry while R minus the slides so far exceeds it, losing one box per
slide; equality stops the slide.  Equivalently, in beta-coordinates the
inserted part ends up with beta-number exactly R, which is what makes the
rectangle map a weight-preserving bijection and fixes every tie.  The
slide count of an insertion may count zero entries it passed, and an
inserted value may reach zero, in which case the part vanishes but its
slides remain on record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .partitions import Partition


class SlideTrace(NamedTuple):
    """Result of one insertion: the new partition plus the slide count."""

    result: Partition
    slides: int


@dataclass
class BijectionRecord:
    """Audit trail of one bijection application, for tracing and the CLI."""

    name: str
    inputs: dict
    intermediates: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        def plain(value):
            if isinstance(value, Partition):
                return value.to_list()
            if isinstance(value, (list, tuple)):
                return [plain(v) for v in value]
            return value

        return {
            "bijection": self.name,
            "input": {k: plain(v) for k, v in self.inputs.items()},
            "intermediates": {k: plain(v) for k, v in self.intermediates.items()},
            "output": {k: plain(v) for k, v in self.outputs.items()},
        }


def _slide_in(arr: list[int], r: int) -> int:
    """Splice r into the nonincreasing arr (zeros allowed), returning the slide count."""
    t = len(arr)
    s = 0
    while s < t and r - s > arr[t - 1 - s]:
        s += 1
    arr.insert(t - s, r - s)
    return s


def insert_part(p: Partition, r: int) -> SlideTrace:
    """Insert a positive value into a partition by the slide procedure.

    The inserted part finishes as r - s where s parts slid below it; the
    weight ledger is |result| = |p| + r - s.  On a genuine partition the
    inserted value can never reach zero (every slide requires the value to
    exceed a positive part).
    """
    if r <= 0:
        raise ValueError(f"inserted part must be positive, got {r}")
    arr = list(p.parts)
    s = _slide_in(arr, r)
    if r - s <= 0:
        raise ValueError(f"inserting {r} into {p!r} would exhaust the part")
    return SlideTrace(Partition._trusted(tuple(arr)), s)


def _strip_zeros(arr: list[int]) -> tuple[int, ...]:
    return tuple(v for v in arr if v)


def f_bijection(a: int, b: int, lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    """Rectangle bijection on pairs: (P_a, P_b) -> (P_{a+b}, R_{b,a}).

    Pads lam with zero parts to capacity a, then inserts the parts of mu
    largest first, recording slide counts.  Total weight of the pair is
    preserved: |lam| + |mu| = |nu| + |rho|.
    """
    if a < 0 or b < 0:
        raise ValueError(f"capacities must be nonnegative, got a={a}, b={b}")
    if lam.t > a:
        raise ValueError(f"lam has {lam.t} parts but at most {a} are allowed")
    if mu.t > b:
        raise ValueError(f"mu has {mu.t} parts but at most {b} are allowed")
    arr = list(lam.parts) + [0] * (a - lam.t)
    slides = [_slide_in(arr, r) for r in mu.parts]
    nu = Partition._trusted(_strip_zeros(arr))
    # Slide counts are claimed to form a partition (nonincreasing); check the
    # raw sequence so a counterexample would surface rather than be masked.
    if any(slides[idx] < slides[idx + 1] for idx in range(len(slides) - 1)):
        raise AssertionError(f"slide counts {slides} are not nonincreasing")
    rho = Partition._trusted(tuple(s for s in slides if s))
    if rho.t > b or (rho.parts and rho.parts[0] > a):
        raise AssertionError(f"slide record {slides} escaped the {b} x {a} rectangle")
    return nu, rho


def f_inverse(a: int, b: int, nu: Partition, rho: Partition) -> tuple[Partition, Partition]:
    """Inverse of the rectangle bijection, given the same capacities a and b.

    rho is zero-padded to exactly b entries and its entries are undone in
    reverse: the entry s says the corresponding inserted part sits at
    position a + j - s and regains s boxes on extraction.
    """
    if a < 0 or b < 0:
        raise ValueError(f"capacities must be nonnegative, got a={a}, b={b}")
    if nu.t > a + b:
        raise ValueError(f"nu has {nu.t} parts but at most {a + b} are allowed")
    if rho.t > b:
        raise ValueError(f"rho has {rho.t} slide counts but at most {b} are allowed")
    if rho.parts and rho.parts[0] > a:
        raise ValueError(f"slide count {rho.parts[0]} exceeds the {a} available parts")
    arr = list(nu.parts) + [0] * (a + b - nu.t)
    padded = list(rho.parts) + [0] * (b - rho.t)
    recovered: list[int] = []
    for j in range(b, 0, -1):
        s = padded[j - 1]
        position = a + j - s
        if not 1 <= position <= len(arr):
            raise ValueError(f"slide count {s} is inconsistent with {nu!r}")
        recovered.append(arr.pop(position - 1) + s)
    mu_parts = list(reversed(recovered))
    for idx in range(len(mu_parts) - 1):
        if mu_parts[idx] < mu_parts[idx + 1]:
            raise ValueError(f"trace does not reverse to a partition: recovered {mu_parts}")
    lam = Partition(_strip_zeros(arr))
    mu = Partition._trusted(_strip_zeros(mu_parts))
    return lam, mu


def _b_decompose(lam: Partition, i: int) -> tuple[int, Partition, Partition]:
    """Split lam (with part i of multiplicity i) into (k, tau, eps')."""
    if i < 1:
        raise ValueError(f"part size must be >= 1, got {i}")
    if lam.multiplicity(i) != i:
        raise ValueError(
            f"precondition failed: {i} appears {lam.multiplicity(i)} times in "
            f"{lam!r}, expected {i}"
        )
    k = 1 + sum(1 for value in lam.parts if value > i)
    tau = Partition._trusted(_strip_zeros([lam.parts[j] - (i + 1) for j in range(k - 1)]))
    eps = Partition._trusted(lam.parts[k + i - 1 :])
    return k, tau, eps.conjugate()


def _b_assemble(k: int, i: int, gamma: Partition, rho_rows: Partition) -> Partition:
    """Build the fixed-hook partition from the top block, the i-row, and the leg rows."""
    top = [i + g for g in gamma.parts] + [i] * (k + i - 2 - gamma.t)
    bottom = [1 + r for r in rho_rows.parts] + [1] * (k - 1 - rho_rows.t)
    return Partition(tuple(top) + (i,) + tuple(bottom))


def b_bijection(lam: Partition, i: int) -> Partition:
    """Map (lam, i) with part i of multiplicity i to a partition with a 0-fixed hook.

    The k-1 boxes in column i+1 of the rows above the i x i block move to
    the first column below it, and the remaining data (tau, eps') passes
    through the rectangle bijection with capacities (k-1, i-1).  The slide
    record rho lands in an (i-1) x (k-1) rectangle, so it is conjugated to
    fill the k-1 leg rows with parts at most i-1.  The image has its fixed
    hook at position k+i-1, where the part is i.
    """
    k, tau, eps_prime = _b_decompose(lam, i)
    gamma, rho = f_bijection(k - 1, i - 1, tau, eps_prime)
    return _b_assemble(k, i, gamma, rho.conjugate())


def b_inverse(mu: Partition) -> tuple[Partition, int]:
    """Recover (lam, i) from a partition with a 0-fixed hook."""
    report = mu.find_h_fixed_hook(0)
    if report is None:
        raise ValueError(f"{mu!r} has no 0-fixed hook")
    s, i = report.position, report.part
    k = s - i + 1
    if k < 1 or mu.t != i + 2 * k - 2:
        raise ValueError(f"{mu!r} does not have the {i + 2 * k - 2} parts a fixed-hook image needs")
    gamma = Partition._trusted(_strip_zeros([mu.parts[j] - i for j in range(k + i - 2)]))
    rho_rows = Partition._trusted(_strip_zeros([mu.parts[s + r] - 1 for r in range(k - 1)]))
    tau, eps_prime = f_inverse(k - 1, i - 1, gamma, rho_rows.conjugate())
    eps = eps_prime.conjugate()
    lam_top = tuple(i + 1 + v for v in tau.parts) + (i + 1,) * (k - 1 - tau.t)
    lam = Partition(lam_top + (i,) * i + eps.parts)
    return lam, i


def mex_map(lam: Partition) -> Partition:
    """Turn a partition with a -1-fixed hook at part k into a mex-k partition.

    Deletes the part k at the hook position s, takes one box from each
    part below it (dropping parts that reach zero), grants one box to each
    of the s-1 parts above, and appends one part of every size 1..k-1.
    The image weighs |lam| + C(k,2) more and has mex exactly k.
    """
    report = lam.find_h_fixed_hook(-1)
    if report is None:
        raise ValueError(f"{lam!r} has no -1-fixed hook")
    s, k = report.position, report.part
    above = [lam.parts[j] + 1 for j in range(s - 1)]
    below = [lam.parts[j] - 1 for j in range(s, lam.t) if lam.parts[j] > 1]
    tail = list(range(k - 1, 0, -1))
    mu = Partition(tuple(sorted(above + below + tail, reverse=True)))
    assert mu.n == lam.n + k * (k - 1) // 2 and mu.mex() == k
    return mu


def mex_map_inverse(mu: Partition, k: int) -> Partition:
    """Recover the -1-fixed-hook partition from a mex-k partition.

    Requires mex(mu) = k and #parts below k at most #parts above k minus 1;
    removes one part of each size 1..k-1, reinstates the part k, moves one
    box from each part above k to the parts below it, and restores the
    ones that had vanished.
    """
    if k < 1:
        raise ValueError(f"mex value must be >= 1, got {k}")
    if mu.mex() != k:
        raise ValueError(f"precondition failed: mex of {mu!r} is {mu.mex()}, expected {k}")
    above = [v for v in mu.parts if v > k]
    below = [v for v in mu.parts if v < k]
    s = len(above) + 1
    if len(below) > s - 2:
        raise ValueError(
            f"precondition failed: {len(below)} parts below {k} but only "
            f"{len(above)} above it in {mu!r}"
        )
    remaining = list(below)
    for size in range(1, k):
        remaining.remove(size)  # guaranteed present since mex(mu) = k
    parts = (
        [v - 1 for v in above]
        + [k]
        + [v + 1 for v in remaining]
        + [1] * (s - 2 - len(below))
    )
    lam = Partition(tuple(sorted(parts, reverse=True)))
    report = lam.find_h_fixed_hook(-1)
    assert report is not None and report.position == s and report.part == k
    return lam


# -- audit records ------------------------------------------------------------

def f_bijection_record(a: int, b: int, lam: Partition, mu: Partition) -> BijectionRecord:
    nu, rho = f_bijection(a, b, lam, mu)
    return BijectionRecord(
        name="F",
        inputs={"lam": lam, "mu": mu, "a": a, "b": b},
        intermediates={},
        outputs={"nu": nu, "rho": rho},
    )


def f_inverse_record(a: int, b: int, nu: Partition, rho: Partition) -> BijectionRecord:
    lam, mu = f_inverse(a, b, nu, rho)
    return BijectionRecord(
        name="F-inverse",
        inputs={"nu": nu, "rho": rho, "a": a, "b": b},
        intermediates={},
        outputs={"lam": lam, "mu": mu},
    )


def b_bijection_record(lam: Partition, i: int) -> BijectionRecord:
    k, tau, eps_prime = _b_decompose(lam, i)
    gamma, rho = f_bijection(k - 1, i - 1, tau, eps_prime)
    mu = _b_assemble(k, i, gamma, rho.conjugate())
    return BijectionRecord(
        name="B",
        inputs={"lam": lam, "i": i},
        intermediates={
            "k": k,
            "tau": tau,
            "epsilon_prime": eps_prime,
            "gamma": gamma,
            "rho": rho,
            "rho_rows": rho.conjugate(),
        },
        outputs={"mu": mu, "s": k + i - 1},
    )


def b_inverse_record(mu: Partition) -> BijectionRecord:
    lam, i = b_inverse(mu)
    report = mu.find_h_fixed_hook(0)
    return BijectionRecord(
        name="B-inverse",
        inputs={"mu": mu},
        intermediates={"s": report.position, "k": report.position - i + 1},
        outputs={"lam": lam, "i": i},
    )


def mex_map_record(lam: Partition) -> BijectionRecord:
    report = lam.find_h_fixed_hook(-1)
    mu = mex_map(lam)
    return BijectionRecord(
        name="mex",
        inputs={"lam": lam},
        intermediates={"s": report.position, "k": report.part},
        outputs={"mu": mu},
    )


def mex_map_inverse_record(mu: Partition, k: int) -> BijectionRecord:
    lam = mex_map_inverse(mu, k)
    report = lam.find_h_fixed_hook(-1)
    return BijectionRecord(
        name="mex-inverse",
        inputs={"mu": mu, "k": k},
        intermediates={"s": report.position, "k": k},
        outputs={"lam": lam},
    )
