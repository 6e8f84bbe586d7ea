"""Parameter scans over the first cyclic family.

One scan cell covers a single (k, a); selected checks compare the two
cut-set parametrizations, the reflection distance against its parity
prediction, the gcd cap formulas, and the sector-filling inequalities.
Cells are independent, so scans parallelize; results are always
reported in (k, a) order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from . import family_one, lattice

ALL_CHECKS = (
    "parity-sharp",
    "lattice-equality",
    "caps",
    "sector-filling",
    "adjacent-large",
    "cap2",
)


@dataclass(frozen=True)
class ScanRow:
    k: int
    a: int
    Z: tuple[int, ...]
    reflected: tuple[int, ...]  # N - Z
    delta: int
    count_pair: tuple[int, int]
    c_L: int
    c_R: int
    lattice_agrees: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def scan_cell(args: tuple[int, int, tuple[str, ...]]) -> ScanRow:
    k, a, checks = args
    profile = family_one.cut_set(k, a)
    N = profile.N
    Z = profile.Z
    pair = family_one.count_pair(k, a)
    caps = lattice.endpoint_caps(k, a)
    failures = []

    rs = lattice.ray_system(k, a)
    lattice_Z = tuple(lattice.cut_values_from_rays(rs))
    lattice_agrees = lattice_Z == Z

    if "parity-sharp" in checks:
        expected = 0 if k % 2 else 1
        if profile.delta != expected:
            failures.append(f"parity-sharp: delta={profile.delta}, expected {expected}")
    if "lattice-equality" in checks:
        if not lattice_agrees:
            failures.append(f"lattice-equality: rays give {lattice_Z}, cuts give {Z}")
        if rs.cut_values()[-1] + rs.mults[-1] != N:
            failures.append("lattice-equality: endpoint identity violated")
    if "caps" in checks:
        gp = lattice.gap_profile(Z, N)
        if (gp.c_L, gp.c_R) != caps:
            failures.append(f"caps: profile gives {(gp.c_L, gp.c_R)}, gcds give {caps}")
    if "sector-filling" in checks:
        for i in range(rs.f):
            for j in range(i + 1, rs.f):
                p, q = rs.mults[i], rs.mults[j]
                if p >= 1 and q >= 1:
                    mass = lattice.sector_mass(rs, i, j)
                    bound = lattice.theta(p, q)
                    if mass < bound:
                        failures.append(
                            f"sector-filling: M(A_{i},A_{j})={mass} < theta{(p, q)}={bound}"
                        )
    if "adjacent-large" in checks:
        for h1, h2 in zip(rs.mults, rs.mults[1:]):
            if h1 >= 2 and h2 >= 2:
                failures.append(f"adjacent-large: consecutive blocks {h1}, {h2}")
    if "cap2" in checks:
        for check in lattice.cap2_bound_report(rs):
            if not check.ok:
                failures.append(
                    f"cap2: side {check.side} ray {check.ray}: "
                    f"mass {check.mass} < {check.required}"
                )

    return ScanRow(
        k=k,
        a=a,
        Z=Z,
        reflected=tuple(N - z for z in reversed(Z)),
        delta=profile.delta,
        count_pair=pair,
        c_L=caps[0],
        c_R=caps[1],
        lattice_agrees=lattice_agrees,
        failures=tuple(failures),
    )


@dataclass
class ScanSummary:
    cells: int = 0
    failures: int = 0
    # even-k count-pair sums: how often the chosen sum is k-2 vs k
    sum_k_minus_2: int = 0
    sum_k: int = 0
    first_failure: Optional[ScanRow] = None

    def absorb(self, row: ScanRow) -> None:
        self.cells += 1
        if not row.ok and self.first_failure is None:
            self.first_failure = row
        self.failures += len(row.failures)
        if row.k % 2 == 0:
            s = sum(row.count_pair)
            if s == row.k - 2:
                self.sum_k_minus_2 += 1
            elif s == row.k:
                self.sum_k += 1


def scan_cells(k_min: int, k_max: int) -> list[tuple[int, int]]:
    return [
        (k, a)
        for k in range(max(k_min, 3), k_max + 1)
        for a in family_one.valid_a_values(k)
    ]


def run_scan(
    k_min: int,
    k_max: int,
    checks: Iterable[str] = ALL_CHECKS,
    jobs: int = 1,
) -> tuple[list[ScanRow], ScanSummary]:
    checks = tuple(checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    args = [(k, a, checks) for k, a in scan_cells(k_min, k_max)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(scan_cell, args, chunksize=16))
    else:
        rows = [scan_cell(cell) for cell in args]
    summary = ScanSummary()
    for row in rows:
        summary.absorb(row)
    return rows, summary
