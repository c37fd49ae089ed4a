"""Cyclotomic simplices Cycl(d, N) and the volume sweep that enumerates them.

Cycl(d, N) is the cyclic simplex of prime volume N generated by the d+1
(d+1)-th roots of unity modulo N. The sweep walks all primes N == 1 mod d+1
in a volume range, tests emptiness, computes widths up to a cap, and emits
deterministic records; it checkpoints at prime granularity with a chained
digest so interrupted multi-day runs can resume and detect corruption.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .arith import has_order_exactly, is_prime, primes_in_progression
from .cyclic import CyclicSimplex, is_empty, new_cyclic
from .errors import CheckpointCorrupt, NoRoots, NotPrime, WidthAboveCap
from .width import WidthCertificate, lattice_width

_CHUNK_PRIMES = 64

CSV_HEADER = "d,N,k,empty,width,certificate,elapsed_ms"


@dataclass(frozen=True)
class RootOrbit:
    """The power orbit (1, k, ..., k^d) of a principal primitive root k mod N."""

    modulus: int
    order: int  # d + 1
    representative: int
    roots: tuple[int, ...]

    def __post_init__(self) -> None:
        n, k, r = self.modulus, self.representative, self.order
        assert has_order_exactly(k, r, n), "representative must have order d+1"
        assert sum(self.roots) % n == 0, "orbit must satisfy the principal condition"


def _orbit_from_root(d: int, modulus: int, k: int) -> RootOrbit:
    roots = [1]
    for _ in range(d):
        roots.append(roots[-1] * k % modulus)
    # canonical representative: smallest primitive member of the orbit
    rep = min(roots[i] for i in range(1, d + 1) if math.gcd(i, d + 1) == 1)
    return RootOrbit(modulus, d + 1, rep, tuple(roots))


def roots_of_unity(d: int, modulus: int) -> RootOrbit:
    """The unique orbit of primitive (d+1)-th roots of unity mod a prime."""
    if not is_prime(modulus):
        raise NotPrime(f"{modulus} is not prime")
    if (modulus - 1) % (d + 1) != 0:
        raise NoRoots(f"{d + 1} does not divide {modulus - 1}")
    exponent = (modulus - 1) // (d + 1)
    for g in range(2, modulus):
        k = pow(g, exponent, modulus)
        if has_order_exactly(k, d + 1, modulus):
            return _orbit_from_root(d, modulus, k)
    raise NoRoots(f"no primitive (d+1)-th root found modulo {modulus}")


def cyclotomic_simplex(d: int, volume: int) -> CyclicSimplex:
    """Cycl(d, N): volume N, generator the sorted root vector."""
    orbit = roots_of_unity(d, volume)
    return new_cyclic(d, volume, tuple(sorted(orbit.roots)))


def principal_primitive_orbits(d: int, modulus: int) -> list[RootOrbit]:
    """All orbits of primitive (d+1)-th roots with power sum 0 mod N.

    Composite moduli are allowed and may produce several orbits (or none);
    for prime N with (d+1) | N-1 there is exactly one.
    """
    if modulus < 2 or d < 2:
        raise ValueError("need modulus >= 2 and d >= 2")
    orbits: dict[int, RootOrbit] = {}
    for k in range(2, modulus):
        if pow(k, d + 1, modulus) != 1:
            continue
        if not has_order_exactly(k, d + 1, modulus):
            continue
        powers = [1]
        for _ in range(d):
            powers.append(powers[-1] * k % modulus)
        if sum(powers) % modulus != 0:
            continue
        orbit = _orbit_from_root(d, modulus, k)
        if orbit.representative not in orbits:
            orbits[orbit.representative] = orbit
    return [orbits[rep] for rep in sorted(orbits)]


def simplex_from_orbit(orbit: RootOrbit) -> CyclicSimplex:
    d = orbit.order - 1
    return new_cyclic(d, orbit.modulus, tuple(sorted(orbit.roots)))


# ---------------------------------------------------------------------------
# sweep records


@dataclass(frozen=True)
class SearchRecord:
    """One sweep row: emptiness and width status of a single Cycl(d, N)."""

    d: int
    volume: int
    root: int
    empty: bool
    width: int | None  # exact width, or the cap when capped, or None (skipped)
    capped: bool
    certificate: WidthCertificate | None
    elapsed_ms: float

    def width_str(self) -> str:
        if self.width is None:
            return ""
        return f">{self.width}" if self.capped else str(self.width)

    def canonical_line(self) -> str:
        """Deterministic serialization: everything except the timing."""
        cert = str(self.certificate) if self.certificate else ""
        return (
            f"{self.d},{self.volume},{self.root},"
            f"{str(self.empty).lower()},{self.width_str()},{cert}"
        )

    def csv_line(self, include_timing: bool = True) -> str:
        cert = str(self.certificate) if self.certificate else ""
        ms = f"{self.elapsed_ms:.1f}" if include_timing else "0"
        return (
            f"{self.d},{self.volume},{self.root},"
            f"{str(self.empty).lower()},{self.width_str()},\"{cert}\",{ms}"
        )

    def to_json(self, include_timing: bool = True) -> str:
        obj = {
            "d": self.d,
            "N": self.volume,
            "k": self.root,
            "empty": self.empty,
            "width": self.width_str(),
            "certificate": str(self.certificate) if self.certificate else "",
            "elapsed_ms": round(self.elapsed_ms, 1) if include_timing else 0,
        }
        return json.dumps(obj)


@dataclass(frozen=True)
class SweepOptions:
    """Knobs of the sweep; defaults match the published enumeration setup."""

    width_cap: int | None = None
    empty_only_widths: bool = True  # compute widths only for empty simplices
    want_certificates: bool = False
    threads: int = 1
    checkpoint: str | None = None


def _process_prime(d: int, n: int, opts: SweepOptions) -> SearchRecord:
    start = time.perf_counter()
    orbit = roots_of_unity(d, n)
    simplex = simplex_from_orbit(orbit)
    empty = is_empty(simplex)
    width: int | None = None
    capped = False
    cert = None
    if empty or not opts.empty_only_widths:
        try:
            width, cert = lattice_width(
                simplex,
                symmetric=True,
                cap=opts.width_cap,
                want_certificate=opts.want_certificates,
            )
        except WidthAboveCap:
            width, capped = opts.width_cap, True
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchRecord(d, n, orbit.representative, empty, width, capped, cert, elapsed)


# ---------------------------------------------------------------------------
# checkpointing

_DIGEST_SEED = "emptysimplex-sweep-v1"


def _chain_digest(prev_hex: str, line: str) -> str:
    return hashlib.sha256((prev_hex + "\n" + line).encode()).hexdigest()


@dataclass
class _CheckpointState:
    header: str
    last_prime: int
    digest: str


def _checkpoint_header(d: int, lo: int, hi: int, opts: SweepOptions) -> str:
    cap = opts.width_cap if opts.width_cap is not None else "none"
    mode = "empty" if opts.empty_only_widths else "all"
    return f"sweep d={d} lo={lo} hi={hi} cap={cap} mode={mode}"


def _load_checkpoint(path: Path, header: str) -> _CheckpointState | None:
    if not path.exists():
        return None
    try:
        lines = path.read_text().splitlines()
        stored_header = lines[0]
        last_prime = int(lines[1].split("=", 1)[1])
        digest = lines[2].split("=", 1)[1]
    except (IndexError, ValueError) as exc:
        raise CheckpointCorrupt(f"unreadable checkpoint {path}") from exc
    if stored_header != header:
        raise CheckpointCorrupt(
            f"checkpoint is for '{stored_header}', expected '{header}'"
        )
    if len(digest) != 64 or any(c not in "0123456789abcdef" for c in digest):
        raise CheckpointCorrupt("malformed digest")
    return _CheckpointState(header, last_prime, digest)


def _write_checkpoint(path: Path, state: _CheckpointState) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(
        f"{state.header}\nlast_prime={state.last_prime}\ndigest={state.digest}\n"
    )
    tmp.replace(path)


def sweep(
    d: int,
    vol_lo: int,
    vol_hi: int,
    options: SweepOptions | None = None,
) -> Iterator[SearchRecord]:
    """Enumerate Cycl(d, N) over primes N == 1 (mod d+1) in [vol_lo, vol_hi].

    Records are yielded in increasing N regardless of thread count, and the
    stream is byte-identical across thread counts (timings excluded). With a
    checkpoint path, completed primes are skipped on resume and the chained
    digest guards against parameter or file corruption.
    """
    if d % 2 != 0:
        raise ValueError(
            f"d={d} is odd: a nonprimitive root pairing gives width <= 2, "
            "so odd-dimensional sweeps are pointless"
        )
    if vol_lo > vol_hi:
        raise ValueError("empty volume range")
    opts = options or SweepOptions()

    header = _checkpoint_header(d, vol_lo, vol_hi, opts)
    ckpt_path = Path(opts.checkpoint) if opts.checkpoint else None
    state = _CheckpointState(header, 0, _DIGEST_SEED)
    if ckpt_path is not None:
        loaded = _load_checkpoint(ckpt_path, header)
        if loaded is not None:
            state = loaded

    primes = [
        p
        for p in primes_in_progression(max(vol_lo, 2), vol_hi, d + 1, 1)
        if p > state.last_prime
    ]
    chunks = [
        primes[i : i + _CHUNK_PRIMES] for i in range(0, len(primes), _CHUNK_PRIMES)
    ]

    def run_chunk(chunk: list[int]) -> list[SearchRecord]:
        return [_process_prime(d, n, opts) for n in chunk]

    if opts.threads <= 1:
        results: Iterable[list[SearchRecord]] = map(run_chunk, chunks)
    else:
        pool = ThreadPoolExecutor(max_workers=opts.threads)
        results = pool.map(run_chunk, chunks)

    try:
        for chunk_records in results:
            for record in chunk_records:
                state.digest = _chain_digest(state.digest, record.canonical_line())
                state.last_prime = record.volume
                yield record
            if ckpt_path is not None:
                _write_checkpoint(ckpt_path, state)
    finally:
        if opts.threads > 1:
            pool.shutdown(wait=False, cancel_futures=True)


def composite_sweep(
    d: int,
    vol_lo: int,
    vol_hi: int,
    options: SweepOptions | None = None,
) -> Iterator[SearchRecord]:
    """Sweep over composite volumes: one record per principal primitive orbit.

    Iterates odd non-prime N == 1 (mod small factors is not required; any N
    carrying orbits qualifies) and classifies each orbit separately. Far
    slower per volume than the prime sweep; meant for small ranges.
    """
    opts = options or SweepOptions()
    start = max(vol_lo, 3)
    start += 1 - start % 2
    for n in range(start, vol_hi + 1, 2):
        if is_prime(n):
            continue
        orbits = principal_primitive_orbits(d, n)
        for orbit in orbits:
            start = time.perf_counter()
            simplex = simplex_from_orbit(orbit)
            empty = is_empty(simplex)
            width: int | None = None
            capped = False
            cert = None
            if empty or not opts.empty_only_widths:
                try:
                    width, cert = lattice_width(
                        simplex,
                        symmetric=True,
                        cap=opts.width_cap,
                        want_certificate=opts.want_certificates,
                    )
                except WidthAboveCap:
                    width, capped = opts.width_cap, True
            elapsed = (time.perf_counter() - start) * 1000.0
            yield SearchRecord(
                d, n, orbit.representative, empty, width, capped, cert, elapsed
            )


def histogram(
    records: Iterable[SearchRecord], bucket_width: int
) -> list[tuple[int, int]]:
    """Counts of empty records per volume bucket [k*b, (k+1)*b - 1]."""
    counts: dict[int, int] = {}
    dims = set()
    for r in records:
        dims.add(r.d)
        if r.empty:
            bucket = r.volume // bucket_width
            counts[bucket] = counts.get(bucket, 0) + 1
    if len(dims) > 1:
        raise ValueError(f"records mix dimensions {sorted(dims)}")
    return [(b * bucket_width, counts[b]) for b in sorted(counts)]
