"""Deterministic random corpora of ideals."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .io import IdealFile
from .monomial_ideal import MonomialIdeal, colon_var_sat, is_weakly_stable
from .ring import GF32003, Field, Polynomial, RingContext, m_index

FAMILIES = ("weakly-stable", "monomial", "homogeneous-sparse")


@dataclass(frozen=True)
class CorpusSpec:
    family: str
    n: int
    max_degree: int
    max_gens: int
    count: int
    seed: int = 0
    max_terms: int = 3  # homogeneous-sparse only

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 1 or self.max_degree < 1 or self.max_gens < 1 or self.count < 0:
            raise ValueError(f"invalid corpus spec {self}")

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusSpec":
        return cls(**d)

    @classmethod
    def load(cls, path) -> "CorpusSpec":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        return asdict(self)


def _random_monomial(rng, n: int, d: int) -> tuple:
    u = [0] * n
    for i in rng.integers(0, n, size=d):
        u[int(i)] += 1
    return tuple(u)


def _random_monomial_ideal(rng, spec: CorpusSpec) -> MonomialIdeal:
    r = int(rng.integers(1, spec.max_gens + 1))
    gens = [_random_monomial(rng, spec.n, int(rng.integers(1, spec.max_degree + 1))) for _ in range(r)]
    return MonomialIdeal(spec.n, gens)


def weak_stability_closure(I: MonomialIdeal, rng=None, limit: int = 10_000) -> MonomialIdeal:
    """Add X_j^k u / X_m(u)^l for every violation until I is weakly stable.

    k is drawn from 1..l (so degrees never grow) when rng is given, else k = l.
    """
    for _ in range(limit):
        missing = []
        sats: dict = {}
        for u in I.gens:
            m = m_index(u)
            if m <= 1:
                continue
            l = u[m - 1]
            w = u[: m - 1] + (0,) + u[m:]
            for j in range(1, m):
                if j not in sats:
                    sats[j] = colon_var_sat(I, j)
                if w not in sats[j]:
                    k = int(rng.integers(1, l + 1)) if rng is not None else l
                    missing.append(w[: j - 1] + (w[j - 1] + k,) + w[j:])
        if not missing:
            return I
        I = I.add(*missing)
    raise RuntimeError("weak stability closure did not terminate")


def _random_weakly_stable(rng, spec: CorpusSpec, attempts: int = 1000) -> MonomialIdeal:
    for _ in range(attempts):
        I = weak_stability_closure(_random_monomial_ideal(rng, spec), rng)
        if len(I.gens) <= spec.max_gens:
            return I
    raise RuntimeError(f"no weakly stable ideal with <= {spec.max_gens} generators after {attempts} draws")


def _random_sparse(rng, spec: CorpusSpec, field: Field):
    ctx = RingContext(spec.n, field)
    while True:
        r = int(rng.integers(1, spec.max_gens + 1))
        gens = []
        for _ in range(r):
            d = int(rng.integers(1, spec.max_degree + 1))
            t = int(rng.integers(1, spec.max_terms + 1))
            terms = {}
            for _ in range(t):
                terms[_random_monomial(rng, spec.n, d)] = field.random_element(rng, nonzero=True)
            f = Polynomial(ctx, terms)
            if f:
                gens.append(f)
        if gens:
            return ctx, gens


def generate_corpus(spec: CorpusSpec, field: Field = GF32003) -> list:
    """``spec.count`` ideal files; instance k only depends on (seed, k)."""
    out = []
    streams = np.random.SeedSequence([spec.seed, FAMILIES.index(spec.family), spec.n]).spawn(spec.count)
    for k, ss in enumerate(streams):
        rng = np.random.default_rng(ss)
        label = f"{spec.family}-n{spec.n}-{spec.seed}-{k}"
        if spec.family == "monomial":
            f = IdealFile.from_ideal(_random_monomial_ideal(rng, spec), label, field)
        elif spec.family == "weakly-stable":
            I = _random_weakly_stable(rng, spec)
            if not is_weakly_stable(I):
                raise AssertionError(f"generator produced a non weakly stable ideal {I}")
            f = IdealFile.from_ideal(I, label, field)
        else:
            ctx, gens = _random_sparse(rng, spec, field)
            f = IdealFile(ctx, tuple(gens), label)
        out.append(f)
    return out
