"""Randomized verification campaigns.

Every trial draws a random relation and a random valid morphism from a
per-trial seed and runs a selection of checks.  A failing check is a bug in
this package, never an expected outcome.  Trials that hit a resource guard
are recorded as skipped rather than failed.

Per-trial seeds are the first 8 bytes (big-endian) of
``sha256(f"{campaign_seed}:{trial_index}")``.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .complex import SimplicialComplex, compose_maps, make_simplicial_map, strong_collapse
from .concepts import brute_force_concepts, enumerate_concepts
from .dowker import (
    check_functor_laws,
    check_naturality,
    dowker_complex,
    pi,
    pi_hat,
    rectangle_complex,
)
from .errors import DimensionGuard
from .homology import (
    GF2,
    QQ,
    chain_complex,
    chain_homology,
    check_fiber_hypothesis,
    check_functorial_dowker,
    cone_homology,
    homology,
    induced_chain_map,
    mapping_cone,
)
from .homology.sparse import sparse_smith_certificate, verify_smith_certificate
from .relation import (
    Relation,
    RelationMorphism,
    make_relation,
    random_morphism,
    random_morphism_from,
    random_relation,
    transpose,
)

__all__ = [
    "CHECKS",
    "DEFAULT_DENSITIES",
    "CampaignConfig",
    "VerificationReport",
    "trial_seed",
    "sample_relation",
    "run_trial",
    "run_campaign",
    "check_concepts",
    "check_betti",
    "check_quasi_iso",
    "check_fibers",
    "check_morphism_naturality",
    "check_functorial",
    "check_algebra",
    "shrink_relation",
]

CHECKS = (
    "concepts",
    "betti",
    "quasi-iso",
    "fiber",
    "naturality",
    "functorial",
    "functor-laws",
    "algebra",
)
DEFAULT_DENSITIES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
RELATION_CHECKS = ("concepts", "betti", "quasi-iso", "fiber", "algebra")


def trial_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def sample_relation(rng: random.Random, max_x: int, max_y: int, densities) -> Relation:
    nx = rng.randint(1, max_x)
    ny = rng.randint(1, max_y)
    density = rng.choice(list(densities))
    return random_relation(nx, ny, density, seed=rng.getrandbits(32))


# -- individual checks: each returns a list of problems, empty on success ----


def check_concepts(R: Relation) -> list[str]:
    fast = set(enumerate_concepts(R))
    slow = set(brute_force_concepts(R))
    if fast == slow:
        return []
    return [f"enumerate_concepts differs from brute force: +{len(fast - slow)} -{len(slow - fast)}"]


def _rectangle_model(R: Relation, notes: list | None, **guards):
    """E(R) itself, or its strong-collapse core when E(R) is over budget.

    Returns ``(complex, inclusion_into_E)``; the inclusion is None when no
    reduction was needed.
    """
    # listing facets is cheap even when E(R) is huge; the budget applies below
    E = rectangle_complex(R, max_dimension=max(len(R.pairs), 1))
    try:
        _guard_complex(E, **guards)
        return E, None
    except DimensionGuard:
        core, _ = strong_collapse(E)
        _guard_complex(core, **guards)
        if notes is not None:
            notes.append(
                f"E(R) over budget; used its strong-collapse core "
                f"({len(core.vertex_set)} of {len(E.vertex_set)} vertices)"
            )
        return core, make_simplicial_map(core, E, {v: v for v in core.vertex_set})


def _guard_complex(K: SimplicialComplex, max_simplices: int = 200_000, max_dimension: int = 25):
    if K.dimension > max_dimension:
        raise DimensionGuard(f"dimension {K.dimension} exceeds the guard {max_dimension}")
    bound = K.simplex_count_bound(K.dimension)
    if bound > max_simplices:
        raise DimensionGuard(f"complex may have {bound} simplices, above the guard {max_simplices}")


def check_betti(R: Relation, notes: list | None = None, **guards) -> list[str]:
    D = homology(dowker_complex(R), **guards)
    DT = homology(dowker_complex(transpose(R)), **guards)
    model, _ = _rectangle_model(R, notes, **guards)
    E = homology(model, **guards)
    if D.signature() == DT.signature() == E.signature():
        return []
    return [f"homology differs: D={D.signature()} DT={DT.signature()} E={E.signature()}"]


def check_quasi_iso(R: Relation, notes: list | None = None, **guards) -> list[str]:
    model, incl = _rectangle_model(R, notes, **guards)
    problems = []
    for name, proj in (("pi", pi), ("pi_hat", pi_hat)):
        if incl is None:
            F = proj(R, model)
        else:
            F = compose_maps(proj(R, incl.target), incl)
        h = cone_homology(F, **guards)
        if not h.is_trivial():
            problems.append(f"cone of {name} has homology {h.signature()}")
    return problems


def check_fibers(R: Relation, max_dim: int = 6, **guards) -> list[str]:
    E = rectangle_complex(R, guards.get("max_dimension", 25))
    problems = []
    for sigma in dowker_complex(R).simplices(max_dim=max_dim):
        rep = check_fiber_hypothesis(R, sigma, E=E, **guards)
        if not rep.passed:
            problems.append(
                f"fiber over {list(sigma)}: acyclic={rep.fiber_acyclic} "
                f"inverse_image={rep.inverse_image_ok} cover={rep.cover_ok} "
                f"cone_point={rep.sigma_is_cone_point}"
            )
    return problems


def check_morphism_naturality(f: RelationMorphism, max_dimension: int = 25) -> list[str]:
    rep = check_naturality(f, max_dimension)
    return [f"{sq} square fails at {v}: {a} != {b}" for sq, v, a, b in rep.failures]


def check_functorial(f: RelationMorphism, degrees=(0, 1, 2), fields=(QQ, GF2)) -> list[str]:
    return [
        f"functorial square fails in degree {k} over {F.name}"
        for F in fields
        for k in degrees
        if not check_functorial_dowker(f, k, F)
    ]


def _snf_problems(M, name: str) -> list[str]:
    cert = sparse_smith_certificate(M)
    return [f"{name}: {p}" for p in verify_smith_certificate(M, cert)]


def check_algebra(R: Relation, **guards) -> list[str]:
    """∂∂ = 0, chain-map squares, SNF certificates and Euler characteristics."""
    problems = []
    E = rectangle_complex(R, guards.get("max_dimension", 25))
    complexes: dict[str, SimplicialComplex] = {
        "D": dowker_complex(R),
        "DT": dowker_complex(transpose(R)),
        "E": E,
    }
    chains = {}
    for name, K in complexes.items():
        for reduced in (False, True):
            C = chain_complex(K, reduced, **guards)
            chains[name, reduced] = C
            if not C.check_squares_zero():
                problems.append(f"∂∂ != 0 on {name} (reduced={reduced})")
            for k, M in C.boundaries.items():
                # the two complexes share every ∂_k with k >= 1
                if reduced and k >= 1 and M == chains[name, False].boundary(k):
                    continue
                problems += _snf_problems(M, f"∂_{k}({name}, reduced={reduced})")
        hq = chain_homology(chains[name, False], QQ)
        alt = sum((-1) ** g.dim * g.betti for g in hq.groups)
        if alt != K.euler_characteristic():
            problems.append(f"Euler characteristic of {name} != alternating Betti sum")
    for name, F in (("pi", pi(R, E)), ("pi_hat", pi_hat(R, E))):
        target = "D" if name == "pi" else "DT"
        f = induced_chain_map(F, True, source=chains["E", True], target=chains[target, True])
        if not f.check_commutes():
            problems.append(f"induced map of {name} is not a chain map")
        if not mapping_cone(f).check_squares_zero():
            problems.append(f"∂∂ != 0 on the cone of {name}")
    return problems


def shrink_relation(R: Relation, fails: Callable[[Relation], bool]) -> Relation:
    """Greedily drop pairs while ``fails`` keeps returning True."""
    pairs = R.sorted_pairs()
    changed = True
    while changed:
        changed = False
        for p in list(pairs):
            trial = [q for q in pairs if q != p]
            cand = make_relation(R.x_labels, R.y_labels, trial)
            try:
                still = fails(cand)
            except Exception:  # noqa: BLE001 - a crash is a different bug
                still = False
            if still:
                pairs = trial
                changed = True
    return make_relation(R.x_labels, R.y_labels, pairs)


# -- campaigns ----------------------------------------------------------------


@dataclass
class CampaignConfig:
    trials: int = 20
    seed: int = 0
    max_x: int = 5
    max_y: int = 5
    densities: Sequence[float] = DEFAULT_DENSITIES
    checks: Sequence[str] = CHECKS
    fiber_max_dim: int = 6
    max_simplices: int = 200_000
    max_dimension: int = 25
    functorial_degrees: Sequence[int] = (0, 1, 2)
    shrink: bool = True

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}; choose from {', '.join(CHECKS)}")

    @property
    def guards(self) -> dict:
        return {"max_simplices": self.max_simplices, "max_dimension": self.max_dimension}


@dataclass
class VerificationReport:
    trials: int
    seed: int
    checks: list[str]
    failures: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_elapsed: bool = False) -> dict:
        doc = {
            "trials": self.trials,
            "seed": self.seed,
            "checks": list(self.checks),
            "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
            "skipped": self.skipped,
            "notes": self.notes,
        }
        if include_elapsed:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_dict(include_elapsed), indent=2) + "\n"


def _relation_doc(R: Relation) -> dict:
    return {"x": list(R.x_labels), "y": list(R.y_labels), "pairs": [list(p) for p in R.sorted_pairs()]}


def _morphism_doc(f: RelationMorphism) -> dict:
    return {
        "source": _relation_doc(f.source),
        "target": _relation_doc(f.target),
        "f1": dict(sorted(f.f1.items())),
        "f2": dict(sorted(f.f2.items())),
    }


def run_trial(config: CampaignConfig, index: int) -> dict:
    """Run the configured checks for one trial; returns a plain dict."""
    rng = random.Random(trial_seed(config.seed, index))
    R = sample_relation(rng, config.max_x, config.max_y, config.densities)
    f = random_morphism(rng.getrandbits(32), config.max_x, config.max_y, config.densities)
    g = random_morphism_from(f.target, rng.getrandbits(32), config.max_x, config.max_y)
    guards = config.guards
    relation_checks = {
        "concepts": check_concepts,
        "betti": lambda S, notes=None: check_betti(S, notes, **guards),
        "quasi-iso": lambda S, notes=None: check_quasi_iso(S, notes, **guards),
        "fiber": lambda S: check_fibers(S, config.fiber_max_dim, **guards),
        "algebra": lambda S: check_algebra(S, **guards),
    }
    morphism_checks = {
        "naturality": lambda: check_morphism_naturality(f, config.max_dimension),
        "functorial": lambda: check_functorial(f, tuple(config.functorial_degrees)),
        "functor-laws": lambda: check_functor_laws(g, f),
    }
    out = {"index": index, "failures": [], "skipped": [], "notes": [], "counts": {}}
    for name in config.checks:
        notes: list[str] = []
        try:
            if name in relation_checks:
                fn = relation_checks[name]
                problems = fn(R, notes) if name in ("betti", "quasi-iso") else fn(R)
                subject = R
            else:
                problems = morphism_checks[name]()
                subject = f
        except DimensionGuard as exc:
            out["skipped"].append({"trial": index, "check": name, "reason": str(exc)})
            continue
        out["counts"][name] = 1
        out["notes"] += [{"trial": index, "check": name, "note": n} for n in notes]
        if problems:
            if isinstance(subject, Relation):
                if config.shrink:
                    subject = shrink_relation(subject, lambda S, fn=fn: bool(fn(S)))
                doc = {"relation": _relation_doc(subject)}
            else:
                doc = {"morphism": _morphism_doc(subject)}
            out["failures"].append(
                {"trial": index, "check": name, "input": doc, "witness": problems}
            )
    return out


def _run_indexed(args):
    config, index = args
    return run_trial(config, index)


def run_campaign(config: CampaignConfig, threads: int = 1) -> VerificationReport:
    start = time.perf_counter()
    jobs = [(config, i) for i in range(config.trials)]
    if threads > 1 and config.trials > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_indexed, jobs))
    else:
        results = [_run_indexed(job) for job in jobs]
    results.sort(key=lambda r: r["index"])
    report = VerificationReport(config.trials, config.seed, list(config.checks))
    for r in results:
        report.failures += r["failures"]
        report.skipped += r["skipped"]
        report.notes += r["notes"]
        for name, n in r["counts"].items():
            report.counts[name] = report.counts.get(name, 0) + n
    report.elapsed = time.perf_counter() - start
    return report
