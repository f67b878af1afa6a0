"""Exhaustive extremal-restraint search and theorem verification.

For a graph and restraint size k, every equivalence class of k-restraints
is enumerated, its polynomial computed, and the winners under eventual
dominance collected (all ties reported).  The verifiers re-derive the
predicted extremal structure on whole catalogs of small graphs, with the
exhaustive search as the oracle; violations are report content, never
exceptions.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .engine import MemoCache, common_neighbor_overlap, restrained_poly, shared_pair_overlap
from .graphs import Graph, all_connected_graphs, cycle_graph, to_graph6
from .polynomials import IntPolynomial
from .restraints import (
    RestraintClass,
    Restraint,
    alternating_restraint,
    canonicalize,
    constant_restraint,
    enumerate_k_restraints,
    is_proper,
    parse_restraint,
    render_restraint,
)


@dataclass(frozen=True)
class ExtremalReport:
    """Winners of the eventual-dominance search over one (graph, k) pair.

    min_classes and max_classes hold every tied winner; witnesses record,
    for each losing class, the leading term (degree, coefficient) of the
    winner-minus-loser difference polynomial, which certifies the strict
    gap for all large enough x.
    """

    graph_id: str
    k: int
    class_count: int
    min_classes: tuple[RestraintClass, ...]
    max_classes: tuple[RestraintClass, ...]
    min_poly: IntPolynomial
    max_poly: IntPolynomial
    max_witness: dict
    min_witness: dict

    def to_record(self) -> dict:
        return {
            "graph6": self.graph_id,
            "k": self.k,
            "class_count": self.class_count,
            "min_classes": [c.class_id() for c in self.min_classes],
            "max_classes": [c.class_id() for c in self.max_classes],
            "min_poly": [str(c) for c in self.min_poly.coeffs],
            "max_poly": [str(c) for c in self.max_poly.coeffs],
            "max_witness": {cid: [d, str(c)] for cid, (d, c) in sorted(self.max_witness.items())},
            "min_witness": {cid: [d, str(c)] for cid, (d, c) in sorted(self.min_witness.items())},
        }


def _descending_key(p: IntPolynomial, n: int) -> tuple[int, ...]:
    return tuple(p.coefficient(i) for i in range(n, -1, -1))


def find_extremal(
    g: Graph,
    k: int,
    workers: int = 1,
    cache: MemoCache | None = None,
    n_cap: int | None = None,
    shuffle_seed: int | None = None,
) -> ExtremalReport:
    """Determine the classes permitting the fewest/most colourings eventually.

    One polynomial per equivalence class; winners are partitioned by the
    leading coefficient of difference polynomials, so ties mean exactly
    equal polynomials.  workers > 1 fans the per-class computations over a
    thread pool sharing one memo cache; the reduction is deterministic.
    """
    classes = enumerate_k_restraints(g, k, n_cap=n_cap, shuffle_seed=shuffle_seed)
    memo = cache if cache is not None else MemoCache()

    def poly_for(cls: RestraintClass) -> IntPolynomial:
        return restrained_poly(g, cls.representative, cache=memo)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            polys = list(pool.map(poly_for, classes))
    else:
        polys = [poly_for(cls) for cls in classes]

    keys = [_descending_key(p, g.n) for p in polys]
    best = max(keys)
    worst = min(keys)
    max_classes = tuple(c for c, key in zip(classes, keys) if key == best)
    min_classes = tuple(c for c, key in zip(classes, keys) if key == worst)
    max_poly = polys[keys.index(best)]
    min_poly = polys[keys.index(worst)]
    max_witness = {}
    min_witness = {}
    for cls, poly, key in zip(classes, polys, keys):
        if key != best:
            diff = max_poly - poly
            max_witness[cls.class_id()] = (diff.degree, diff.leading)
        if key != worst:
            diff = poly - min_poly
            min_witness[cls.class_id()] = (diff.degree, diff.leading)
    return ExtremalReport(
        graph_id=to_graph6(g),
        k=k,
        class_count=len(classes),
        min_classes=min_classes,
        max_classes=max_classes,
        min_poly=min_poly,
        max_poly=max_poly,
        max_witness=max_witness,
        min_witness=min_witness,
    )


# -- resumable store -----------------------------------------------------------


def _store_path(results_dir: str, graph_id: str, k: int) -> str:
    return os.path.join(results_dir, f"{graph_id.encode('ascii').hex()}_k{k}.json")


def report_from_record(g: Graph, record: dict) -> ExtremalReport:
    def classes_of(ids):
        return tuple(canonicalize(g, parse_restraint(cid)) for cid in ids)

    return ExtremalReport(
        graph_id=record["graph6"],
        k=record["k"],
        class_count=record["class_count"],
        min_classes=classes_of(record["min_classes"]),
        max_classes=classes_of(record["max_classes"]),
        min_poly=IntPolynomial(int(c) for c in record["min_poly"]),
        max_poly=IntPolynomial(int(c) for c in record["max_poly"]),
        max_witness={cid: (d, int(c)) for cid, (d, c) in record["max_witness"].items()},
        min_witness={cid: (d, int(c)) for cid, (d, c) in record["min_witness"].items()},
    )


def load_or_compute_extremal(g: Graph, k: int, results_dir: str, **kwargs) -> ExtremalReport:
    """find_extremal with a results directory keyed by (graph6, k)."""
    os.makedirs(results_dir, exist_ok=True)
    path = _store_path(results_dir, to_graph6(g), k)
    if os.path.exists(path):
        with open(path, "r", encoding="ascii") as fh:
            return report_from_record(g, json.load(fh))
    report = find_extremal(g, k, **kwargs)
    with open(path, "w", encoding="ascii") as fh:
        json.dump(report.to_record(), fh, sort_keys=True)
    return report


# -- theorem verification ----------------------------------------------------------


@dataclass
class VerifyReport:
    theorem: str
    k: int
    records: list
    violations: list

    def summary(self) -> str:
        return f"{self.theorem}: {len(self.records)} graphs checked, {len(self.violations)} violations"


def _ids(classes) -> list[str]:
    return [c.class_id() for c in classes]


def verify_min_theorem(catalog, k: int, workers: int = 1) -> VerifyReport:
    """Check that the constant restraint is the unique minimizing class.

    Expects connected graphs; each record carries the winner set and, on a
    violation, the witnessing polynomial coefficient vectors.
    """
    records = []
    violations = []
    for g in catalog:
        report = find_extremal(g, k, workers=workers)
        expected = canonicalize(g, constant_restraint(g, k))
        ok = {c.canon for c in report.min_classes} == {expected.canon}
        rec = {
            "graph6": report.graph_id,
            "k": k,
            "ok": ok,
            "expected": expected.class_id(),
            "min_classes": _ids(report.min_classes),
        }
        if not ok:
            rec["min_poly"] = [str(c) for c in report.min_poly.coeffs]
            rec["expected_poly"] = [
                str(c) for c in restrained_poly(g, expected.representative).coeffs
            ]
            violations.append(rec)
        records.append(rec)
    return VerifyReport(theorem="min", k=k, records=records, violations=violations)


def verify_properness(catalog, k: int, workers: int = 1) -> VerifyReport:
    """Check that every maximizing class is a proper restraint."""
    records = []
    violations = []
    for g in catalog:
        report = find_extremal(g, k, workers=workers)
        improper = [c for c in report.max_classes if not is_proper(g, c.representative)]
        rec = {
            "graph6": report.graph_id,
            "k": k,
            "ok": not improper,
            "max_classes": _ids(report.max_classes),
            "improper_winners": _ids(improper),
        }
        if improper:
            violations.append(rec)
        records.append(rec)
    return VerifyReport(theorem="proper", k=k, records=records, violations=violations)


def verify_bipartite_max(catalog, k: int, workers: int = 1) -> VerifyReport:
    """Check that the alternating restraint is the unique maximizing class
    on connected bipartite graphs; non-bipartite inputs are skipped with a
    notice."""
    records = []
    violations = []
    for g in catalog:
        if g.bipartition() is None:
            records.append({"graph6": to_graph6(g), "k": k, "skipped": "not bipartite"})
            continue
        report = find_extremal(g, k, workers=workers)
        expected = canonicalize(g, alternating_restraint(g, k))
        ok = {c.canon for c in report.max_classes} == {expected.canon}
        rec = {
            "graph6": report.graph_id,
            "k": k,
            "ok": ok,
            "expected": expected.class_id(),
            "max_classes": _ids(report.max_classes),
        }
        if not ok:
            rec["max_poly"] = [str(c) for c in report.max_poly.coeffs]
            rec["expected_poly"] = [
                str(c) for c in restrained_poly(g, expected.representative).coeffs
            ]
            violations.append(rec)
        records.append(rec)
    return VerifyReport(theorem="bipartite", k=k, records=records, violations=violations)


def verify_a7_condition(g: Graph, k: int, workers: int = 1) -> dict:
    """Check the two necessary maximality conditions on one graph.

    Every maximizing class must be proper and attain the minimum of the
    per-common-neighbour overlap term over all proper classes.  The record
    also reports whether that minimum pins down a unique class, and the
    once-per-pair overlap variant for each attaining class.
    """
    report = find_extremal(g, k, workers=workers)
    classes = enumerate_k_restraints(g, k)
    proper_classes = [c for c in classes if is_proper(g, c.representative)]
    terms = {c.class_id(): common_neighbor_overlap(g, c.representative) for c in proper_classes}
    pair_terms = {c.class_id(): shared_pair_overlap(g, c.representative) for c in proper_classes}
    minimum = min(terms.values())
    attaining = sorted(cid for cid, t in terms.items() if t == minimum)
    max_ids = set(_ids(report.max_classes))
    ok = max_ids <= set(attaining) and all(
        is_proper(g, c.representative) for c in report.max_classes
    )
    return {
        "graph6": report.graph_id,
        "k": k,
        "ok": ok,
        "proper_class_count": len(proper_classes),
        "min_term": minimum,
        "attaining": attaining,
        "unique": len(attaining) == 1,
        "pair_terms": {cid: pair_terms[cid] for cid in attaining},
        "pair_term_min": min(pair_terms.values()) if pair_terms else 0,
        "max_classes": sorted(max_ids),
    }


# -- odd-cycle conjecture ------------------------------------------------------------


def conjectured_odd_cycle_restraint(n: int) -> tuple[Restraint | None, list[int]]:
    """Build the conjectured odd-cycle maximizer by the printed index cases.

    Colour 1 on odd positions up to (n-1)/2; colour 2 on even positions up
    to (n-3)/2 and on (n+3)/2, (n+7)/2, ...; colour 3 on (n+1)/2,
    (n+5)/2, ... up to n-1 (positions 1-based).  Returns the restraint and
    the list of uncovered positions; when any position is uncovered or
    doubly assigned the restraint is None (pattern ill-defined for that n).
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be an odd integer >= 5")
    assignment: dict[int, int] = {}
    conflict = False

    def assign(i: int, colour: int):
        nonlocal conflict
        if assignment.get(i, colour) != colour:
            conflict = True
        assignment[i] = colour

    for i in range(1, (n - 1) // 2 + 1, 2):
        assign(i, 1)
    for i in range(2, (n - 3) // 2 + 1, 2):
        assign(i, 2)
    for i in range((n + 3) // 2, n + 1, 2):
        assign(i, 2)
    for i in range((n + 1) // 2, n, 2):
        assign(i, 3)
    uncovered = [i for i in range(1, n + 1) if i not in assignment]
    if uncovered or conflict:
        return None, uncovered
    return Restraint([(assignment[i],) for i in range(1, n + 1)]), []


def check_conjecture(n: int, k: int = 1, workers: int = 1) -> dict:
    """Compare the conjectured odd-cycle pattern against exhaustive search.

    Reports, never asserts: the record carries the winner classes, the
    built pattern (when its index cases cover every position), and whether
    they coincide (None when the pattern is ill-defined for this n).
    """
    if k != 1:
        raise ValueError("the conjectured pattern is stated for k=1 only")
    star, uncovered = conjectured_odd_cycle_restraint(n)
    g = cycle_graph(n)
    report = find_extremal(g, k, workers=workers)
    winners = sorted(_ids(report.max_classes))
    rec = {
        "n": n,
        "k": k,
        "pattern_total": star is not None,
        "uncovered_indices": uncovered,
        "conjectured": render_restraint(star) if star is not None else None,
        "winners": winners,
        "class_count": report.class_count,
        "matches": None,
    }
    if star is not None:
        star_class = canonicalize(g, star)
        rec["conjectured_class"] = star_class.class_id()
        rec["matches"] = {c.canon for c in report.max_classes} == {star_class.canon}
    return rec


def connected_bipartite_catalog(n_max: int) -> list[Graph]:
    """Connected bipartite graphs with 1..n_max vertices, one per class."""
    out = []
    for n in range(1, n_max + 1):
        for g in all_connected_graphs(n):
            if g.bipartition() is not None:
                out.append(g)
    return out
