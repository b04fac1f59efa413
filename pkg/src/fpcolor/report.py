"""JSON reports and definition-level certificate re-verification.

Reports are the product's single output format; with fixed inputs and seeds
they are byte-identical across runs (timing is opt-in precisely so the
default output stays canonical).  ``verify_report`` re-checks certificates
against the definitions only, never trusting solver internals.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from itertools import product

from fpcolor.errors import CapExceeded
from fpcolor.graph import Graph, bits, from_graph6, mask_of
from fpcolor.params import get_parameter
from fpcolor.solvers import (
    ColResult,
    IslandCertificate,
    ListAssignment,
    PeelDecomposition,
    island_free_exhaustive,
    verify_fp_proper,
    verify_peel,
    _is_island,
)

BAD_ASSIGNMENT_VERIFY_CAP = 10**6


def jsonable(obj):
    """Recursively convert report payloads to plain JSON types."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return obj


def canonical_json(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def make_report(command, inputs, result, certificate=None, status="exact", elapsed_ms=None):
    report = {
        "command": command,
        "inputs": jsonable(inputs),
        "result": jsonable(result),
        "certificate": jsonable(certificate),
        "status": status,
    }
    if elapsed_ms is not None:
        report["elapsed_ms"] = elapsed_ms
    return report


class Stopwatch:
    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed_ms = int((time.monotonic() - self.start) * 1000)
        return False


# -- certificate (de)serialization ------------------------------------------


def peel_to_json(decomposition: PeelDecomposition):
    return {
        "type": "peel",
        "s": decomposition.s,
        "f": decomposition.f_id,
        "p": decomposition.p,
        "islands": [sorted(bits(c.island)) for c in decomposition.islands],
    }


def col_to_json(res: ColResult):
    lower = None
    if res.lower_certificate is not None:
        lower = {
            "type": "island_free",
            "s": res.value - 1,
            "f": res.upper_certificate.f_id,
            "p": res.upper_certificate.p,
            "vertices": sorted(bits(res.lower_certificate)),
        }
    return {
        "type": "col",
        "value": res.value,
        "upper": peel_to_json(res.upper_certificate),
        "lower": lower,
    }


def coloring_to_json(coloring, f_id, p, lists=None):
    cert = {"type": "coloring", "f": f_id, "p": p, "colors": list(coloring)}
    if lists is not None:
        cert["lists"] = [sorted(lst) for lst in lists]
    return cert


def assignment_to_json(L: ListAssignment, f_id, p):
    return {
        "type": "bad_list_assignment",
        "s": L.s,
        "f": f_id,
        "p": p,
        "lists": [sorted(lst) for lst in L.lists],
    }


def island_to_json(cert: IslandCertificate, f_id, p):
    return {
        "type": "island",
        "s": cert.s,
        "f": f_id,
        "p": p,
        "f_value": cert.f_value,
        "vertices": sorted(bits(cert.island)),
        "outside_counts": {str(v): c for v, c in sorted(cert.outside_counts.items())},
    }


# -- re-verification -----------------------------------------------------------


class CertificateError(ValueError):
    """Malformed or unverifiable certificate."""


def _graph_from_report(report):
    try:
        g6 = report["inputs"]["graph6"]
    except KeyError:
        raise CertificateError("report lacks inputs.graph6; cannot re-verify") from None
    g = from_graph6(g6)
    declared = report["inputs"].get("graph_hash")
    if declared is not None and declared != g.content_hash():
        raise CertificateError("graph hash mismatch: report was tampered with")
    return g


def verify_certificate(g: Graph, cert: dict) -> bool:
    """Re-check one certificate against the definitions."""
    kind = cert.get("type")
    if kind == "peel":
        f = get_parameter(cert["f"])
        islands = tuple(
            IslandCertificate(mask_of(vs), cert["s"], 0, {}) for vs in cert["islands"]
        )
        return verify_peel(g, PeelDecomposition(islands, cert["s"], cert["f"], cert["p"]), f)
    if kind == "island_free":
        f = get_parameter(cert["f"])
        mask = mask_of(cert["vertices"])
        try:
            return island_free_exhaustive(g, cert["s"], f, cert["p"], active=mask)
        except CapExceeded:
            raise CertificateError("lower certificate unverifiable at cap") from None
    if kind == "col":
        if not verify_certificate(g, cert["upper"]):
            return False
        if cert["upper"]["s"] != cert["value"]:
            return False
        lower = cert.get("lower")
        if cert["value"] > 1:
            if lower is None:
                return False
            if lower["s"] != cert["value"] - 1:
                return False
            return verify_certificate(g, lower)
        return True
    if kind == "island":
        f = get_parameter(cert["f"])
        mask = mask_of(cert["vertices"])
        if not mask:
            return False
        return _is_island(g, mask, g.full_mask(), cert["s"]) and f.eval_mask(g, mask) <= cert["p"]
    if kind == "coloring":
        f = get_parameter(cert["f"])
        colors = cert["colors"]
        if len(colors) != g.n:
            return False
        lists = cert.get("lists")
        if lists is not None:
            if len(lists) != g.n or any(c not in set(lst) for c, lst in zip(colors, lists)):
                return False
        return verify_fp_proper(g, tuple(colors), f, cert["p"])
    if kind == "bad_list_assignment":
        f = get_parameter(cert["f"])
        lists = [sorted(lst) for lst in cert["lists"]]
        if len(lists) != g.n:
            return False
        total = 1
        for lst in lists:
            if len(lst) < cert["s"]:
                return False
            total *= len(lst)
            if total > BAD_ASSIGNMENT_VERIFY_CAP:
                raise CertificateError("bad-assignment certificate unverifiable at cap")
        for combo in product(*lists):
            if verify_fp_proper(g, combo, f, cert["p"]):
                return False  # a proper coloring exists: not a counterexample
        return True
    raise CertificateError(f"unknown certificate type {kind!r}")


def verify_report(report: dict) -> bool:
    cert = report.get("certificate")
    if cert is None:
        raise CertificateError("report carries no certificate")
    g = _graph_from_report(report)
    return verify_certificate(g, cert)
