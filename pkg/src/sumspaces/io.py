"""JSON/CSV serialization of families, cosine matrices and reports.

Family files carry spanning sets as row vectors; they are orthonormalized
on load, so hand-written files need not be orthonormal.  Floats are
written with Python's shortest round-trip representation, which is
lossless at double precision, so writing a family and re-reading it
reproduces identical numbers.
"""

import hashlib
import json
import warnings
from dataclasses import asdict
from datetime import datetime, timezone

import numpy as np

from ._version import __version__
from .counterexamples import CounterexampleVerification
from .criterion import CriterionReport, EMatrix
from .iteration import ConvergenceReport
from .subspaces import SubspaceFamily, orthonormalize


def load_family(path):
    """Read a family file; returns (SubspaceFamily, member names).

    Each entry's vectors are treated as a spanning set and orthonormalized;
    a warning is emitted when the numerical rank falls short of the number
    of supplied vectors.
    """
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("family file must be a JSON object")
    try:
        d = int(doc["ambient_dim"])
        entries = doc["subspaces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"family file missing/invalid field: {exc}") from exc
    if d < 1:
        raise ValueError(f"ambient_dim must be positive, got {d}")
    if not isinstance(entries, list) or not entries:
        raise ValueError("subspaces must be a non-empty list")

    members, names = [], []
    for idx, entry in enumerate(entries):
        name = str(entry.get("name", f"X{idx + 1}"))
        vectors = entry.get("vectors")
        if not isinstance(vectors, list) or not vectors:
            raise ValueError(f"subspace {name!r} needs at least one vector")
        arr = np.asarray(vectors, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != d:
            raise ValueError(
                f"subspace {name!r}: vectors must all have length {d}"
            )
        sub = orthonormalize(arr.T)
        if sub.dim < arr.shape[0]:
            warnings.warn(
                f"subspace {name!r}: numerical rank {sub.dim} is below the "
                f"{arr.shape[0]} supplied vectors",
                stacklevel=2,
            )
        members.append(sub)
        names.append(name)
    return SubspaceFamily(d, tuple(members)), names


def save_family(path, family: SubspaceFamily, names=None):
    """Write a family file; basis columns become row vectors."""
    if names is None:
        names = [f"X{i + 1}" for i in range(family.n)]
    doc = {
        "ambient_dim": family.ambient_dim,
        "subspaces": [
            {"name": name, "vectors": member.basis.T.tolist()}
            for name, member in zip(names, family.members)
        ],
    }
    _dump_json(path, doc)


def load_ematrix(path) -> EMatrix:
    """Read an angle-cosine matrix file {"n": int, "entries": [[...]]}."""
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("matrix file must be a JSON object")
    try:
        n = int(doc["n"])
        entries = np.asarray(doc["entries"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"matrix file missing/invalid field: {exc}") from exc
    return EMatrix(n, entries)


def save_ematrix(path, e: EMatrix):
    _dump_json(path, {"n": e.n, "entries": e.entries.tolist()})


def criterion_section(report: CriterionReport) -> dict:
    return {
        "spectral_radius": report.spectral_radius,
        "satisfied": report.satisfied,
        "boundary": report.boundary,
        "margin": report.margin,
        "leading_minors": list(report.leading_minors),
        "angle_sum": report.angle_sum,
    }


def convergence_section(report: ConvergenceReport) -> dict:
    return {
        "convergence": [
            {"N": s.N, "error": s.error, "bound": s.bound} for s in report.steps
        ],
        "frame": {
            "frame_lower": report.frame_lower,
            "frame_upper": report.frame_upper,
            "r": report.r,
            "a_restricted_deviation": report.a_restricted_deviation,
        },
    }


def verification_section(record: CounterexampleVerification) -> dict:
    return asdict(record)


def report_metadata(input_path) -> dict:
    with open(input_path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    return {
        "input_sha256": digest,
        "tool_version": __version__,
        "created": datetime.now(timezone.utc).isoformat(),
    }


def write_report(path_or_none, doc: dict, stream=None):
    """Write a report to a file, or to the stream when no path is given."""
    text = json.dumps(doc, indent=2) + "\n"
    if path_or_none is None:
        if stream is not None:
            stream.write(text)
    else:
        with open(path_or_none, "w") as fh:
            fh.write(text)


def write_convergence_csv(path, report: ConvergenceReport):
    """CSV with header N,error,bound and LF line endings."""
    with open(path, "w", newline="") as fh:
        fh.write("N,error,bound\n")
        for s in report.steps:
            fh.write(f"{s.N},{s.error!r},{s.bound!r}\n")


def _dump_json(path, doc):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
