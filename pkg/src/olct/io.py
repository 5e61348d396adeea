"""JSON signal/spectrum files, JSON verification reports, CSV plot data.

Complex samples are serialized as two-element [re, im] arrays.  Floats
are written with shortest round-trip decimal representation, so a
write/read cycle reproduces every value bit-exactly.
"""
from __future__ import annotations

import csv
import dataclasses
import json
from datetime import datetime, timezone
from typing import Any

import numpy as np

from .sampling import Grid, SampledSignal
from .suite import Certificate

SIGNAL_FORMAT = "olct-signal/1"
REPORT_FORMAT = "olct-report/1"


def signal_to_dict(sig: SampledSignal, meta: dict[str, Any] | None = None) -> dict:
    return {
        "format": SIGNAL_FORMAT,
        "grid": {"offset": sig.grid.offset, "step": sig.grid.step,
                 "count": sig.grid.count},
        "values": [[float(v.real), float(v.imag)] for v in sig.values],
        "meta": meta or {},
    }


def signal_from_dict(doc: dict) -> SampledSignal:
    if doc.get("format") != SIGNAL_FORMAT:
        raise ValueError(f"unrecognized signal format {doc.get('format')!r}")
    g = doc["grid"]
    grid = Grid(offset=g["offset"], step=g["step"], count=g["count"])
    values = np.array([complex(re, im) for re, im in doc["values"]])
    return SampledSignal(grid, values)


def write_signal(path, sig: SampledSignal, meta: dict[str, Any] | None = None):
    with open(path, "w") as fh:
        json.dump(signal_to_dict(sig, meta), fh, indent=1)
        fh.write("\n")


def read_signal(path) -> SampledSignal:
    with open(path) as fh:
        return signal_from_dict(json.load(fh))


def report_to_dict(certificates: list[Certificate], params_echo: dict,
                   signal_echo: dict, timestamp: bool = True) -> dict:
    doc = {
        "format": REPORT_FORMAT,
        "params": params_echo,
        "signal": signal_echo,
        "certificates": [dataclasses.asdict(c) for c in certificates],
        "overall_pass": all(c.passed for c in certificates),
    }
    if timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    return doc


def write_report(path, doc: dict):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_report(path) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != REPORT_FORMAT:
        raise ValueError(f"unrecognized report format {doc.get('format')!r}")
    return doc


def export_signal_csv(path, sig: SampledSignal):
    """Columns: coordinate, re, im, modulus; one row per sample."""
    coords = sig.grid.coords
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["coordinate", "re", "im", "modulus"])
        for x, v in zip(coords, sig.values):
            writer.writerow([repr(float(x)), repr(float(v.real)),
                             repr(float(v.imag)), repr(float(abs(v)))])


def export_report_csv(path, doc: dict):
    """One row per lambda of the weighted-moment sweep when present,
    otherwise one (name, lhs, rhs) row per certificate."""
    certs = doc["certificates"]
    pitt = next((c for c in certs if c["name"] == "pitt" and
                 "lambdas" in c.get("meta", {})), None)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if pitt is not None:
            writer.writerow(["lambda", "lhs", "rhs"])
            meta = pitt["meta"]
            for lam, lhs, rhs in zip(meta["lambdas"], meta["lhs_values"],
                                     meta["rhs_values"]):
                writer.writerow([repr(float(lam)), repr(float(lhs)),
                                 repr(float(rhs))])
        else:
            writer.writerow(["name", "lhs", "rhs"])
            for c in certs:
                writer.writerow([c["name"], repr(float(c["lhs"])),
                                 repr(float(c["rhs"]))])
