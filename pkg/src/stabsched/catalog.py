"""Built-in code catalog: named constructors with validated (n, k) metadata.

Constructor parameters in the manifest are treated as candidates, not
truth: loading a catalog code recomputes (n, k) and refuses mismatches.
Distance values are metadata only (exact, estimated, or reported) and are
never recomputed here.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import codes
from .codes import CodeError, CssCode, StabilizerCode
from .gf2 import BitMatrix

_SURFACE_RE = re.compile(r"^surface:d=(\d+)$")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    code: CssCode | StabilizerCode
    n: int
    k: int
    d: int
    d_method: str


def _manifest() -> dict:
    with resources.files("stabsched.data").joinpath("catalog.json").open() as fh:
        return json.load(fh)


def _cyclic_seed(blocklen: int, hop: int) -> BitMatrix:
    """(blocklen - hop) x blocklen circulant rows of 1 + x + x^hop."""
    rows = []
    for i in range(blocklen - hop):
        r = np.zeros(blocklen, dtype=np.uint8)
        for off in (0, 1, hop):
            r[(i + off) % blocklen] ^= 1
        rows.append(r)
    return BitMatrix.from_array(np.array(rows, dtype=np.uint8))


def _construct(name: str, spec: dict) -> CssCode | StabilizerCode:
    family = spec["family"]
    params = spec.get("params", {})
    if family == "steane":
        return codes.steane_css()
    if family == "bb":
        return codes.bb_code(
            params["l"],
            params["m"],
            [tuple(t) for t in params["a_terms"]],
            [tuple(t) for t in params["b_terms"]],
            name=name,
        )
    if family == "gb":
        return codes.gb_code(params["blocklen"], params["a_terms"], params["b_terms"], name=name)
    if family == "hgp-cyclic":
        seed = _cyclic_seed(params["blocklen"], params["hop"])
        return codes.hgp(seed, seed, name=name)
    if family == "datafile":
        text = resources.files("stabsched.data").joinpath(params["file"]).read_text()
        return codes.parse_css(text, name=name)
    raise CodeError(f"unknown catalog family {family!r}")


def names() -> list[str]:
    return sorted(_manifest().keys())


def load(name: str) -> CatalogEntry:
    """Load a catalog code by name (also accepts ``surface:d=<odd>``)."""
    m = _SURFACE_RE.match(name)
    if m:
        d = int(m.group(1))
        code = codes.surface_code(d)
        n, k = codes.code_parameters(code)
        if (n, k) != (d * d, 1):
            raise CodeError(f"surface construction produced ({n}, {k}), expected ({d * d}, 1)")
        return CatalogEntry(name, "surface", code, n, k, d, "parameter")
    manifest = _manifest()
    if name not in manifest:
        raise CodeError(f"unknown code {name!r}; known: {', '.join(names())} or surface:d=<odd>")
    spec = manifest[name]
    code = _construct(name, spec)
    n, k = codes.code_parameters(code)
    exp = spec["expected"]
    if (n, k) != (exp["n"], exp["k"]):
        raise CodeError(
            f"catalog {name}: constructed ({n}, {k}) does not match expected ({exp['n']}, {exp['k']})"
        )
    return CatalogEntry(name, spec["family"], code, n, k, spec["d"], spec["d_method"])


def resolve(source: str) -> CatalogEntry:
    """Resolve a code source: catalog name, surface:d=N, or a file path."""
    try:
        return load(source)
    except CodeError as err:
        import os

        if os.path.exists(source):
            with open(source) as fh:
                text = fh.read()
            base = os.path.splitext(os.path.basename(source))[0]
            head = text.lstrip().split(None, 1)[0] if text.strip() else ""
            if head == "CSS":
                code = codes.parse_css(text, name=base)
            else:
                code = codes.parse_bsf(text, name=base)
            n, k = codes.code_parameters(code)
            return CatalogEntry(base, "file", code, n, k, -1, "unknown")
        raise err
