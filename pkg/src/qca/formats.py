"""JSON file formats for quivers and modules, plus the bundled data files."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from .finrep.rep import FqRep
from .lattice import IceQuiver, Lattice, check_compatible
from .scalars import is_prime

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def data_path(name: str) -> Path:
    return Path(str(resources.files("qca") / "data" / name))


def _read(source) -> dict:
    if isinstance(source, dict):
        return source
    path = Path(source)
    if not path.exists():
        bundled = data_path(path.name if path.suffix else path.name + ".json")
        if bundled.exists():
            path = bundled
        else:
            raise FormatError(f"no such file: {source}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def quiver_from_json(source) -> Tuple[IceQuiver, Optional[np.ndarray]]:
    """Parse a quiver file: ``{"m": 4, "n": 2, "arrows": [[1, 2], ...], "lambda": [[...]]}``."""
    d = _read(source)
    try:
        q = IceQuiver(int(d["m"]), int(d["n"]), [tuple(a) for a in d["arrows"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"quiver file needs m, n and arrows ({exc})") from exc
    lam = d.get("lambda")
    if lam is not None:
        lam = np.asarray(lam, dtype=np.int64)
        if lam.shape != (q.m, q.m):
            raise FormatError(f"lambda must be {q.m} x {q.m}")
    return q, lam


def lattice_from_json(source) -> Lattice:
    q, lam = quiver_from_json(source)
    return Lattice.from_quiver(q, lam)


def quiver_to_json(q: IceQuiver, lam=None) -> dict:
    d = {"m": q.m, "n": q.n, "arrows": [list(a) for a in q.arrows]}
    if lam is not None:
        d["lambda"] = np.asarray(lam).tolist()
    return d


def module_from_json(source, quiver: IceQuiver, p: Optional[int] = None) -> FqRep:
    """Parse ``{"p": 2, "dims": [...], "maps": [{"arrow": 0, "matrix": [[1]]}, ...]}``.

    ``dims`` may cover only the exchangeable vertices; arrows left out carry zero maps.
    A given ``p`` overrides the file's field and the integer entries are read mod p.
    """
    d = _read(source)
    try:
        p = int(d["p"]) if p is None else int(p)
        dims = [int(t) for t in d["dims"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"module file needs p and dims ({exc})") from exc
    if len(dims) == quiver.n:
        dims += [0] * (quiver.m - quiver.n)
    if len(dims) != quiver.m:
        raise FormatError(f"dims has length {len(dims)}; the quiver has {quiver.m} vertices")
    maps = [None] * len(quiver.arrows)
    for entry in d.get("maps", []):
        idx = int(entry["arrow"])
        if not 0 <= idx < len(quiver.arrows):
            raise FormatError(f"arrow index {idx} out of range")
        s, t = quiver.arrows[idx]
        mat = np.asarray(entry["matrix"], dtype=np.int64)
        shape = (dims[s - 1], dims[t - 1])
        if mat.size == 0:
            mat = np.zeros(shape, dtype=np.int64)
        if mat.shape != shape:
            raise FormatError(f"arrow {idx} ({s}->{t}) needs a {shape[0]}x{shape[1]} matrix, got {mat.shape}")
        maps[idx] = mat
    if not is_prime(p):
        raise FormatError(f"p={p} is not prime")
    return FqRep(quiver, p, dims, maps)


def module_to_json(M: FqRep) -> dict:
    return {
        "p": M.p,
        "dims": list(M.dims),
        "maps": [{"arrow": i, "matrix": a.tolist()} for i, a in enumerate(M.maps) if a.size],
    }


def parse_shift(text: Optional[str], m: int) -> tuple:
    """``"1:2,3:1"`` -> multiplicity vector with 2 at vertex 1 and 1 at vertex 3."""
    out = [0] * m
    if not text:
        return tuple(out)
    for part in text.split(","):
        try:
            i, c = part.split(":")
            i, c = int(i), int(c)
        except ValueError as exc:
            raise FormatError(f"bad shift entry {part!r}; expected vertex:multiplicity") from exc
        if not 1 <= i <= m or c < 0:
            raise FormatError(f"bad shift entry {part!r}")
        out[i - 1] += c
    return tuple(out)


def check_lambda(lattice: Lattice) -> str:
    comp = check_compatible(lattice.lam, lattice.btilde)
    if not comp:
        return f"not compatible: {comp.reason}"
    d = comp.d
    if all(x == 1 for x in d):
        return f"compatible, D = I{len(d)}"
    return f"compatible, D = diag({', '.join(map(str, d))})"
