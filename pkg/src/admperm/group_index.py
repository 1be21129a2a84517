"""Indexed enumeration of a finite Weyl group.

Every element w is encoded by the integer vector of pairings
<alpha_j, w(rho^vee)>, where rho^vee is the sum of the fundamental
coweights.  The orbit of rho^vee is free, so this vector identifies w, and
the simple reflections act on it by integer row operations.  Elements are
numbered breadth-first by length; within a layer the order is (generator,
parent id), so ids are stable across runs.

Element w != e is stored as w = s_gen[w] * parent[w] where gen[w] is the
smallest left descent of w.  Following parents therefore spells out the
greedy smallest-left-descent reduced word.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from pathlib import Path

import numpy as np

from .finite_weyl import WeylElt, from_word
from .rootdata import RootDatum

FORMAT_VERSION = 1
DEFAULT_BUDGET = 2 * 1024**3


class BudgetExceeded(MemoryError):
    pass


def weyl_group_order(datum: RootDatum) -> int:
    kind, l = datum.type_label[0], datum.rank
    if kind == "A":
        return math.factorial(l + 1)
    if kind in "BC":
        return 2**l * math.factorial(l)
    if kind == "D":
        return 2 ** (l - 1) * math.factorial(l)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600}[datum.type_label]


def estimate_bytes(datum: RootDatum, with_tables: bool) -> int:
    n, l = weyl_group_order(datum), datum.rank
    base = n * (l + 8 + 8 + 4 + 1 + 1)  # omega vectors, keys, order, parent, gen, length
    if with_tables:
        base += n * l * 4 * 2 + n * 4
    return base


class GroupIndex:
    def __init__(self, datum, omega, parent, gen, layer_starts, ltab=None, rtab=None, inv=None):
        self.datum = datum
        self.omega = omega
        self.parent = parent
        self.gen = gen
        self.layer_starts = layer_starts
        self.order = len(parent)
        self.lengths = np.repeat(
            np.arange(len(layer_starts) - 1, dtype=np.uint8), np.diff(layer_starts)
        )
        self._radix = 2 * int(np.abs(omega).max()) + 1
        keys = self._keys(omega)
        self._sort = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sort]
        self.ltab = ltab
        self.rtab = rtab
        self.inv = inv

    @property
    def has_tables(self) -> bool:
        return self.rtab is not None

    def _keys(self, om: np.ndarray) -> np.ndarray:
        om = np.asarray(om, dtype=np.int64)
        h = (self._radix - 1) // 2
        keys = np.zeros(len(om), dtype=np.int64)
        for j in range(om.shape[1]):
            keys = keys * self._radix + (om[:, j] + h)
        return keys

    def lookup(self, om: np.ndarray) -> np.ndarray:
        """Ids of the elements with the given omega vectors."""
        om = np.atleast_2d(om)
        keys = self._keys(om)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        if not np.array_equal(self._sorted_keys[pos], keys):
            raise KeyError("vector is not in the W-orbit of rho^vee")
        return self._sort[pos]

    def id_of(self, w: WeylElt) -> int:
        d = self.datum
        winv = w.inverse().perm
        om = np.array([[d.height(winv[b]) for b in d.base]], dtype=np.int64)
        return int(self.lookup(om)[0])

    def word(self, i: int) -> tuple:
        out = []
        i = int(i)
        while i:
            out.append(int(self.gen[i]) + 1)
            i = int(self.parent[i])
        return tuple(out)

    def element(self, i: int) -> WeylElt:
        return from_word(self.datum, self.word(i))

    def length(self, i: int) -> int:
        return int(self.lengths[i])

    def layer(self, k: int) -> slice:
        return slice(int(self.layer_starts[k]), int(self.layer_starts[k + 1]))

    def prefix(self, max_len: int) -> int:
        """Number of elements of length <= max_len."""
        k = min(max_len + 1, len(self.layer_starts) - 1)
        return int(self.layer_starts[k])

    def right_mul_word(self, ids: np.ndarray, word) -> np.ndarray:
        """ids * s_{i1} * ... * s_{ik} using the right multiplication table."""
        self._need_tables()
        ids = np.asarray(ids)
        for i in word:
            ids = self.rtab[ids, i - 1]
        return ids

    def left_mul_word(self, word, ids: np.ndarray) -> np.ndarray:
        """s_{i1} * ... * s_{ik} * ids."""
        self._need_tables()
        ids = np.asarray(ids)
        for i in reversed(tuple(word)):
            ids = self.ltab[ids, i - 1]
        return ids

    def _need_tables(self):
        if self.rtab is None:
            raise RuntimeError("group index was built without multiplication tables")

    def checksum(self) -> str:
        h = hashlib.sha256()
        for arr in (self.omega, self.parent, self.gen, self.layer_starts):
            h.update(np.ascontiguousarray(arr).tobytes())
        return h.hexdigest()

    def save(self, path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        meta = {
            "format": FORMAT_VERSION,
            "type": self.datum.type_label,
            "order": self.order,
            "checksum": self.checksum(),
        }
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "wb") as fh:
            np.savez(fh, meta=np.frombuffer(json.dumps(meta).encode(), dtype=np.uint8),
                     omega=self.omega, parent=self.parent, gen=self.gen, layer_starts=self.layer_starts)
        os.replace(tmp, path)

    @classmethod
    def load(cls, datum: RootDatum, path, with_tables: bool = True) -> "GroupIndex":
        with np.load(path) as z:
            meta = json.loads(bytes(z["meta"]).decode())
            if meta.get("format") != FORMAT_VERSION or meta.get("type") != datum.type_label:
                raise ValueError(f"cache file {path} has format/type {meta.get('format')}/{meta.get('type')}")
            idx = cls(datum, z["omega"], z["parent"], z["gen"], z["layer_starts"])
        if idx.order != meta["order"] or idx.order != weyl_group_order(datum):
            raise ValueError(f"cache file {path}: wrong group order {idx.order}")
        if idx.checksum() != meta["checksum"]:
            raise ValueError(f"cache file {path}: checksum mismatch")
        if with_tables:
            idx._build_tables()
        return idx

    def _build_tables(self) -> None:
        cart = np.array(self.datum.cartan, dtype=np.int64)
        n, l = self.order, self.datum.rank
        ltab = np.empty((n, l), dtype=np.int32)
        for i in range(l):
            om = self.omega.astype(np.int64)
            om = om - om[:, i : i + 1] * cart[:, i]
            ltab[:, i] = self.lookup(om)
        rtab = np.empty((n, l), dtype=np.int32)
        inv = np.empty(n, dtype=np.int32)
        rtab[0] = ltab[0]
        inv[0] = 0
        for k in range(1, len(self.layer_starts) - 1):
            sl = self.layer(k)
            par = self.parent[sl]
            g = self.gen[sl].astype(np.int64)
            rtab[sl] = ltab[rtab[par], g[:, None]]
            inv[sl] = rtab[inv[par], g]
        self.ltab, self.rtab, self.inv = ltab, rtab, inv


def _bfs(datum: RootDatum):
    l = datum.rank
    cart = np.array(datum.cartan, dtype=np.int64)
    layer = np.ones((1, l), dtype=np.int64)
    omegas = [layer]
    parents = [np.zeros(1, dtype=np.int32)]
    gens = [np.zeros(1, dtype=np.int8)]
    starts = [0, 1]
    while True:
        off = starts[-2]
        new_om, new_par, new_gen = [], [], []
        for i in range(l):
            rows = np.nonzero(layer[:, i] > 0)[0]
            if not len(rows):
                continue
            cand = layer[rows] - layer[rows, i : i + 1] * cart[:, i]
            keep = ~(cand[:, :i] < 0).any(axis=1)
            new_om.append(cand[keep])
            new_par.append((rows[keep] + off).astype(np.int32))
            new_gen.append(np.full(int(keep.sum()), i, dtype=np.int8))
        if not new_om or sum(len(a) for a in new_om) == 0:
            break
        layer = np.concatenate(new_om)
        omegas.append(layer)
        parents.append(np.concatenate(new_par))
        gens.append(np.concatenate(new_gen))
        starts.append(starts[-1] + len(layer))
    omega = np.concatenate(omegas).astype(np.int8)
    return omega, np.concatenate(parents), np.concatenate(gens), np.array(starts, dtype=np.int64)


def build_group_index(datum: RootDatum, with_tables: bool = True, budget: int | None = DEFAULT_BUDGET) -> GroupIndex:
    need = estimate_bytes(datum, with_tables)
    if budget is not None and need > budget:
        raise BudgetExceeded(
            f"group index for {datum.type_label} needs about {need / 2**20:.0f} MiB, budget is {budget / 2**20:.0f} MiB"
        )
    omega, parent, gen, starts = _bfs(datum)
    if len(parent) != weyl_group_order(datum):
        raise AssertionError(f"BFS produced {len(parent)} elements, expected {weyl_group_order(datum)}")
    idx = GroupIndex(datum, omega, parent, gen, starts)
    if with_tables:
        idx._build_tables()
    return idx


def cache_path(datum: RootDatum, cache_dir=None) -> Path | None:
    cache_dir = cache_dir or os.environ.get("ADMPERM_CACHE")
    if not cache_dir:
        return None
    return Path(cache_dir) / f"weyl_{datum.type_label}_v{FORMAT_VERSION}.npz"


_INDEX_CACHE: dict = {}


def get_group_index(datum: RootDatum, with_tables: bool = True, budget: int | None = DEFAULT_BUDGET, cache_dir=None) -> GroupIndex:
    """Build (or load from the cache directory) and memoize a group index."""
    # checked before the memo so the outcome does not depend on what ran earlier in the process
    need = estimate_bytes(datum, with_tables)
    if budget is not None and need > budget:
        raise BudgetExceeded(
            f"group index for {datum.type_label} needs about {need / 2**20:.0f} MiB, budget is {budget / 2**20:.0f} MiB"
        )
    key = (datum.type_label, with_tables)
    if key in _INDEX_CACHE:
        return _INDEX_CACHE[key]
    path = cache_path(datum, cache_dir)
    idx = None
    if path is not None and path.exists():
        try:
            idx = GroupIndex.load(datum, path, with_tables=with_tables)
        except (ValueError, KeyError, OSError):
            idx = None
    if idx is None:
        idx = build_group_index(datum, with_tables=with_tables, budget=budget)
        if path is not None:
            idx.save(path)
    _INDEX_CACHE[key] = idx
    return idx
