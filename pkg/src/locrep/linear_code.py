"""Linear scalar codes over GF(2^m) given by generator columns.

A code of length n and dimension M is the set of words (u . g_1, ...,
u . g_n) for messages u in GF(2^m)^M, where g_i is the i-th generator
column.  Coordinates are numbered 1..n throughout the public API.  The
joint entropy of a coordinate subset (in 2^m-ary symbol units) equals
the rank of the corresponding columns, which is the single oracle every
higher-level query goes through; minimum distance is the exact
subset-rank quantity n - max{|E| : rank(E) < M}.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Protocol, Sequence

from . import gf2m
from .errors import DomainError, SearchCapExceeded

#: Largest code length accepted by exhaustive subset scans by default.
DEFAULT_SEARCH_CAP = 24


class EntropyOracle(Protocol):
    """What the combinatorial layers need to know about a code.

    Anything exposing length, dimension, fragment size and a joint
    entropy query can be analysed; :class:`LinearCode` realises entropy
    as column rank, which is exact for linear scalar codes.
    """

    n: int
    M: int
    alpha: int

    def entropy(self, members: Iterable[int]) -> int: ...


class LinearCode:
    """An (n, M) linear code over GF(2^m), stored as generator columns.

    The generator must have full rank M (otherwise the n coordinates
    would not determine an M-symbol file).  Instances are immutable;
    entropy queries are cached per coordinate subset.
    """

    __slots__ = ("field", "n", "M", "alpha", "columns", "_rank_cache")

    def __init__(
        self,
        field: gf2m.GF2m,
        n: int,
        M: int,
        columns: Sequence[Sequence[int]],
        alpha: int = 1,
    ):
        if not 1 <= M <= n:
            raise DomainError(f"need 1 <= M <= n, got M={M}, n={n}")
        if alpha != 1:
            raise DomainError("concrete codes here are scalar (alpha = 1)")
        if len(columns) != n:
            raise DomainError(f"expected {n} columns, got {len(columns)}")
        cols = tuple(tuple(field._check(x) for x in col) for col in columns)
        for col in cols:
            if len(col) != M:
                raise DomainError(
                    f"ragged column: expected {M} entries, got {len(col)}"
                )
        if gf2m.matrix_rank(field, M, cols) != M:
            raise DomainError("generator columns must have full rank M")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "_rank_cache", {0: 0})

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    def _coord_mask(self, members: Iterable[int]) -> int:
        mask = 0
        for i in members:
            if not isinstance(i, int) or not 1 <= i <= self.n:
                raise DomainError(f"coordinate {i!r} is not in 1..{self.n}")
            mask |= 1 << (i - 1)
        return mask

    def entropy(self, members: Iterable[int]) -> int:
        """Joint entropy of a coordinate subset, in 2^m-ary symbols.

        Realised as the rank of the selected generator columns; 0 for
        the empty set and M for the full coordinate set.
        """
        mask = self._coord_mask(members)
        cached = self._rank_cache.get(mask)
        if cached is not None:
            return cached
        cols = [self.columns[i] for i in range(self.n) if (mask >> i) & 1]
        r = gf2m.matrix_rank(self.field, self.M, cols)
        self._rank_cache[mask] = r
        return r

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """Codeword for an M-symbol message."""
        if len(message) != self.M:
            raise DomainError(f"message must have {self.M} symbols")
        mul = self.field.mul
        word = []
        for col in self.columns:
            s = 0
            for u, g in zip(message, col):
                s ^= mul(u, g)
            word.append(s)
        return tuple(word)

    def __repr__(self):
        return (
            f"LinearCode(n={self.n}, M={self.M}, "
            f"field=GF(2^{self.field.degree}))"
        )


def _check_search_cap(code: LinearCode, search_cap: Optional[int]) -> None:
    cap = DEFAULT_SEARCH_CAP if search_cap is None else search_cap
    if code.n > cap:
        raise SearchCapExceeded(
            f"instance too large: n={code.n} exceeds the exhaustive-search "
            f"cap of {cap} coordinates"
        )


def _expand_columns(code: LinearCode) -> list[list[int]]:
    """Per column, the m bit-packed GF(2) images of z^t * column.

    The GF(2)-span of these expansions equals the GF(2^m)-span of the
    columns, so GF(2^m) rank can be tracked with plain integer XOR.
    """
    field = code.field
    m = field.degree
    mul = field.mul
    out = []
    for col in code.columns:
        vecs = []
        zt = 1
        for _ in range(m):
            packed = 0
            shift = 0
            for c in col:
                packed |= mul(zt, c) << shift
                shift += m
            vecs.append(packed)
            zt = mul(zt, 2)
        out.append(vecs)
    return out


def _max_deficient(code: LinearCode) -> tuple[int, tuple[int, ...]]:
    """Largest rank-deficient coordinate subset and its lex-first witness.

    Depth-first scan over subsets in lexicographic order, keeping an
    incremental GF(2) echelon of the expanded columns.  Two prunes keep
    it exact but fast: a subset that already has full rank cannot sit
    inside a deficient one, and a branch that cannot exceed the best
    size found so far is dropped.  The result (and witness) match a
    naive size-descending scan that stops at the first deficient subset
    of each size.
    """
    n, M = code.n, code.M
    m = code.field.degree
    exp_cols = _expand_columns(code)
    pivots = [0] * (M * m)
    # Any M-1 columns are trivially deficient, so that is the floor and
    # the first M-1 coordinates are its lex-first witness.
    best_size = M - 1
    best_set = tuple(range(1, M))
    path: list[int] = []

    def dfs(start: int, size: int, rank: int) -> None:
        nonlocal best_size, best_set
        for j in range(start, n):
            if size + (n - j) <= best_size:
                break
            vecs = exp_cols[j]
            v = vecs[0]
            while v:
                p = v.bit_length() - 1
                w = pivots[p]
                if not w:
                    break
                v ^= w
            if v:
                # column independent of the current span
                if rank + 1 < M:
                    added = []
                    for vec in vecs:
                        u = vec
                        while u:
                            p = u.bit_length() - 1
                            w = pivots[p]
                            if not w:
                                pivots[p] = u
                                added.append(p)
                                break
                            u ^= w
                    if len(added) != m:
                        raise AssertionError("GF(2) expansion lost dimensions")
                    path.append(j)
                    if size + 1 > best_size:
                        best_size = size + 1
                        best_set = tuple(c + 1 for c in path)
                    dfs(j + 1, size + 1, rank + 1)
                    path.pop()
                    for p in added:
                        pivots[p] = 0
                # rank would reach M: every superset is full-rank, skip
            else:
                path.append(j)
                if size + 1 > best_size:
                    best_size = size + 1
                    best_set = tuple(c + 1 for c in path)
                dfs(j + 1, size + 1, rank)
                path.pop()

    dfs(0, 0, 0)
    return best_size, best_set


def min_distance(code: LinearCode, search_cap: Optional[int] = None) -> int:
    """Exact minimum distance: n minus the largest deficient subset size.

    A subset is deficient when its joint entropy falls below M.  The
    scan is exhaustive over subsets, so the code length is gated by
    ``search_cap`` (default :data:`DEFAULT_SEARCH_CAP`).
    """
    _check_search_cap(code, search_cap)
    size, _ = _max_deficient(code)
    return code.n - size


def erasure_decodable(code: LinearCode, failed: Iterable[int]) -> bool:
    """Whether the surviving coordinates still determine the whole file."""
    failed_mask = code._coord_mask(failed)
    survivors = [i + 1 for i in range(code.n) if not (failed_mask >> i) & 1]
    return code.entropy(survivors) == code.M


# ---------------------------------------------------------------------------
# JSON code file format

def _elem_to_hex(v: int) -> str:
    return format(v, "x")


def _elem_from_hex(s: str) -> int:
    try:
        v = int(s, 16)
    except (TypeError, ValueError):
        raise DomainError(f"invalid hex symbol {s!r}") from None
    if v < 0:
        raise DomainError(f"invalid hex symbol {s!r}")
    return v


def to_json_dict(code: LinearCode, metadata: Optional[dict] = None) -> dict:
    """Serializable dict in the code file format.

    Hex strings encode coefficient bit-vectors with bit i holding the
    z^i coefficient (little-endian bit order).
    """
    obj = {
        "q": 2,
        "m": code.field.degree,
        "modulus_hex": _elem_to_hex(code.field.modulus),
        "n": code.n,
        "M": code.M,
        "columns": [[_elem_to_hex(x) for x in col] for col in code.columns],
    }
    if metadata is not None:
        obj["metadata"] = metadata
    return obj


def from_json_dict(obj: dict) -> tuple[LinearCode, Optional[dict]]:
    """Rebuild a code (and optional metadata block) from the file format."""
    try:
        q = obj["q"]
        m = obj["m"]
        modulus = _elem_from_hex(obj["modulus_hex"])
        n = obj["n"]
        M = obj["M"]
        raw_columns = obj["columns"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed code file: {exc}") from None
    if q != 2:
        raise DomainError(f"only base field GF(2) is supported, got q={q}")
    field = gf2m.GF2m(m, modulus)
    columns = [[_elem_from_hex(x) for x in col] for col in raw_columns]
    code = LinearCode(field, n, M, columns)
    return code, obj.get("metadata")


def dumps(code: LinearCode, metadata: Optional[dict] = None) -> str:
    """Deterministic JSON text for a code file."""
    return json.dumps(to_json_dict(code, metadata), indent=2, sort_keys=True)


def loads(text: str) -> tuple[LinearCode, Optional[dict]]:
    """Parse a code file from JSON text."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed code file: {exc}") from None
    return from_json_dict(obj)
