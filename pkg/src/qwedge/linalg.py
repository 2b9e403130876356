"""Sparse exact linear algebra over an arbitrary field-like scalar type.

Vectors are dicts {label: scalar} holding only nonzero entries; labels are any
hashable values (tensor index tuples, weight tuples, ...). Matrices are stored
column-major. The scalar type only needs +, -, *, /, unary -, and truthiness
(Scalar, ZPoly, and Fraction all qualify), so the same elimination code runs
symbolically over Q(s) and numerically over Q at an evaluation point.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple

Vec = Dict[Hashable, object]


def vec_axpy(target: Vec, coeff, src: Vec) -> None:
    """target -= coeff * src, in place."""
    for label, v in src.items():
        w = v * coeff
        cur = target.get(label)
        if cur is None:
            target[label] = -w
        else:
            cur = cur - w
            if cur:
                target[label] = cur
            else:
                del target[label]


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for label, v in b.items():
        cur = out.get(label)
        cur = v if cur is None else cur + v
        if cur:
            out[label] = cur
        else:
            out.pop(label, None)
    return out


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for label, v in b.items():
        cur = out.get(label)
        cur = -v if cur is None else cur - v
        if cur:
            out[label] = cur
        else:
            out.pop(label, None)
    return out


def vec_scale(a: Vec, c) -> Vec:
    if not c:
        return {}
    return {label: v * c for label, v in a.items()}


class SparseMatrix:
    """Column-major sparse matrix with arbitrary hashable row/col labels."""

    __slots__ = ("cols",)

    def __init__(self, cols: Dict[Hashable, Vec] = None):
        self.cols = cols if cols is not None else {}

    @staticmethod
    def from_entries(entries: Iterable[Tuple[Hashable, Hashable, object]]):
        cols: Dict[Hashable, Vec] = {}
        for r, c, v in entries:
            if not v:
                continue
            col = cols.setdefault(c, {})
            cur = col.get(r)
            cur = v if cur is None else cur + v
            if cur:
                col[r] = cur
            else:
                col.pop(r, None)
        return SparseMatrix(cols)

    def set(self, r, c, v):
        if v:
            self.cols.setdefault(c, {})[r] = v
        else:
            col = self.cols.get(c)
            if col and r in col:
                del col[r]
                if not col:
                    del self.cols[c]

    def get(self, r, c):
        col = self.cols.get(c)
        return col.get(r) if col else None

    def entries(self):
        for c, col in self.cols.items():
            for r, v in col.items():
                yield r, c, v

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def is_zero(self) -> bool:
        return all(not v for col in self.cols.values() for v in col.values())

    def matvec(self, v: Vec) -> Vec:
        out: Vec = {}
        for c, coeff in v.items():
            col = self.cols.get(c)
            if not col or not coeff:
                continue
            for r, m in col.items():
                w = m * coeff
                cur = out.get(r)
                cur = w if cur is None else cur + w
                if cur:
                    out[r] = cur
                else:
                    out.pop(r, None)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {}
        for c, col in other.cols.items():
            image = self.matvec(col)
            if image:
                cols[c] = image
        return SparseMatrix(cols)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            mine = cols.setdefault(c, {})
            for r, v in col.items():
                cur = mine.get(r)
                cur = v if cur is None else cur + v
                if cur:
                    mine[r] = cur
                else:
                    mine.pop(r, None)
        return SparseMatrix(cols)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            mine = cols.setdefault(c, {})
            for r, v in col.items():
                cur = mine.get(r)
                cur = -v if cur is None else cur - v
                if cur:
                    mine[r] = cur
                else:
                    mine.pop(r, None)
        return SparseMatrix(cols)

    def scale_entries(self, c) -> "SparseMatrix":
        if c == -1:
            return SparseMatrix(
                {cl: {r: -v for r, v in col.items()} for cl, col in self.cols.items()}
            )
        cols = {}
        for cl, col in self.cols.items():
            new = {}
            for r, v in col.items():
                w = v * c
                if w:
                    new[r] = w
            if new:
                cols[cl] = new
        return SparseMatrix(cols)

    def transpose(self) -> "SparseMatrix":
        cols: Dict[Hashable, Vec] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return SparseMatrix(cols)

    def map_entries(self, fn) -> "SparseMatrix":
        cols = {}
        for c, col in self.cols.items():
            new = {}
            for r, v in col.items():
                w = fn(v)
                if w:
                    new[r] = w
            if new:
                cols[c] = new
        return SparseMatrix(cols)


def _is_unit_one(v) -> bool:
    if hasattr(v, "is_one"):
        return v.is_one()
    return v == 1


class Eliminator:
    """Incremental sparse Gaussian elimination to reduced row echelon form.

    Rows are inserted one at a time; each stored pivot row is normalized to
    pivot coefficient 1 and the pivot entry itself is kept implicit. Pivot
    columns are chosen minimal under `key`, so the column order decides which
    labels survive as free (non-pivot) columns. Optional tag vectors ride
    along under the same row operations, giving kernel vectors and coordinate
    solves for free: the invariant is row = sum(tag[j] * original_row_j).
    """

    def __init__(self, key: Callable = None):
        self.key = key if key is not None else _default_key
        self.pivots: Dict[Hashable, Tuple[Vec, Optional[Vec]]] = {}
        self.last_dependent_tag: Optional[Vec] = None
        self._reduced = True

    def _min_pivot_col(self, row: Vec):
        best = None
        bestk = None
        for c in row:
            if c in self.pivots:
                k = self.key(c)
                if bestk is None or k < bestk:
                    best, bestk = c, k
        return best

    def reduce(self, row: Vec, tag: Vec = None) -> Tuple[Vec, Optional[Vec]]:
        row = dict(row)
        tag = dict(tag) if tag is not None else None
        while True:
            c = self._min_pivot_col(row)
            if c is None:
                return row, tag
            coeff = row.pop(c)
            prow, ptag = self.pivots[c]
            vec_axpy(row, coeff, prow)
            if tag is not None and ptag is not None:
                vec_axpy(tag, coeff, ptag)

    def add_row(self, row: Vec, tag: Vec = None):
        """Insert a row; returns its pivot column, or None if dependent.

        For a dependent row with tag tracking, `last_dependent_tag` holds the
        coefficients of the vanishing combination.
        """
        row, tag = self.reduce(row, tag)
        self.last_dependent_tag = None
        if not row:
            self.last_dependent_tag = tag
            return None
        pivot = min(row, key=self.key)
        lead = row.pop(pivot)
        if not _is_unit_one(lead):
            row = {c: v / lead for c, v in row.items()}
            if tag is not None:
                tag = {c: v / lead for c, v in tag.items()}
        self.pivots[pivot] = (row, tag)
        self._reduced = False
        return pivot

    def back_substitute(self) -> None:
        """Bring stored rows to fully reduced form (true RREF)."""
        if self._reduced:
            return
        for p in sorted(self.pivots, key=self.key, reverse=True):
            row, tag = self.pivots[p]
            row = dict(row)
            tag = dict(tag) if tag is not None else None
            while True:
                hit = self._min_pivot_col(row)
                if hit is None:
                    break
                coeff = row.pop(hit)
                prow, ptag = self.pivots[hit]
                vec_axpy(row, coeff, prow)
                if tag is not None and ptag is not None:
                    vec_axpy(tag, coeff, ptag)
            self.pivots[p] = (row, tag)
        self._reduced = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def express(self, v: Vec) -> Optional[Vec]:
        """Coordinates of v in the span of the inserted rows, by tag label.

        Returns None when v lies outside the span. Requires every inserted
        row to have carried a tag.
        """
        row, tag = self.reduce(v, {})
        if row:
            return None
        return {c: -x for c, x in tag.items()}


def _default_key(c):
    return c


def kernel_basis(images: Iterable[Tuple[Hashable, Vec]], one, key: Callable = None) -> List[Vec]:
    """Kernel of a linear map given as (domain label, image vector) pairs.

    `one` is the multiplicative unit of the scalar type in use. Each returned
    kernel vector is a dict over domain labels with coefficient `one` on the
    latest label entering the dependency.
    """
    elim = Eliminator(key=key)
    kernel: List[Vec] = []
    for label, image in images:
        if not image:
            kernel.append({label: one})
            continue
        pivot = elim.add_row(image, {label: one})
        if pivot is None:
            kernel.append(dict(elim.last_dependent_tag))
    return kernel
