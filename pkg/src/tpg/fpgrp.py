"""Words over three involutory generators, presentations, and coset enumeration.

Everything here works with groups presented on generators a, b, c that are
all involutions, so words never need formal inverse symbols: the inverse of
a word is its reversal.  Words do not auto-reduce; cancelling adjacent equal
letters is available explicitly via :meth:`Word.reduced` and is sound because
every presentation carries the square relators.

Coset enumeration is HLT-style with coincidence handling.  After the scan
passes reach a fixpoint the table is compacted, renumbered breadth-first from
the subgroup coset (a canonical standardization), and re-verified entry by
entry, so a returned table is always complete, closed and deterministic.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .permgrp import CapacityError, Perm, PermGroup, generate

GENERATORS = ("a", "b", "c")
_COL = {"a": 0, "b": 1, "c": 2}

DEFAULT_CAPACITY = 10**6


class Word:
    """Immutable word in the free product of three involutions.

    ``letters`` is a tuple of symbols from ``{"a", "b", "c"}``.  The empty
    word is the identity and prints as ``"1"``.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[str] = ()):
        letters = tuple(letters)
        for ch in letters:
            if ch not in _COL:
                raise ValueError(f"bad generator symbol {ch!r}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.letters[::-1])

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def conj(self, y: "Word") -> "Word":
        """Conjugate of self by y: y^-1 * self * y."""
        return Word(y.letters[::-1] + self.letters + y.letters)

    def reduced(self) -> "Word":
        """Freely reduce by cancelling adjacent equal letters."""
        out: list[str] = []
        for ch in self.letters:
            if out and out[-1] == ch:
                out.pop()
            else:
                out.append(ch)
        return Word(out)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return "".join(self.letters) or "1"

    def __repr__(self):
        return f"Word({str(self)!r})"


def _tokenize(text: str) -> list[tuple[str, object]]:
    toks: list[tuple[str, object]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch == "*":
            i += 1
        elif ch in _COL:
            toks.append(("LET", ch))
            i += 1
        elif ch in "()^":
            toks.append((ch, ch))
            i += 1
        elif ch.isdigit() or ch == "-":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if text[i:j] in ("", "-"):
                raise ValueError(f"bad integer at {text[i:]!r}")
            toks.append(("INT", int(text[i:j])))
            i = j
        else:
            raise ValueError(f"unexpected character {ch!r} in word {text!r}")
    return toks


def _parse_atom(toks, i):
    kind, val = toks[i] if i < len(toks) else ("END", None)
    if kind == "LET":
        return Word(val), i + 1
    if kind == "INT":
        if val == 1:
            return Word(), i + 1
        raise ValueError(f"unexpected integer {val} as word atom")
    if kind == "(":
        w, i = _parse_seq(toks, i + 1)
        if i >= len(toks) or toks[i][0] != ")":
            raise ValueError("unbalanced parenthesis in word")
        return w, i + 1
    raise ValueError(f"unexpected token {kind} in word")


def _parse_factor(toks, i):
    w, i = _parse_atom(toks, i)
    while i < len(toks) and toks[i][0] == "^":
        i += 1
        kind, val = toks[i] if i < len(toks) else ("END", None)
        if kind == "INT":
            w = w**val
            i += 1
        else:
            y, i = _parse_atom(toks, i)
            w = w.conj(y)
    return w, i


def _parse_seq(toks, i):
    parts = []
    while i < len(toks) and toks[i][0] != ")":
        w, i = _parse_factor(toks, i)
        parts.append(w)
    out = Word()
    for w in parts:
        out = out * w
    return out, i


def parse_word(text: str) -> Word:
    """Parse a word expression.

    Letters juxtapose or join with ``*``; ``^`` takes an integer power or a
    conjugating subword (``b^(ca)`` is ``ac b ca``); parentheses group; ``1``
    is the empty word.
    """
    toks = _tokenize(text)
    w, i = _parse_seq(toks, 0)
    if i != len(toks):
        raise ValueError(f"trailing tokens in word {text!r}")
    return w


# Relator words of the presentation family; an added relation fixes the
# order of one of these elements.
R1 = parse_word("a * b^c")
R2 = parse_word("ab * b^c")
R3 = parse_word("ab * a^c")
R4 = parse_word("c * b^(ca)")
R5 = parse_word("c^a * c^(bc)")
R_WORDS = (R1, R2, R3, R4, R5)


@dataclass(frozen=True)
class Presentation:
    """Presentation on involutory generators a, b, c.

    Relators are (word, exponent) pairs, meaning word**exponent = 1.
    """

    relators: tuple[tuple[Word, int], ...]

    generators = GENERATORS

    def with_relator(self, word: Word, exponent: int = 1) -> "Presentation":
        if not isinstance(word, Word) or len(word) == 0:
            raise ValueError("relator must be a non-empty Word")
        if exponent < 1:
            raise ValueError("relator exponent must be positive")
        return Presentation(self.relators + ((word, exponent),))

    def relator_words(self) -> tuple[Word, ...]:
        return tuple(w**e for w, e in self.relators)

    def to_text(self) -> str:
        lines = ["gens a b c;"]
        for w, e in self.relators:
            lines.append(f"rel {w};" if e == 1 else f"rel ({w})^{e};")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def _split_outer_power(text: str) -> Optional[tuple[str, int]]:
    """Match '(X)^k' with the opening paren closing right before '^'."""
    text = text.strip()
    if not text.startswith("("):
        return None
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                rest = text[i + 1 :].strip()
                if rest.startswith("^") and rest[1:].strip().isdigit():
                    return text[1:i], int(rest[1:].strip())
                return None
    return None


def parse_presentation(text: str) -> Presentation:
    """Parse the text form: ``gens a b c; rel (ab)^2; rel acbc; # comment``."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    stmts = [s.strip() for s in body.split(";")]
    stmts = [s for s in stmts if s]
    if not stmts or stmts[0].split() != ["gens", "a", "b", "c"]:
        raise ValueError("presentation must start with 'gens a b c'")
    relators = []
    for stmt in stmts[1:]:
        if not stmt.startswith("rel"):
            raise ValueError(f"bad statement {stmt!r}")
        expr = stmt[3:].strip()
        split = _split_outer_power(expr)
        if split is not None:
            relators.append((parse_word(split[0]), split[1]))
        else:
            relators.append((parse_word(expr), 1))
    return Presentation(tuple(relators))


def tp_presentation(
    m: int, n: int, p: int, r: Optional[Sequence[Optional[int]]] = None
) -> Presentation:
    """The family member with o(ac)=m, o(bc)=n, o(abc)=p plus optional
    added relations fixing the orders of R1..R5."""
    for v in (m, n, p):
        if not isinstance(v, int) or not 1 <= v <= 6:
            raise ValueError(f"presentation parameter {v!r} out of range 1..6")
    a, b, c = (Word(g) for g in GENERATORS)
    relators = [
        (a, 2),
        (b, 2),
        (c, 2),
        (a * b, 2),
        (a * c, m),
        (b * c, n),
        (a * b * c, p),
    ]
    if r is not None:
        r = tuple(r)
        if len(r) != 5:
            raise ValueError("added-relation exponents must be a 5-tuple")
        for word, ri in zip(R_WORDS, r):
            if ri is None:
                continue
            if not isinstance(ri, int) or not 1 <= ri <= 6:
                raise ValueError(f"added-relation exponent {ri!r} out of range 1..6")
            relators.append((word, ri))
    return Presentation(tuple(relators))


@dataclass(frozen=True)
class CosetTable:
    """Complete standardized coset table; row i maps coset i under a, b, c.

    Coset 0 is the subgroup coset.  Columns are involutions, so the table is
    symmetric: rows[rows[i][x]][x] == i.
    """

    rows: tuple[tuple[int, int, int], ...]
    complete: bool
    subgroup: tuple[Word, ...] = ()

    @property
    def coset_count(self) -> int:
        return len(self.rows)

    def column(self, letter: str) -> tuple[int, ...]:
        x = _COL[letter]
        return tuple(row[x] for row in self.rows)


class _Enumerator:
    """HLT coset enumeration state over involutory columns."""

    def __init__(self, relators, subgroup_rows, capacity):
        self.relators = relators
        self.subgroup_rows = subgroup_rows
        self.capacity = capacity
        self.cols = (array("i", [-1]), array("i", [-1]), array("i", [-1]))
        self.parent = array("i", [0])
        self.total = 1
        self.mutations = 0

    def _rep(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def _define(self, f: int, col: int) -> int:
        if self.total >= self.capacity:
            raise CapacityError(
                f"coset table capacity {self.capacity} exhausted; the "
                "presented group may be infinite or the bound too small"
            )
        m = len(self.parent)
        for c in self.cols:
            c.append(-1)
        self.parent.append(m)
        self.cols[col][f] = m
        self.cols[col][m] = f
        self.total += 1
        self.mutations += 1
        return m

    def _coincidence(self, k: int, l: int):
        cols = self.cols
        queue: deque[int] = deque()

        def merge(u: int, v: int):
            u, v = self._rep(u), self._rep(v)
            if u == v:
                return
            if u > v:
                u, v = v, u
            self.parent[v] = u
            self.mutations += 1
            queue.append(v)

        merge(k, l)
        while queue:
            g = queue.popleft()
            for x in (0, 1, 2):
                d = cols[x][g]
                if d == -1:
                    continue
                if cols[x][d] == g:
                    cols[x][d] = -1
                u, v = self._rep(g), self._rep(d)
                eu, ev = cols[x][u], cols[x][v]
                if eu == -1 and ev == -1:
                    cols[x][u] = v
                    cols[x][v] = u
                    self.mutations += 1
                else:
                    if eu != -1:
                        merge(v, eu)
                    if ev != -1:
                        merge(u, ev)

    def _scan_and_fill(self, start: int, word: tuple[int, ...]):
        cols = self.cols
        f = start
        i = 0
        b = start
        j = len(word) - 1
        while True:
            while i <= j:
                nxt = cols[word[i]][f]
                if nxt == -1:
                    break
                f = self._rep(nxt)
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i:
                nxt = cols[word[j]][b]
                if nxt == -1:
                    break
                b = self._rep(nxt)
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if j == i:
                cols[word[i]][f] = b
                cols[word[i]][b] = f
                self.mutations += 1
                return
            self._define(f, word[i])

    def _sweep(self):
        for row in self.subgroup_rows:
            self._scan_and_fill(0, row)
        alpha = 0
        while alpha < len(self.parent):
            if self._rep(alpha) == alpha:
                for row in self.relators:
                    self._scan_and_fill(alpha, row)
                    if self._rep(alpha) != alpha:
                        break
                if self._rep(alpha) == alpha:
                    for x in (0, 1, 2):
                        if self.cols[x][alpha] == -1:
                            self._define(alpha, x)
            alpha += 1

    def _live_table(self) -> Optional[tuple[np.ndarray, np.ndarray]]:
        """Rep-normalized live rows, or None if any entry is undefined."""
        par = np.frombuffer(self.parent, dtype=np.int32).copy()
        while True:
            nxt = par[par]
            if np.array_equal(nxt, par):
                break
            par = nxt
        live = np.flatnonzero(par == np.arange(len(par), dtype=np.int32))
        mat = np.empty((3, len(live)), dtype=np.int64)
        for x in (0, 1, 2):
            col = np.frombuffer(self.cols[x], dtype=np.int32)[live]
            if (col == -1).any():
                return None
            mat[x] = np.searchsorted(live, par[col])
        return mat, live

    def _closed(self, mat: np.ndarray) -> bool:
        n = mat.shape[1]
        idx = np.arange(n)
        for row in self.relators:
            pos = idx
            for x in row:
                pos = mat[x][pos]
            if not np.array_equal(pos, idx):
                return False
        for row in self.subgroup_rows:
            pos = 0
            for x in row:
                pos = int(mat[x][pos])
            if pos != 0:
                return False
        return True

    def run(self) -> np.ndarray:
        while True:
            before = self.mutations
            self._sweep()
            table = self._live_table()
            if table is not None and self._closed(table[0]):
                return table[0]
            if self.mutations == before:
                raise RuntimeError("coset enumeration stalled without closing")


def todd_coxeter(
    pres: Presentation,
    subgroup: Sequence[Word] = (),
    capacity: int = DEFAULT_CAPACITY,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by the given words.

    Returns a complete standardized table; over the empty subgroup list the
    coset count is the group order.  Raises CapacityError when more than
    ``capacity`` cosets (live plus collapsed) would be defined.
    """
    rel_rows = []
    seen = set()
    for w in pres.relator_words():
        row = tuple(_COL[ch] for ch in w.letters)
        if row and row not in seen:
            seen.add(row)
            rel_rows.append(row)
    rel_rows.sort(key=lambda r: (len(r), r))
    for x in (0, 1, 2):
        if (x, x) not in seen:
            raise ValueError("presentation must include the square of each generator")
    sub_rows = []
    for w in subgroup:
        row = tuple(_COL[ch] for ch in w.letters)
        if row:
            sub_rows.append(row)
    enum = _Enumerator(rel_rows, sub_rows, capacity)
    mat = enum.run()

    # standardize: breadth-first renumbering from the subgroup coset
    n = mat.shape[1]
    number = np.full(n, -1, dtype=np.int64)
    number[0] = 0
    order = [0]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for x in (0, 1, 2):
            v = int(mat[x][u])
            if number[v] == -1:
                number[v] = len(order)
                order.append(v)
    if len(order) != n:
        raise RuntimeError("coset table is not transitive")
    rows = tuple(
        tuple(int(number[mat[x][u]]) for x in (0, 1, 2)) for u in order
    )

    # verification pass on the standardized table
    for i, row in enumerate(rows):
        for x in (0, 1, 2):
            j = row[x]
            if not 0 <= j < n or rows[j][x] != i:
                raise RuntimeError("coset table failed symmetry verification")
    for rel in rel_rows:
        for i in range(n):
            pos = i
            for x in rel:
                pos = rows[pos][x]
            if pos != i:
                raise RuntimeError("coset table failed relator verification")
    for sub in sub_rows:
        pos = 0
        for x in sub:
            pos = rows[pos][x]
        if pos != 0:
            raise RuntimeError("coset table failed subgroup verification")

    return CosetTable(rows=rows, complete=True, subgroup=tuple(subgroup))


def coset_action(table: CosetTable) -> PermGroup:
    """Permutation group of the generator actions on cosets.

    Tracks the images of a, b, c so downstream word evaluation can follow
    generators through quotients.  Over the trivial subgroup the action is
    regular, so its order equals the coset count.
    """
    if not table.complete:
        raise ValueError("coset action requires a complete table")
    n = table.coset_count
    images = {}
    for letter in GENERATORS:
        img = np.array(table.column(letter), dtype=np.uint16)
        images[letter] = Perm(img)
    gens = [images[g] for g in GENERATORS]
    return PermGroup(n, gens, tracked=images)


def evaluate_word(w: Word, images: Mapping[str, Perm]) -> Perm:
    """Substitute permutations for letters and compose left to right."""
    degrees = {images[g].degree for g in GENERATORS}
    if len(degrees) != 1:
        raise ValueError("generator images must share a degree")
    out = Perm.identity(degrees.pop())
    for ch in w.letters:
        out = out * images[ch]
    return out


def verify_presentation(
    pres: Presentation, images: Mapping[str, Perm], H: PermGroup
) -> bool:
    """True iff the images satisfy every relator and generate H.

    Combined with a coset count of the presentation over the trivial
    subgroup equal to |H|, this certifies that H is the presented group.
    """
    gens = [images[g] for g in GENERATORS]
    if any(g.degree != H.degree for g in gens):
        return False
    for w in pres.relator_words():
        if not evaluate_word(w, images).is_identity():
            return False
    if any(g not in H for g in gens):
        return False
    return generate(H.degree, gens).order == H.order
