"""Free-group words, endomorphisms, iterated length growth, the
matrix-to-endomorphism construction and the rank-2 positive-automorphism
descent.

Words are freely reduced run lists with arbitrary-precision exponents.
Iteration goes through an internal compressed-block engine so that lengths
like 2*3^n + 2^n - 2 stay exact at n = 25 without materializing 3^25
letters; a configurable budget turns pathological blowups into clean
errors instead of hangs.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._blockword import (
    BlockWord,
    Budget,
    BudgetError,
    apply_endo_blocks,
    compress_images,
)
from .dynamics import IntMatrix
from .sequence import DEFAULT_WINDOW, ExactSeq, GrowthReport
from .sequence import growth_report as seq_growth_report

DEFAULT_BUDGET = 10_000_000

__all__ = [
    "BudgetError",
    "Word",
    "Endo",
    "EndoGrowthReport",
    "F2Descent",
    "reduce",
    "apply",
    "compose",
    "iterate_lengths",
    "growth_report",
    "growth_report_sum",
    "endo_from_matrix",
    "abelianization",
    "positive_f2_aut",
    "nielsen_verify_basis",
    "parse_word",
    "format_word",
    "parse_endo",
    "format_endo",
]


@dataclass(frozen=True)
class Word:
    """Freely reduced word: runs of (generator index 1..rank, exponent != 0)."""

    rank: int
    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        runs = tuple((int(g), int(e)) for g, e in self.runs)
        for g, e in runs:
            if not 1 <= g <= self.rank:
                raise ValueError(f"generator {g} outside 1..{self.rank}")
            if e == 0:
                raise ValueError("zero exponents are not reduced")
        for (g1, _), (g2, _) in zip(runs, runs[1:]):
            if g1 == g2:
                raise ValueError("adjacent runs with equal generators")
        object.__setattr__(self, "runs", runs)

    @classmethod
    def empty(cls, rank: int) -> "Word":
        return cls(rank, ())

    @classmethod
    def gen(cls, rank: int, g: int, e: int = 1) -> "Word":
        return cls(rank, ((g, e),))

    def length(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def is_identity(self) -> bool:
        return not self.runs

    def is_positive(self) -> bool:
        return all(e > 0 for _, e in self.runs)

    def count_gen(self, g: int) -> int:
        return sum(abs(e) for h, e in self.runs if h == g)

    def exponent_sum(self, g: int) -> int:
        return sum(e for h, e in self.runs if h == g)

    def inverse(self) -> "Word":
        return Word(self.rank, tuple((g, -e) for g, e in reversed(self.runs)))

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return reduce(self.rank, self.runs + other.runs)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = Word.empty(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        return format_word(self)


def reduce(rank: int, runs) -> Word:
    """Freely reduced normal form of a raw run list."""
    stack: list[list[int]] = []
    for g, e in runs:
        g, e = int(g), int(e)
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(rank, tuple((g, e) for g, e in stack))


@dataclass(frozen=True)
class Endo:
    """Endomorphism of a free group: the image word of each generator."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError("need exactly one image per generator")
        if any(w.rank != self.rank for w in self.images):
            raise ValueError("image rank mismatch")

    @classmethod
    def identity(cls, rank: int) -> "Endo":
        return cls(rank, tuple(Word.gen(rank, g) for g in range(1, rank + 1)))

    def image(self, g: int) -> Word:
        return self.images[g - 1]

    def __str__(self):
        return format_endo(self)


def _engine_images(phi: Endo) -> list[BlockWord]:
    return compress_images(
        [BlockWord.from_runs(w.runs) for w in phi.images]
    )


def _to_blockword(w) -> BlockWord:
    if isinstance(w, BlockWord):
        return w
    return BlockWord.from_runs(w.runs)


def apply(phi: Endo, w: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """Substitute images for generators and reduce, exactly."""
    if phi.rank != w.rank:
        raise ValueError("rank mismatch")
    out = apply_endo_blocks(_engine_images(phi), _to_blockword(w), Budget(budget))
    return Word(phi.rank, out.to_runs())


def compose(outer: Endo, inner: Endo, budget: int = DEFAULT_BUDGET) -> Endo:
    """outer after inner: g maps to outer(inner(g))."""
    if outer.rank != inner.rank:
        raise ValueError("rank mismatch")
    return Endo(
        outer.rank, tuple(apply(outer, w, budget) for w in inner.images)
    )


def iterate_lengths(
    phi: Endo, g, n_terms: int, budget: int = DEFAULT_BUDGET
) -> ExactSeq:
    """|phi^n(g)| for n = 1..N, exact; g is a generator index or a Word."""
    if n_terms < 1:
        raise ValueError("need n_terms >= 1")
    if isinstance(g, Word):
        if g.rank != phi.rank:
            raise ValueError("rank mismatch")
        w = _to_blockword(g)
    else:
        w = BlockWord.from_runs(((int(g), 1),))
        if not 1 <= int(g) <= phi.rank:
            raise ValueError(f"generator {g} outside 1..{phi.rank}")
    images = _engine_images(phi)
    lengths = []
    for _ in range(n_terms):
        w = apply_endo_blocks(images, w, Budget(budget))
        lengths.append(w.length())
    return ExactSeq.of(lengths)


@dataclass(frozen=True)
class EndoGrowthReport:
    """Per-generator growth reports plus the per-k maxima over generators."""

    per_generator: tuple[GrowthReport, ...]
    maxima: tuple[float | None, ...]
    k_max: int

    def best(self, k: int):
        return self.maxima[k]


def _entry_value(entry):
    return entry.exact if entry.exact is not None else entry.estimate


def growth_report(
    phi: Endo,
    k_max: int,
    n_terms: int,
    window: int = DEFAULT_WINDOW,
    d_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> EndoGrowthReport:
    """Generalized growth rates: max over generators of per-length GR^(k)."""
    reports = []
    for g in range(1, phi.rank + 1):
        seq = iterate_lengths(phi, g, n_terms, budget)
        reports.append(seq_growth_report(seq, k_max, window=window, d_max=d_max))
    maxima: list[float | None] = []
    for k in range(k_max + 1):
        vals = [
            _entry_value(rep.entry(k))
            for rep in reports
            if _entry_value(rep.entry(k)) is not None
        ]
        maxima.append(max(vals) if vals else None)
    return EndoGrowthReport(tuple(reports), tuple(maxima), k_max)


def growth_report_sum(
    phi: Endo,
    k_max: int,
    n_terms: int,
    window: int = DEFAULT_WINDOW,
    d_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> GrowthReport:
    """Growth report of the single sequence sum_i |phi^n(g_i)|."""
    per_gen = [
        iterate_lengths(phi, g, n_terms, budget).terms
        for g in range(1, phi.rank + 1)
    ]
    summed = ExactSeq.of([sum(col) for col in zip(*per_gen)])
    return seq_growth_report(summed, k_max, window=window, d_max=d_max)


def endo_from_matrix(a: IntMatrix) -> Endo:
    """g_i maps to g_1^{a_i1} g_2^{a_i2} ... g_m^{a_im}; entries must be >= 0."""
    if not a.is_nonnegative():
        raise ValueError("endo_from_matrix needs nonnegative entries")
    m = a.dim
    images = []
    for i in range(m):
        runs = tuple((j + 1, a.rows[i][j]) for j in range(m) if a.rows[i][j])
        images.append(Word(m, runs))
    return Endo(m, tuple(images))


def abelianization(phi: Endo) -> IntMatrix:
    """Column j holds the exponent-sum vector of phi(g_j)."""
    m = phi.rank
    return IntMatrix(
        tuple(
            tuple(phi.images[j].exponent_sum(i + 1) for j in range(m))
            for i in range(m)
        )
    )


# ---------------------------------------------------------------------------
# Rank-2 positive automorphisms (continued-fraction descent)


@dataclass(frozen=True)
class F2Descent:
    endo: Endo
    swapped: bool
    ds: tuple[int, ...]
    columns: tuple[tuple[int, int], ...]


def positive_f2_aut(a: IntMatrix) -> F2Descent:
    """Positive automorphism of F_2 whose abelianization is the given matrix.

    Requires nonnegative entries and determinant +-1.  The descent divides
    the two columns like a continued fraction; when neither top-row nor
    bottom-row difference is positive the generators are swapped first
    (recorded in the result).
    """
    if a.dim != 2:
        raise ValueError("positive_f2_aut expects a 2x2 matrix")
    if not a.is_nonnegative():
        raise ValueError("matrix entries must be nonnegative")
    (p0, p1), (q0, q1) = a.rows
    if abs(p0 * q1 - p1 * q0) != 1:
        raise ValueError("matrix must have determinant +1 or -1")
    swapped = False
    if p1 != 0 and q1 != 0 and p0 - p1 <= 0 and q0 - q1 <= 0:
        swapped = True
        p0, p1, q0, q1 = q1, q0, p1, p0
    ps, qs = [p0, p1], [q0, q1]
    ds: list[int] = []
    while ps[-1] != 0 and qs[-1] != 0:
        d = min(ps[-2] // ps[-1], qs[-2] // qs[-1])
        if d < 1:
            raise AssertionError("descent stalled; input was not unimodular")
        ds.append(d)
        ps.append(ps[-2] - d * ps[-1])
        qs.append(qs[-2] - d * qs[-1])
    n = len(ps) - 1
    a_word = Word.gen(2, 1)
    b_word = Word.gen(2, 2)
    u_prev = (a_word ** ps[n]) * (b_word ** qs[n])
    u_cur = (a_word ** ps[n - 1]) * (b_word ** qs[n - 1])
    for k in range(1, n):
        u_prev, u_cur = u_cur, (u_cur ** ds[n - k - 1]) * u_prev
    phi = Endo(2, (u_cur, u_prev))
    if swapped:
        sigma = Endo(2, (Word.gen(2, 2), Word.gen(2, 1)))
        phi = Endo(2, (apply(sigma, phi.images[1]), apply(sigma, phi.images[0])))
    return F2Descent(
        endo=phi,
        swapped=swapped,
        ds=tuple(ds),
        columns=tuple(zip(ps, qs)),
    )


def nielsen_verify_basis(u: Word, v: Word) -> bool:
    """Greedy Nielsen reduction: true iff (u, v) reduces to two generators."""
    if u.rank != 2 or v.rank != 2:
        raise ValueError("basis verification works in rank 2")
    pair = [u, v]
    total = pair[0].length() + pair[1].length()
    for _ in range(total + 2):
        if (
            pair[0].length() == 1
            and pair[1].length() == 1
            and pair[0].runs[0][0] != pair[1].runs[0][0]
        ):
            return True
        best = None
        for i in (0, 1):
            w, other = pair[i], pair[1 - i]
            for cand in (
                w * other,
                w * other.inverse(),
                other * w,
                other.inverse() * w,
            ):
                if cand.length() < w.length():
                    if best is None or cand.length() - w.length() < best[2]:
                        best = (i, cand, cand.length() - w.length())
        if best is None:
            return False
        pair[best[0]] = best[1]
    return False


# ---------------------------------------------------------------------------
# Text formats


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _gen_name(g: int, rank: int) -> str:
    if rank <= 26:
        return _LETTERS[g - 1]
    return f"g{g}"


def _parse_gen(token: str) -> int:
    if len(token) == 1 and token in _LETTERS:
        return _LETTERS.index(token) + 1
    if token.startswith("g") and token[1:].isdigit():
        g = int(token[1:])
        if g >= 1:
            return g
    raise ValueError(f"bad generator name {token!r}")


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse "a^3 b^-2 a"; "1" is the identity.  Rank defaults to the
    largest generator mentioned."""
    tokens = text.split()
    raw = []
    top = 0
    for tok in tokens:
        if tok == "1":
            continue
        name, _, exp = tok.partition("^")
        g = _parse_gen(name)
        e = int(exp) if exp else 1
        raw.append((g, e))
        top = max(top, g)
    if rank is None:
        rank = max(top, 1)
    if top > rank:
        raise ValueError(f"generator index {top} exceeds rank {rank}")
    return reduce(rank, raw)


def format_word(w: Word) -> str:
    if not w.runs:
        return "1"
    return " ".join(
        _gen_name(g, w.rank) + (f"^{e}" if e != 1 else "")
        for g, e in w.runs
    )


def parse_endo(text: str, rank: int | None = None) -> Endo:
    """Parse "a -> a b a; b -> a b" scripts."""
    rules = [part for part in text.split(";") if part.strip()]
    lhs_list, rhs_list = [], []
    top = 0
    for rule in rules:
        try:
            lhs, rhs = rule.split("->")
        except ValueError as e:
            raise ValueError(f"rule {rule!r} needs a single '->'") from e
        g = _parse_gen(lhs.strip())
        lhs_list.append(g)
        rhs_list.append(rhs.strip())
        top = max(top, g)
    if rank is None:
        rank = max(
            [top]
            + [
                _parse_gen(tok.partition("^")[0])
                for rhs in rhs_list
                for tok in rhs.split()
                if tok != "1"
            ]
        )
    if sorted(lhs_list) != list(range(1, rank + 1)):
        raise ValueError("need exactly one rule per generator 1..rank")
    images: list[Word | None] = [None] * rank
    for g, rhs in zip(lhs_list, rhs_list):
        images[g - 1] = parse_word(rhs, rank)
    return Endo(rank, tuple(images))


def format_endo(phi: Endo) -> str:
    return "; ".join(
        f"{_gen_name(g, phi.rank)} -> {format_word(phi.images[g - 1])}"
        for g in range(1, phi.rank + 1)
    )
