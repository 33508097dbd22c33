"""Exact compressed words: run-length blocks with big-integer exponents.

Letters are nonzero ints (+g for a generator, -g for its inverse).  A block
(base, exp) stands for base repeated exp times; multi-letter bases always
have exp >= 2 and are cyclically reduced, so concatenating a block with
itself never cancels.  Everything here is exact: reduction happens letter
by letter at block seams, with whole-block shortcuts when bases match or
are exact inverses.  A shared budget bounds the work and storage so that
pathological inputs fail loudly instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass

FLAT_CAP = 1 << 16
COMPRESS_CAP = 512


class BudgetError(Exception):
    """Word iteration exceeded the configured storage/work budget."""


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BudgetError(f"budget of {self.limit} operations exceeded")


def inverse_base(base):
    return tuple(-x for x in reversed(base))


@dataclass(frozen=True)
class BlockWord:
    """Immutable reduced word as a tuple of (base letters, exponent) blocks."""

    blocks: tuple[tuple[tuple[int, ...], int], ...]

    def length(self) -> int:
        return sum(e * len(b) for b, e in self.blocks)

    def count_gen(self, g: int) -> int:
        """Occurrences of g or g^-1 in the reduced word."""
        return sum(
            e * sum(1 for x in b if abs(x) == g) for b, e in self.blocks
        )

    def exponent_sum(self, g: int) -> int:
        return sum(
            e * sum(1 if x == g else -1 for x in b if abs(x) == g)
            for b, e in self.blocks
        )

    def is_empty(self) -> bool:
        return not self.blocks

    def flatten(self, cap: int = FLAT_CAP) -> list[int]:
        if self.length() > cap:
            raise BudgetError(f"refusing to expand a word of length {self.length()}")
        out: list[int] = []
        for base, e in self.blocks:
            out.extend(base * e)
        return out

    def to_runs(self, cap: int = FLAT_CAP):
        """Signed (generator, exponent) runs; expands multi-letter blocks."""
        runs: list[list[int]] = []

        def add(g, e):
            if runs and runs[-1][0] == g:
                runs[-1][1] += e
                if runs[-1][1] == 0:
                    runs.pop()
            else:
                runs.append([g, e])

        for base, e in self.blocks:
            if len(base) == 1:
                x = base[0]
                add(abs(x), e if x > 0 else -e)
            else:
                if e * len(base) > cap:
                    raise BudgetError(
                        "word too long to expand into explicit runs"
                    )
                for x in base * e:
                    add(abs(x), 1 if x > 0 else -1)
        return tuple((g, e) for g, e in runs)

    @classmethod
    def from_runs(cls, runs) -> "BlockWord":
        blocks = []
        for g, e in runs:
            if e == 0:
                continue
            blocks.append(((g if e > 0 else -g,), abs(e)))
        return cls(tuple(blocks))

    @classmethod
    def from_letters(cls, letters) -> "BlockWord":
        letters = list(letters)
        b = Builder(Budget(4 * len(letters) + 16))
        for x in letters:
            b.push_letter(x)
        return b.result()

    def inverse(self) -> "BlockWord":
        return BlockWord(
            tuple((inverse_base(b), e) for b, e in reversed(self.blocks))
        )


class Builder:
    """Stack of blocks with free reduction at the growing end.

    Stack invariant: blocks are either single-letter runs (any exp >= 1) or
    multi-letter cyclically reduced bases with exp >= 2; the concatenated
    content is always freely reduced.
    """

    def __init__(self, budget: Budget):
        self.budget = budget
        self.stack: list[list] = []  # [base tuple, exp]

    # -- letter-level ------------------------------------------------------

    def push_letter(self, x: int):
        self.budget.spend()
        if self.stack:
            base, e = self.stack[-1]
            if len(base) == 1:
                if base[0] == x:
                    self.stack[-1][1] = e + 1
                    return
                if base[0] == -x:
                    if e == 1:
                        self.stack.pop()
                    else:
                        self.stack[-1][1] = e - 1
                    return
            elif base[-1] == -x:
                self.pop_letter()
                return
        self.stack.append([(x,), 1])

    def _append_run(self, x: int, count: int):
        """Raw append known not to cancel (merges equal-letter runs)."""
        if count == 0:
            return
        if self.stack:
            base, e = self.stack[-1]
            if base == (x,):
                self.stack[-1][1] = e + count
                return
        self.stack.append([(x,), count])

    def pop_letter(self) -> int:
        """Remove and return the last letter, splitting blocks as needed."""
        self.budget.spend()
        base, e = self.stack[-1]
        if len(base) == 1:
            if e == 1:
                self.stack.pop()
            else:
                self.stack[-1][1] = e - 1
            return base[0]
        # peel the last copy off a multi-letter power block, keep its
        # remainder flat, and return the final letter
        self.stack.pop()
        self.budget.spend(len(base))
        if e > 2:
            self.stack.append([base, e - 1])
        else:
            for x in base:
                self._append_run(x, 1)
        for x in base[:-1]:
            self._append_run(x, 1)
        return base[-1]

    # -- block-level -------------------------------------------------------

    def push_block(self, base: tuple[int, ...], exp: int):
        """Append base^exp, reducing at the seam."""
        if exp <= 0 or not base:
            if exp < 0:
                raise ValueError("block exponents are positive")
            return
        self.budget.spend()
        if len(base) == 1:
            x = base[0]
            remaining = exp
            while remaining > 0 and self.stack:
                top, e = self.stack[-1]
                if top == (x,):
                    self.stack[-1][1] = e + remaining
                    return
                if top == (-x,):
                    m = min(e, remaining)
                    remaining -= m
                    if m == e:
                        self.stack.pop()
                    else:
                        self.stack[-1][1] = e - m
                    continue
                if len(top) > 1 and top[-1] == -x:
                    self.pop_letter()
                    remaining -= 1
                    continue
                break
            if remaining:
                self.stack.append([(x,), remaining])
            return
        if exp == 1:
            for x in base:
                self.push_letter(x)
            return
        inv = inverse_base(base)
        remaining = exp
        while remaining > 0:
            if self.stack:
                top, e = self.stack[-1]
                if len(top) > 1:
                    if top == base:
                        self.stack[-1][1] = e + remaining
                        return
                    if top == inv:
                        m = min(e, remaining)
                        remaining -= m
                        if m == e:
                            self.stack.pop()
                        else:
                            self.stack[-1][1] = e - m
                        if remaining == 0:
                            return
                        if remaining == 1:
                            for x in base:
                                self.push_letter(x)
                            return
                        continue
            # letter-by-letter seam cancellation against one copy
            i = 0
            while i < len(base) and self.stack:
                top, _ = self.stack[-1]
                if top[-1] == -base[i]:
                    self.pop_letter()
                    i += 1
                else:
                    break
            if i == 0:
                break
            remaining -= 1
            if i < len(base):
                for x in base[i:]:
                    self.push_letter(x)
                break
        if remaining >= 2:
            self.budget.spend(len(base))
            self.stack.append([base, remaining])
        elif remaining == 1:
            for x in base:
                self.push_letter(x)

    def push_blockword(self, w: BlockWord):
        for base, e in w.blocks:
            self.push_block(base, e)

    def push_blockword_inverse(self, w: BlockWord):
        for base, e in reversed(w.blocks):
            self.push_block(inverse_base(base), e)

    def result(self) -> BlockWord:
        return BlockWord(tuple((tuple(b), e) for b, e in self.stack))


# ---------------------------------------------------------------------------
# Flat-word helpers


def primitive_root(letters: tuple[int, ...]):
    """Smallest repeating unit: letters == root * k."""
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return letters[:d], n // d
    raise AssertionError("unreachable")


def compress_flat(letters) -> BlockWord:
    """Roll periodic repetitions of a reduced letter list into power blocks."""
    letters = tuple(letters)
    n = len(letters)
    blocks: list[tuple[tuple[int, ...], int]] = []
    i = 0
    while i < n:
        best_p, best_k = 1, 1
        max_p = (n - i) // 2
        for p in range(1, max_p + 1):
            unit = letters[i : i + p]
            k = 1
            while letters[i + k * p : i + (k + 1) * p] == unit:
                k += 1
            if k >= 2 and k * p > best_k * best_p:
                best_p, best_k = p, k
        if best_k >= 2:
            blocks.append((letters[i : i + best_p], best_k))
            i += best_p * best_k
        else:
            blocks.append(((letters[i],), 1))
            i += 1
    # merge single-letter runs produced above
    merged: list[list] = []
    for base, e in blocks:
        if merged and merged[-1][0] == base and len(base) == 1:
            merged[-1][1] += e
        else:
            merged.append([base, e])
    return BlockWord(tuple((tuple(b), e) for b, e in merged))


def _cyclic_reduce_blocks(blocks: list[list], budget: Budget):
    """Split u into p * core * p^-1; returns (p as runs, core block list)."""
    work = [list(b) for b in blocks]
    prefix: list[list[int]] = []  # [letter, count] runs

    def add_prefix(x, c):
        if prefix and prefix[-1][0] == x:
            prefix[-1][1] += c
        else:
            prefix.append([x, c])

    while len(work) >= 2 or (len(work) == 1 and len(work[0][0]) == 1):
        budget.spend()
        first, fe = work[0]
        last, le = work[-1]
        f0 = first[0]
        lz = last[-1]
        if f0 != -lz:
            break
        if len(work) == 1:
            break  # single run x^e never cancels with itself
        if len(first) == 1 and len(last) == 1:
            m = min(fe, le)
            add_prefix(f0, m)
            if m == fe:
                work.pop(0)
            else:
                work[0][1] = fe - m
            if m == le:
                work.pop()
            else:
                work[-1][1] = le - m
            continue
        # peel single letters off multi-letter ends
        add_prefix(f0, 1)
        _drop_front_letter(work, budget)
        _drop_back_letter(work, budget)
    return prefix, work


def _drop_front_letter(work: list[list], budget: Budget):
    base, e = work[0]
    if len(base) == 1:
        if e == 1:
            work.pop(0)
        else:
            work[0][1] = e - 1
        return
    budget.spend(len(base))
    rest = [[(x,), 1] for x in base[1:]]
    if e == 2:
        tail = [[(x,), 1] for x in base]
    else:
        tail = [[base, e - 1]]
    work[0:1] = rest + tail


def _drop_back_letter(work: list[list], budget: Budget):
    base, e = work[-1]
    if len(base) == 1:
        if e == 1:
            work.pop()
        else:
            work[-1][1] = e - 1
        return
    budget.spend(len(base))
    front = [[base, e - 1]] if e > 2 else [[(x,), 1] for x in base]
    rest = [[(x,), 1] for x in base[:-1]]
    work[len(work) - 1 :] = front + rest


# ---------------------------------------------------------------------------
# Endomorphism application


def _push_image(builder: Builder, images, letter: int):
    img = images[abs(letter) - 1]
    if letter > 0:
        builder.push_blockword(img)
    else:
        builder.push_blockword_inverse(img)


def _apply_power_block(builder: Builder, images, base, exp, budget: Budget):
    """Append phi(base)^exp using phi(base) = p * core^k * p^-1."""
    sub = Builder(budget)
    for x in base:
        _push_image(sub, images, x)
    u = sub.stack
    if not u:
        return
    prefix, core = _cyclic_reduce_blocks(u, budget)
    if not core:
        return  # phi(base) was trivial, so the whole power collapses
    for x, c in prefix:
        builder.push_block((x,), c)
    if len(core) == 1:
        root, k = tuple(core[0][0]), core[0][1]
        builder.push_block(root, k * exp)
    else:
        total = sum(e * len(b) for b, e in core)
        if total > FLAT_CAP:
            raise BudgetError(
                "image core too long for exact power normalization"
            )
        budget.spend(total)
        flat = []
        for b, e in core:
            flat.extend(b * e)
        root, k = primitive_root(tuple(flat))
        builder.push_block(root, k * exp)
    for x, c in reversed(prefix):
        builder.push_block((-x,), c)


def apply_endo_blocks(images, w: BlockWord, budget: Budget) -> BlockWord:
    """phi(w) for images given as BlockWords (index i holds phi(g_{i+1}))."""
    builder = Builder(budget)
    for base, exp in w.blocks:
        if exp == 1:
            for x in base:
                _push_image(builder, images, x)
        else:
            _apply_power_block(builder, images, base, exp, budget)
    return builder.result()


def compress_images(images: list[BlockWord]) -> list[BlockWord]:
    """Pre-roll periodic repetitions inside small images once per iteration."""
    out = []
    for img in images:
        if 0 < img.length() <= COMPRESS_CAP:
            out.append(compress_flat(img.flatten(COMPRESS_CAP)))
        else:
            out.append(img)
    return out
