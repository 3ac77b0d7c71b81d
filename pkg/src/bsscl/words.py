"""Words in BS(m, l) = <a, t | t a^m t^-1 = a^l>, with m, l nonzero and m != l.

Free words over {a, t} are stored as merged (generator, exponent) syllables.
Britton reduction rewrites t a^(km) t^-1 -> a^(kl) and t^-1 a^(kl) t -> a^(km)
together with free cancellation; a word is trivial iff it reduces to the empty
word.  Cyclic reduction additionally removes pinches across the wrap-around,
which is what conjugacy computations need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NonTerminating, ParseError


@dataclass(frozen=True)
class GroupParams:
    """Defining exponents m, l of BS(m, l).  Both nonzero, m != l."""

    m: int
    ell: int

    def __post_init__(self):
        if self.m == 0 or self.ell == 0:
            raise ValueError("m and l must both be nonzero")
        if self.m == self.ell:
            raise ValueError("m == l is out of scope")


@dataclass(frozen=True)
class Word:
    """A word in the generators a, t, maximally merged.

    letters is a tuple of (gen, exp) with gen in {"a", "t"}, exp != 0, and no
    two adjacent syllables sharing a generator.  Use make_word to build one
    from an arbitrary syllable list.
    """

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.letters:
            if gen not in ("a", "t"):
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent syllable")
            if gen == prev:
                raise ValueError("adjacent syllables not merged")
            prev = gen

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return make_word(list(self.letters) + list(other.letters))

    def __bool__(self) -> bool:
        return bool(self.letters)


def make_word(pairs) -> Word:
    """Merge adjacent syllables and drop zero exponents (cancellations cascade)."""
    merged: list[list] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if merged and merged[-1][0] == gen:
            merged[-1][1] += exp
            if merged[-1][1] == 0:
                merged.pop()
        else:
            merged.append([gen, exp])
    return Word(tuple((g, e) for g, e in merged))


_TOKEN = re.compile(r"[at](\^-?\d+)?")
_SEP = re.compile(r"[\s*]+")


def parse(text: str, params: GroupParams) -> Word:
    """Parse a word like "t a^-2 t^-1 a" (separators: whitespace or *)."""
    del params  # the grammar does not depend on the group
    pairs = []
    pos = 0
    while pos < len(text):
        sep = _SEP.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        tok = _TOKEN.match(text, pos)
        if not tok:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        exp = 1 if tok.group(1) is None else int(tok.group(1)[1:])
        pairs.append((text[pos], exp))
        pos = tok.end()
    return make_word(pairs)


def word_to_str(w: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.letters)


def britton_reduce(w: Word, params: GroupParams) -> Word:
    """Britton-reduced form of w: no subword t a^(km) t^-1 or t^-1 a^(kl) t."""
    m, ell = params.m, params.ell
    stack: list[tuple[str, int]] = []

    def push_a(c: int) -> None:
        if c == 0:
            return
        if stack and stack[-1][0] == "a":
            c += stack.pop()[1]
            if c == 0:
                return
        stack.append(("a", c))

    def push_t(e: int) -> None:
        top_a = 0
        idx = len(stack) - 1
        if idx >= 0 and stack[idx][0] == "a":
            top_a = stack[idx][1]
            idx -= 1
        if idx >= 0 and stack[idx] == ("t", -e):
            # e == -1 closes t a^c t^-1, e == +1 closes t^-1 a^c t
            div, mul = (m, ell) if e == -1 else (ell, m)
            if top_a % div == 0:
                if top_a:
                    stack.pop()
                stack.pop()
                push_a(top_a // div * mul)
                return
        stack.append(("t", e))

    for gen, exp in w.letters:
        if gen == "a":
            push_a(exp)
        else:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                push_t(step)
    return make_word(stack)


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically Britton-reduced conjugacy representative.

    syllables is a tuple of (eps, k): the word reads t^eps1 a^k1 ... t^epsn a^kn
    around the circle.  A word with no t letters has syllables == () and the
    surviving a-exponent in residual.
    """

    params: GroupParams
    syllables: tuple[tuple[int, int], ...] = ()
    residual: int = 0

    def __post_init__(self):
        if self.syllables and self.residual:
            raise ValueError("residual only applies to t-free words")
        n = len(self.syllables)
        for i, (eps, k) in enumerate(self.syllables):
            if eps not in (1, -1):
                raise ValueError("eps must be +1 or -1")
            nxt = self.syllables[(i + 1) % n][0]
            if eps == 1 and nxt == -1 and k % self.params.m == 0:
                raise ValueError(f"pinch at syllable {i + 1}: m divides {k}")
            if eps == -1 and nxt == 1 and k % self.params.ell == 0:
                raise ValueError(f"pinch at syllable {i + 1}: l divides {k}")

    @property
    def n(self) -> int:
        return len(self.syllables)

    def to_word(self) -> Word:
        if not self.syllables:
            return make_word([("a", self.residual)])
        pairs = []
        for eps, k in self.syllables:
            pairs.append(("t", eps))
            pairs.append(("a", k))
        return make_word(pairs)

    def rotate(self, r: int) -> "CyclicWord":
        if not self.syllables:
            return self
        n = self.n
        r %= n
        return CyclicWord(self.params, self.syllables[r:] + self.syllables[:r])


def _unit_letters(w: Word) -> list[tuple[str, int]]:
    """Explode t-powers into single letters; keep a-powers merged."""
    out: list[tuple[str, int]] = []
    for gen, exp in w.letters:
        if gen == "a":
            out.append((gen, exp))
        else:
            step = 1 if exp > 0 else -1
            out.extend(("t", step) for _ in range(abs(exp)))
    return out


def cyclically_reduce(w: Word, params: GroupParams) -> tuple[CyclicWord, Word]:
    """Return (x, c) with x cyclically reduced and c * x * c^-1 = w in the group."""
    cur = britton_reduce(w, params)
    conj: list[tuple[str, int]] = []
    m, ell = params.m, params.ell
    while True:
        letters = _unit_letters(cur)
        if not any(g == "t" for g, _ in letters):
            residual = letters[0][1] if letters else 0
            return CyclicWord(params, (), residual), britton_reduce(make_word(conj), params)
        if letters[0][0] == "a":
            c = letters[0][1]
            conj.append(("a", c))
            cur = britton_reduce(make_word(letters[1:] + [("a", c)]), params)
            continue
        e_first = letters[0][1]
        # trailing a-power (k) and the final t-letter before it
        k = letters[-1][1] if letters[-1][0] == "a" else 0
        last_t = letters[-2] if letters[-1][0] == "a" else letters[-1]
        e_last = last_t[1]
        pinch = False
        if e_last == -e_first:
            div = m if e_last == 1 else ell
            pinch = k % div == 0
        if not pinch:
            break
        conj.append(("t", e_first))
        cur = britton_reduce(make_word(letters[1:] + [("t", e_first)]), params)
    # assemble syllables: letters now start with t and alternate t-blocks/a-powers
    syllables = []
    i = 0
    letters = _unit_letters(cur)
    while i < len(letters):
        eps = letters[i][1]
        k = 0
        if i + 1 < len(letters) and letters[i + 1][0] == "a":
            k = letters[i + 1][1]
            i += 1
        syllables.append((eps, k))
        i += 1
    return CyclicWord(params, tuple(syllables)), britton_reduce(make_word(conj), params)


def t_length(x) -> int:
    """Number of t letters (cyclic count for CyclicWord inputs)."""
    if isinstance(x, CyclicWord):
        return x.n
    return sum(abs(e) for g, e in x.letters if g == "t")


def t_exponent(w: Word) -> int:
    return sum(e for g, e in w.letters if g == "t")


@dataclass(frozen=True)
class AbelianImage:
    """Image in the abelianization Z x Z/|m - l|."""

    t_exp: int
    a_class: int


def abelianize(w: Word, params: GroupParams) -> AbelianImage:
    a_total = sum(e for g, e in w.letters if g == "a")
    return AbelianImage(t_exponent(w), a_total % abs(params.m - params.ell))


def is_elliptic(w: Word, params: GroupParams) -> bool:
    """True iff w is conjugate to a power of a."""
    x, _ = cyclically_reduce(w, params)
    return x.n == 0


def is_alternating(x: CyclicWord) -> bool:
    """True iff the t-signs strictly alternate +,-,+,- around the circle."""
    if x.n < 2 or x.n % 2:
        return False
    return all(x.syllables[i][0] != x.syllables[(i + 1) % x.n][0] for i in range(x.n))


# --- conjugacy -------------------------------------------------------------
#
# With the t-sign pattern fixed, the commuting moves
#   a^i t a^j   <->  a^(i-l) t a^(j+m)
#   a^i t^-1 a^j <-> a^(i+m) t^-1 a^(j-l)
# translate the exponent vector (k_1, ..., k_n) by a fixed integer lattice;
# two cyclically reduced words are conjugate iff one's syllables become the
# other's after a rotation and a lattice translation.  We pick the unique
# Hermite-form residue of the lattice coset, then the lexicographically least
# rotation.  (A naive "sweep each k_i into a window" loop fails to terminate:
# for n = 2 the lattice has rank 1, so most cosets meet no bounded window.)


def _crossing_vectors(eps: tuple[int, ...], params: GroupParams) -> list[list[int]]:
    n = len(eps)
    vecs = []
    for i in range(n):
        v = [0] * n
        e_next = eps[(i + 1) % n]
        if e_next == 1:
            v[i] -= params.ell
            v[(i + 1) % n] += params.m
        else:
            v[i] += params.m
            v[(i + 1) % n] -= params.ell
        vecs.append(v)
    return vecs


def _hnf_rows(vectors: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-echelon lattice basis with positive pivots (integer row reduction)."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    for col in range(ncols):
        active = [r for r in rows if r[col] != 0]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            r0 = active[0]
            for r in active[1:]:
                q = r[col] // r0[col]
                for i in range(ncols):
                    r[i] -= q * r0[i]
            active = [r for r in rows if r[col] != 0]
        piv = active[0]
        rows.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        for r in rows:
            if r[col] != 0:
                q = r[col] // piv[col]
                for i in range(ncols):
                    r[i] -= q * piv[i]
        basis.append(piv)
        rows = [r for r in rows if any(r)]
    return basis


def _reduce_coset(k: tuple[int, ...], basis: list[list[int]]) -> tuple[int, ...]:
    """The unique representative of k + lattice with pivot coords in [0, pivot)."""
    vec = list(k)
    for row in basis:
        j = next(i for i, x in enumerate(row) if x)
        q = vec[j] // row[j]
        if q:
            for i in range(len(vec)):
                vec[i] -= q * row[i]
    return tuple(vec)


def _elliptic_canonical_exponent(c: int, params: GroupParams) -> int:
    # a^(km) ~ a^(kl); pump toward the smaller absolute multiplier
    m, ell = params.m, params.ell
    if c == 0:
        return 0
    if abs(m) == abs(ell):  # ell == -m, the move flips sign when m | c
        return abs(c) if c % m == 0 else c
    big, small = (m, ell) if abs(m) > abs(ell) else (ell, m)
    while c % big == 0:
        c = c // big * small
    return c


def conjugacy_canonical(x: CyclicWord, max_iters: int | None = None) -> CyclicWord:
    """Canonical conjugacy representative; equal forms iff conjugate words."""
    params = x.params
    if x.n == 0:
        return CyclicWord(params, (), _elliptic_canonical_exponent(x.residual, params))
    if max_iters is not None and x.n > max_iters:
        raise NonTerminating(max_iters)
    best = None
    for r in range(x.n):
        rot = x.rotate(r)
        eps = tuple(e for e, _ in rot.syllables)
        kvec = tuple(k for _, k in rot.syllables)
        basis = _hnf_rows(_crossing_vectors(eps, params), x.n)
        cand = (eps, _reduce_coset(kvec, basis))
        if best is None or cand < best:
            best = cand
    return CyclicWord(params, tuple(zip(best[0], best[1])))


def default_canonicalization_cap(x: CyclicWord) -> int:
    p = x.params
    return 10 * max(x.n, 1) * (abs(p.m) + abs(p.ell))


def is_conjugate(x: CyclicWord, y: CyclicWord, max_iters: int | None = None) -> bool:
    if x.params != y.params:
        raise ValueError("words live in different groups")
    return conjugacy_canonical(x, max_iters) == conjugacy_canonical(y, max_iters)


def conjugate_word(u: Word, w: Word, params: GroupParams) -> Word:
    """britton_reduce(u w u^-1)."""
    return britton_reduce(u * w * u.inverse(), params)


def is_identity(w: Word, params: GroupParams) -> bool:
    return not britton_reduce(w, params)
