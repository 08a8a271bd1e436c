"""Tensor-space realization of the Schur algebra and its q-analogue.

A model for parameters (n, d) consists of the n^d basis words of length
d over the alphabet {1..n}, listed lexicographically, together with the
action of the generators on them:

* classical mode: e_i, f_i act by the Leibniz rule of the matrix units
  E_{i,i+1}, E_{i+1,i} across the d tensor positions, and H_k is
  diagonal with eigenvalue mu_k (the number of letters k in the word);
* quantum mode: E_i, F_i, K_i act on a single factor by
  K_i u_j = v^{delta_ij} u_j, E_i u_j = delta_{j,i+1} u_i,
  F_i u_j = delta_{j,i} u_{i+1}, extended to d factors through the
  coproduct E_i -> E_i (x) K_i K_{i+1}^{-1} + 1 (x) E_i,
  F_i -> F_i (x) 1 + K_i^{-1} K_{i+1} (x) F_i, K_i -> K_i (x) K_i,
  iterated coassociatively.

Operators are stored column-sparse: for each input word index, the
image vector as a mapping from word index to scalar.  Everything is
exact; no floats appear anywhere.
"""

import os
from dataclasses import dataclass, field
from itertools import product

from .errors import BadWeight, SizeLimit
from .ring import scalar_ring

__all__ = [
    "DEFAULT_WORD_CAP",
    "RootData",
    "SparseOperator",
    "Model",
    "build_model",
    "generator_action",
    "weight_idempotent",
    "cartan_binomial",
    "compositions",
    "word_weight",
]

DEFAULT_WORD_CAP = 10_000
WORD_CAP_ENV = "SCHUR_WORD_CAP"


def word_weight(word, n):
    """Weight of a word: the tuple of letter multiplicities."""
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def compositions(n, d):
    """All weak compositions of d into n parts, first part descending.

    >>> compositions(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class RootData:
    """Type A_{n-1} root bookkeeping for gl_n weights written in the
    epsilon basis (integer n-tuples)."""

    n: int
    positive_roots: tuple = ()

    @staticmethod
    def for_rank(n):
        roots = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        return RootData(n=n, positive_roots=roots)

    def simple_root(self, i):
        """alpha_i = eps_i - eps_{i+1} as an integer n-tuple."""
        out = [0] * self.n
        out[i - 1] = 1
        out[i] = -1
        return tuple(out)

    def root_as_vector(self, root):
        """eps_i - eps_j for a positive root (i, j)."""
        i, j = root
        out = [0] * self.n
        out[i - 1] = 1
        out[j - 1] = -1
        return tuple(out)

    def pairing(self, i, j):
        """(eps_i, alpha_j) = delta_{i,j} - delta_{i,j+1}."""
        return (1 if i == j else 0) - (1 if i == j + 1 else 0)


class SparseOperator:
    """Column-sparse linear operator on the word basis.

    ``cols`` maps a column (input word index) to a dict from row
    (output word index) to a nonzero scalar.  Instances are treated as
    immutable; all arithmetic returns new operators.
    """

    __slots__ = ("cols",)

    def __init__(self, cols=None):
        self.cols = cols or {}

    @staticmethod
    def from_columns(cols):
        """Build from a possibly unpruned column mapping."""
        clean = {}
        for j, col in cols.items():
            entries = {i: s for i, s in col.items() if not (s == 0)}
            if entries:
                clean[j] = entries
        return SparseOperator(clean)

    def is_zero(self):
        return not self.cols

    def column(self, j):
        return self.cols.get(j, {})

    def __add__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        out = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            tgt = out.setdefault(j, {})
            for i, s in col.items():
                t = tgt.get(i, 0) + s
                if t == 0:
                    tgt.pop(i, None)
                else:
                    tgt[i] = t
            if not tgt:
                del out[j]
        return SparseOperator(out)

    def __neg__(self):
        return SparseOperator(
            {j: {i: -s for i, s in col.items()} for j, col in self.cols.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, s):
        if s == 0:
            return SparseOperator()
        return SparseOperator(
            {j: {i: s * t for i, t in col.items()} for j, col in self.cols.items()}
        )

    def __matmul__(self, other):
        """Operator composition: (A @ B)(w) = A(B(w))."""
        if not isinstance(other, SparseOperator):
            return NotImplemented
        out = {}
        for j, bcol in other.cols.items():
            acc = {}
            for mid, s in bcol.items():
                acol = self.cols.get(mid)
                if not acol:
                    continue
                for i, t in acol.items():
                    u = acc.get(i, 0) + t * s
                    if u == 0:
                        acc.pop(i, None)
                    else:
                        acc[i] = u
            if acc:
                out[j] = acc
        return SparseOperator(out)

    def __pow__(self, m):
        if m < 1:
            raise ValueError("use model.identity() for the zeroth power")
        out = self
        for _ in range(m - 1):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.cols == other.cols

    def entry_count(self):
        return sum(len(col) for col in self.cols.values())

    def __repr__(self):
        return f"SparseOperator(<{self.entry_count()} entries>)"


@dataclass
class Model:
    """Immutable tensor model for parameters (n, d) in one scalar mode."""

    n: int
    d: int
    mode: str
    words: tuple
    word_index: dict
    weights: tuple
    root_data: RootData
    scalars: object
    spec_points: tuple
    _generators: dict = field(default_factory=dict, repr=False)
    _op_cache: dict = field(default_factory=dict, repr=False)

    @property
    def num_words(self):
        return len(self.words)

    def identity(self):
        one = self.scalars.one
        return SparseOperator({j: {j: one} for j in range(self.num_words)})

    def zero_op(self):
        return SparseOperator()

    def diagonal(self, value_fn):
        """Diagonal operator with entry value_fn(word_index) per word."""
        cols = {}
        for j in range(self.num_words):
            s = value_fn(j)
            if not (s == 0):
                cols[j] = {j: s}
        return SparseOperator(cols)

    def generator(self, sym, index=None):
        key = (sym, index)
        if key not in self._generators:
            raise ValueError(f"unknown generator {sym}_{index} in {self.mode} mode")
        return self._generators[key]

    def weight_set(self):
        return compositions(self.n, self.d)


def _classical_generators(model):
    n, d = model.n, model.d
    gens = {}
    for i in range(1, n):
        e_cols, f_cols = {}, {}
        for j, word in enumerate(model.words):
            e_img, f_img = {}, {}
            for p in range(d):
                if word[p] == i + 1:
                    target = model.word_index[word[:p] + (i,) + word[p + 1:]]
                    e_img[target] = e_img.get(target, 0) + 1
                if word[p] == i:
                    target = model.word_index[word[:p] + (i + 1,) + word[p + 1:]]
                    f_img[target] = f_img.get(target, 0) + 1
            if e_img:
                e_cols[j] = e_img
            if f_img:
                f_cols[j] = f_img
        gens[("e", i)] = SparseOperator(e_cols)
        gens[("f", i)] = SparseOperator(f_cols)
    for k in range(1, n + 1):
        cols = {}
        for j in range(model.num_words):
            mu = model.weights[j][k - 1]
            if mu:
                cols[j] = {j: mu}
        gens[("H", k)] = SparseOperator(cols)
    return gens


def _quantum_generators(model):
    n, d = model.n, model.d
    ring = model.scalars
    gens = {}
    for i in range(1, n):
        e_cols, f_cols = {}, {}
        for j, word in enumerate(model.words):
            e_img, f_img = {}, {}
            for p in range(d):
                # E_i acts at position p, twisted by K_i K_{i+1}^{-1} on
                # the factors to the right of p.
                if word[p] == i + 1:
                    target = model.word_index[word[:p] + (i,) + word[p + 1:]]
                    twist = sum(
                        (1 if letter == i else 0) - (1 if letter == i + 1 else 0)
                        for letter in word[p + 1:]
                    )
                    s = e_img.get(target, ring.zero) + ring.v_power(twist)
                    if s == 0:
                        e_img.pop(target, None)
                    else:
                        e_img[target] = s
                # F_i acts at position p, twisted by K_i^{-1} K_{i+1} on
                # the factors to the left of p.
                if word[p] == i:
                    target = model.word_index[word[:p] + (i + 1,) + word[p + 1:]]
                    twist = sum(
                        (1 if letter == i else 0) - (1 if letter == i + 1 else 0)
                        for letter in word[:p]
                    )
                    s = f_img.get(target, ring.zero) + ring.v_power(-twist)
                    if s == 0:
                        f_img.pop(target, None)
                    else:
                        f_img[target] = s
            if e_img:
                e_cols[j] = e_img
            if f_img:
                f_cols[j] = f_img
        gens[("E", i)] = SparseOperator(e_cols)
        gens[("F", i)] = SparseOperator(f_cols)
    for k in range(1, n + 1):
        diag = {}
        diag_inv = {}
        for j in range(model.num_words):
            mu = model.weights[j][k - 1]
            diag[j] = {j: ring.v_power(mu)}
            diag_inv[j] = {j: ring.v_power(-mu)}
        gens[("K", k)] = SparseOperator(diag)
        gens[("K^-1", k)] = SparseOperator(diag_inv)
    return gens


def build_model(n, d, mode="classical", word_cap=None, spec_points=None):
    """Construct the tensor model for (n, d) in the given mode.

    The number of words n^d is capped (default 10^4, or the value of
    the SCHUR_WORD_CAP environment variable); exceeding it raises
    SizeLimit rather than thrashing memory.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if d < 1:
        raise ValueError("need d >= 1")
    if word_cap is None:
        word_cap = int(os.environ.get(WORD_CAP_ENV, DEFAULT_WORD_CAP))
    count = n**d
    if count > word_cap:
        raise SizeLimit(f"n^d = {count} exceeds the word cap {word_cap}")
    if spec_points is None:
        from fractions import Fraction

        spec_points = (Fraction(7, 5), Fraction(11, 7))
    words = tuple(product(range(1, n + 1), repeat=d))
    model = Model(
        n=n,
        d=d,
        mode=mode,
        words=words,
        word_index={w: j for j, w in enumerate(words)},
        weights=tuple(word_weight(w, n) for w in words),
        root_data=RootData.for_rank(n),
        scalars=scalar_ring(mode),
        spec_points=tuple(spec_points),
    )
    if mode == "classical":
        model._generators.update(_classical_generators(model))
    else:
        model._generators.update(_quantum_generators(model))
    return model


def generator_action(model, sym, index):
    """The cached action of one generator.

    Classical symbols: "e", "f" (index 1..n-1) and "H" (index 1..n).
    Quantum symbols: "E", "F" (index 1..n-1) and "K", "K^-1" (1..n).
    """
    return model.generator(sym, index)


def _check_weight(model, lam):
    if len(lam) != model.n or any(part < 0 for part in lam):
        raise BadWeight(f"{lam} is not a weight for n = {model.n}")
    if sum(lam) != model.d:
        raise BadWeight(f"{lam} does not sum to d = {model.d}")


def cartan_binomial(model, k, m):
    """Binomial of a Cartan generator as an operator.

    Classical: binom(H_k, m) = H_k (H_k - 1) ... (H_k - m + 1) / m!.
    Quantum: the Gaussian analogue
    prod_{s=1..m} (K_k v^{1-s} - K_k^{-1} v^{s-1}) / (v^s - v^{-s}).
    Both are evaluated as genuine operator products; entries must come
    out integral and are stored reduced.
    """
    key = ("cartan_binomial", k, m)
    if key in model._op_cache:
        return model._op_cache[key]
    if m < 0:
        raise ValueError("need m >= 0")
    ring = model.scalars
    if m == 0:
        out = model.identity()
    elif model.mode == "classical":
        from math import factorial

        h = model.generator("H", k)
        ident = model.identity()
        acc = ident
        for t in range(m):
            acc = acc @ (h - ident.scale(t))
        from fractions import Fraction

        inv = Fraction(1, factorial(m))
        out = SparseOperator(
            {
                j: {i: ring.to_integral(s * inv) for i, s in col.items()}
                for j, col in acc.cols.items()
            }
        )
    else:
        from .ring import LaurentFraction, LaurentPoly

        kk = model.generator("K", k)
        kk_inv = model.generator("K^-1", k)
        acc = model.identity()
        den = LaurentPoly.one()
        for s in range(1, m + 1):
            acc = acc @ (kk.scale(ring.v_power(1 - s)) - kk_inv.scale(ring.v_power(s - 1)))
            den = den * (LaurentPoly.v_power(s) - LaurentPoly.v_power(-s))
        inv = LaurentFraction(LaurentPoly.one(), den)
        out = SparseOperator(
            {
                j: {i: ring.to_integral(s * inv) for i, s in col.items()}
                for j, col in acc.cols.items()
            }
        )
    model._op_cache[key] = out
    return out


def weight_idempotent(model, lam):
    """The weight idempotent for a composition lam of d.

    Computed from the Cartan binomial product formula (not built
    directly as a projector; the projector description is what the
    tests compare against).
    """
    lam = tuple(lam)
    _check_weight(model, lam)
    key = ("weight_idempotent", lam)
    if key in model._op_cache:
        return model._op_cache[key]
    out = model.identity()
    for k in range(1, model.n + 1):
        if lam[k - 1]:
            out = out @ cartan_binomial(model, k, lam[k - 1])
    model._op_cache[key] = out
    return out
