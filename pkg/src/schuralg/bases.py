"""Basis families, exact rank certification, and structure constants.

The basis kinds:

* ``B1``: e_A 1_lam f_C with content(A) + content(C) <= lam,
* ``B2``: f_A 1_lam e_C with content_low(A) + content_low(C) <= lam,
* ``PBW``: ordered monomials of total degree <= d in the un-divided
  root vectors plus the Cartan generators with one index k0 omitted,
* ``PLUS`` / ``MINUS``: divided-power monomials e_A / f_A with |A| <= d,
* ``BOREL_UP`` / ``BOREL_DOWN``: e_A 1_lam / 1_lam f_A with
  content(A) <= lam,
* ``ZERO``: the weight idempotents alone.

Rank certification is exact.  Classical families are reduced by
fraction-free elimination on primitive integer rows.  Quantum families
are specialized at two fixed rational points of v; a full-rank
specialization already proves linear independence over the rational
function field, and the two runs must agree (with an exact fallback
over Laurent fractions if they ever disagree).
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import NotInSpan
from .rootvectors import BasisLabel, eval_label
from .tensormodel import compositions

__all__ = [
    "KINDS",
    "content",
    "content_low",
    "root_sum",
    "enumerate_basis",
    "rank_of_family",
    "RankAccumulator",
    "coordinates",
    "structure_constants",
    "basis_json",
    "basis_csv",
    "structure_table_json",
    "structure_table_csv",
]

KINDS = ("B1", "B2", "PBW", "PLUS", "MINUS", "BOREL_UP", "BOREL_DOWN", "ZERO")


def content(root_data, exponents, side="plus"):
    """Content of a multi-index: sum of m * eps_j over its roots (i, j).

    The value is independent of which side (plus or minus monomial) the
    multi-index sits on; the parameter is accepted for callers that
    track it anyway.
    """
    del side
    out = [0] * root_data.n
    for (i, j), m in zip(root_data.positive_roots, exponents):
        out[j - 1] += m
    return tuple(out)


def content_low(root_data, exponents):
    """Mirror of :func:`content` charging eps_i instead of eps_j.

    A raising monomial standing right of a weight idempotent, or a
    lowering monomial standing left of one, is nonzero exactly when the
    weight dominates this vector: each root vector for (i, j) consumes
    one unit of the i-th coordinate.  The B2 family is admissible under
    this measure, the mirror image of B1's.
    """
    out = [0] * root_data.n
    for (i, j), m in zip(root_data.positive_roots, exponents):
        out[i - 1] += m
    return tuple(out)


def root_sum(root_data, exponents):
    """Weight shift sum of m * (eps_i - eps_j) of a root monomial."""
    out = [0] * root_data.n
    for (i, j), m in zip(root_data.positive_roots, exponents):
        out[i - 1] += m
        out[j - 1] -= m
    return tuple(out)


def _content_bounded(roots, budget, low=False):
    """Exponent tuples over ``roots`` with content <= budget, in
    ascending lexicographic order.  ``low`` switches to the mirror
    measure that charges the first root index instead of the second."""
    out = []
    budget = list(budget)
    pos = 0 if low else 1

    def rec(idx, acc):
        if idx == len(roots):
            out.append(tuple(acc))
            return
        j = roots[idx][pos] - 1
        cap = budget[j]
        for m in range(cap + 1):
            budget[j] = cap - m
            acc.append(m)
            rec(idx + 1, acc)
            acc.pop()
        budget[j] = cap

    rec(0, [])
    return out


def _degree_bounded(length, total):
    """Tuples of the given length with entry sum <= total, ascending lex."""
    out = []

    def rec(idx, remaining, acc):
        if idx == length:
            out.append(tuple(acc))
            return
        for m in range(remaining + 1):
            acc.append(m)
            rec(idx + 1, remaining - m, acc)
            acc.pop()

    rec(0, total, [])
    return out


def enumerate_basis(n, d, kind, k0=None):
    """Deterministically ordered labels of the requested basis kind."""
    from .tensormodel import RootData

    if kind not in KINDS:
        raise ValueError(f"unknown basis kind {kind!r}")
    rd = RootData.for_rank(n)
    roots = rd.positive_roots
    zero = (0,) * len(roots)
    weights = compositions(n, d)
    labels = []
    if kind in ("B1", "B2"):
        low = kind == "B2"
        measure = content_low if low else content
        for lam in weights:
            for A in _content_bounded(roots, lam, low=low):
                remaining = tuple(l - c for l, c in zip(lam, measure(rd, A)))
                for C in _content_bounded(roots, remaining, low=low):
                    labels.append(BasisLabel(flavor=kind, A=A, lam=lam, C=C))
    elif kind == "PBW":
        if k0 is None:
            k0 = n
        if not (1 <= k0 <= n):
            raise ValueError(f"k0 must be in 1..{n}")
        length = 2 * len(roots) + n - 1
        for exps in _degree_bounded(length, d):
            labels.append(BasisLabel(flavor="PBW", pbw=exps, k0=k0))
    elif kind in ("PLUS", "MINUS"):
        for A in _degree_bounded(len(roots), d):
            labels.append(BasisLabel(flavor=kind, A=A, lam=None, C=zero))
    elif kind in ("BOREL_UP", "BOREL_DOWN"):
        for lam in weights:
            for A in _content_bounded(roots, lam):
                labels.append(BasisLabel(flavor=kind, A=A, lam=lam, C=zero))
    else:  # ZERO
        for lam in weights:
            labels.append(BasisLabel(flavor="ZERO", A=zero, lam=lam, C=zero))
    return labels


def _operator_row(model, op):
    """Flatten an operator to a sparse vector of length n^(2d)."""
    size = model.num_words
    row = {}
    for j, col in op.cols.items():
        base = j * size
        for i, s in col.items():
            row[base + i] = s
    return row


def _primitive_int_row(row):
    """Scale a rational row to coprime integers."""
    if not row:
        return {}
    mult = lcm(*(s.denominator for s in row.values()))
    ints = {k: int(s * mult) for k, s in row.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    if g > 1:
        ints = {k: c // g for k, c in ints.items()}
    return ints


def _reduce_by_gcd(row):
    g = 0
    for c in row.values():
        g = gcd(g, c)
    if g > 1:
        return {k: c // g for k, c in row.items()}
    return row


class _IntEchelon:
    """Fraction-free sparse row reduction over the integers."""

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        """Reduce a primitive integer row; return True if rank grew."""
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = _reduce_by_gcd(row)
                return True
            a, b = row[lead], piv[lead]
            g = gcd(a, b)
            am, bm = a // g, b // g
            new = {k: bm * c for k, c in row.items()}
            for k, c in piv.items():
                s = new.get(k, 0) - am * c
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = _reduce_by_gcd(new)
        return False


class _FieldEchelon:
    """Sparse row reduction over an exact field of scalars."""

    def __init__(self, scalars):
        self.scalars = scalars
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        div = self.scalars.div
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                inv = row.pop(lead)
                monic = {k: div(c, inv) for k, c in row.items()}
                monic[lead] = self.scalars.one
                self.pivots[lead] = monic
                return True
            factor = row.pop(lead)
            for k, c in piv.items():
                if k == lead:
                    continue
                s = row.get(k, 0) - factor * c
                if s == 0:
                    row.pop(k, None)
                else:
                    row[k] = s
        return False


class RankAccumulator:
    """Incremental exact rank of a stream of operators.

    Classical mode reduces primitive integer rows.  Quantum mode keeps
    two echelons, one per specialization point; ``rank`` is the smaller
    of the two, a certified lower bound that equals the true rank
    whenever it reaches the size of an independent family.
    """

    def __init__(self, model):
        self.model = model
        if model.mode == "classical":
            self._echelons = (_IntEchelon(),)
            self._points = (None,)
        else:
            self._echelons = (_IntEchelon(), _IntEchelon())
            self._points = model.spec_points

    @property
    def rank(self):
        return min(e.rank for e in self._echelons)

    @property
    def ranks(self):
        return tuple(e.rank for e in self._echelons)

    def add(self, op):
        row = _operator_row(self.model, op)
        grew = False
        for ech, point in zip(self._echelons, self._points):
            if point is None:
                prepared = _primitive_int_row(row)
            else:
                prepared = _primitive_int_row(
                    {k: s.specialize(point) for k, s in row.items()}
                )
            grew = ech.add(prepared) or grew
        return grew


def rank_of_family(model, operators, stop_at=None):
    """Exact rank of a family of operators viewed as vectors.

    In quantum mode both specialization ranks must agree; if they ever
    disagree the rank is recomputed exactly over Laurent fractions.
    """
    operators = list(operators)
    acc = RankAccumulator(model)
    for op in operators:
        acc.add(op)
        if stop_at is not None and acc.rank >= stop_at:
            return acc.rank
    ranks = acc.ranks
    if len(set(ranks)) == 1:
        return ranks[0]
    exact = _FieldEchelon(model.scalars)
    for op in operators:
        exact.add(_operator_row(model, op))
    return exact.rank


def _label_block(root_data, label):
    """(source weight, target weight) of a label's operator, when the
    flavor pins one; None for PBW and bare monomial flavors."""
    if label.flavor == "ZERO":
        return (label.lam, label.lam)
    if label.flavor == "B1":
        src = tuple(l + r for l, r in zip(label.lam, root_sum(root_data, label.C)))
        dst = tuple(l + r for l, r in zip(label.lam, root_sum(root_data, label.A)))
        return (src, dst)
    if label.flavor == "B2":
        src = tuple(l - r for l, r in zip(label.lam, root_sum(root_data, label.C)))
        dst = tuple(l - r for l, r in zip(label.lam, root_sum(root_data, label.A)))
        return (src, dst)
    if label.flavor == "BOREL_UP":
        dst = tuple(l + r for l, r in zip(label.lam, root_sum(root_data, label.A)))
        return (label.lam, dst)
    if label.flavor == "BOREL_DOWN":
        src = tuple(l + r for l, r in zip(label.lam, root_sum(root_data, label.A)))
        return (src, label.lam)
    return None


def _op_blocks(model, op):
    blocks = set()
    for j, col in op.cols.items():
        src = model.weights[j]
        for i in col:
            blocks.add((src, model.weights[i]))
    return blocks


def coordinates(model, op, basis):
    """Coefficients of ``op`` in the given basis family.

    Solving is restricted to the weight blocks the operator touches
    whenever every candidate label pins a block, which keeps the linear
    systems small.  Raises NotInSpan if no expansion exists or the
    family is dependent where it matters.
    """
    if op.is_zero():
        return {}
    rd = model.root_data
    blocks = [_label_block(rd, label) for label in basis]
    if all(b is not None for b in blocks):
        touched = _op_blocks(model, op)
        candidates = [
            label for label, block in zip(basis, blocks) if block in touched
        ]
    else:
        candidates = list(basis)
    columns = [_operator_row(model, eval_label(model, label)) for label in candidates]
    target = _operator_row(model, op)
    values = _solve_exact(model.scalars, columns, target)
    out = {}
    for label, val in zip(candidates, values):
        if not (val == 0):
            out[label] = val
    return out


def _solve_exact(scalars, columns, target):
    """Solve sum_u x_u * columns[u] = target for exact scalars.

    Raises NotInSpan when the system is inconsistent or the columns are
    linearly dependent (no unique expansion).
    """
    equations = {}
    for u, colrow in enumerate(columns):
        for k, s in colrow.items():
            equations.setdefault(k, ({}, [0]))[0][u] = s
    for k, s in target.items():
        equations.setdefault(k, ({}, [0]))[1][0] = s
    div = scalars.div
    pivots = {}
    for coeffs, rhs_box in equations.values():
        coeffs = dict(coeffs)
        rhs = rhs_box[0]
        while coeffs:
            u = min(coeffs)
            piv = pivots.get(u)
            if piv is None:
                lead = coeffs.pop(u)
                monic = {w: div(c, lead) for w, c in coeffs.items()}
                pivots[u] = (monic, div(rhs, lead))
                coeffs = {}
                break
            factor = coeffs.pop(u)
            pcoeffs, prhs = piv
            for w, c in pcoeffs.items():
                s = coeffs.get(w, 0) - factor * c
                if s == 0:
                    coeffs.pop(w, None)
                else:
                    coeffs[w] = s
            rhs = rhs - factor * prhs
        else:
            if not (rhs == 0):
                raise NotInSpan("operator is outside the span of the family")
    if len(pivots) < len(columns):
        raise NotInSpan("family is linearly dependent; no unique expansion")
    values = [scalars.zero] * len(columns)
    for u in sorted(pivots, reverse=True):
        coeffs, rhs = pivots[u]
        total = rhs
        for w, c in coeffs.items():
            total = total - c * values[w]
        values[u] = total
    return values


def structure_constants(model, basis, i, j):
    """Coefficient vector of basis[i] . basis[j] in the basis itself."""
    product = eval_label(model, basis[i]) @ eval_label(model, basis[j])
    return coordinates(model, product, basis)


def basis_json(model, labels):
    from .rootvectors import label_to_json

    return {"basis": [label_to_json(label, model.root_data) for label in labels]}


def basis_csv(model, labels):
    from .rootvectors import label_key, label_to_json

    lines = ["key,flavor,A,lambda,C,pbw,k0"]
    for label in labels:
        data = label_to_json(label, model.root_data)

        def fmt(part):
            if part is None:
                return ""
            if isinstance(part, dict):
                return ";".join(f"{k}:{v}" for k, v in sorted(part.items()))
            if isinstance(part, list):
                return ";".join(str(x) for x in part)
            return str(part)

        lines.append(
            ",".join(
                [
                    '"' + label_key(label, model.root_data) + '"',
                    label.flavor,
                    fmt(data.get("A")),
                    fmt(data.get("lambda")),
                    fmt(data.get("C")),
                    fmt(data.get("pbw")),
                    fmt(data.get("k0")),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def structure_table_json(model, labels, pairs):
    """Structure-constant table for the given (left, right) index pairs."""
    from .rootvectors import label_key, label_to_json

    triples = []
    for i, j in pairs:
        coeffs = structure_constants(model, labels, i, j)
        triples.append(
            {
                "left": i,
                "right": j,
                "coeffs": {
                    label_key(label, model.root_data): model.scalars.render(s)
                    for label, s in coeffs.items()
                },
            }
        )
    return {
        "basis": [label_to_json(label, model.root_data) for label in labels],
        "triples": triples,
    }


def structure_table_csv(model, labels, pairs):
    from .rootvectors import label_key

    lines = ["left,right,label,coefficient"]
    for i, j in pairs:
        coeffs = structure_constants(model, labels, i, j)
        for label, s in sorted(
            coeffs.items(), key=lambda kv: label_key(kv[0], model.root_data)
        ):
            lines.append(
                f'{i},{j},"{label_key(label, model.root_data)}",'
                f'"{model.scalars.render(s)}"'
            )
    return "\n".join(lines) + "\n"
