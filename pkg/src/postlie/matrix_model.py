"""A concrete complete filtered Rota-Baxter algebra for numeric checks.

Square matrices with exact rational entries, tensored with truncated power
series in a commuting parameter ``t``.  The operator ``R`` is minus the
strictly-lower-triangular projection, scaled by the weight; for weight 1 it
is ``R(A) = -tril(A, -1)``.  Both the image and the kernel of the projection
are subalgebras, which makes ``R`` a Rota-Baxter operator of that weight.

Matrices are numpy object arrays of :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np

from .coeffs import specialize
from .report import Report
from .series import Series
from .trees import Tree, psi_inverse

__all__ = [
    "rat_matrix",
    "random_matrix",
    "MatrixSeries",
    "rb_operator",
    "rb_tilde",
    "Report",
    "verify_rb_identity",
    "verify_order_two_identity",
    "verify_et9",
    "verify_derivative_identity",
    "verify_spitzer",
    "verify_factorization",
    "evaluate_series",
    "bch_recursion_direct",
]


def rat_matrix(rows) -> np.ndarray:
    return np.array([[Fraction(v) for v in row] for row in rows], dtype=object)


def zeros(n: int) -> np.ndarray:
    return np.full((n, n), Fraction(0), dtype=object)


def identity(n: int) -> np.ndarray:
    m = zeros(n)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def random_matrix(n: int, rng: np.random.Generator, low: int = -2, high: int = 2) -> np.ndarray:
    """Entries drawn uniformly from ``low..high``."""
    return rat_matrix(rng.integers(low, high + 1, size=(n, n)).tolist())


def _is_zero(m: np.ndarray) -> bool:
    return not any(v for v in m.flat)


class MatrixSeries:
    """``sum_k t^k C_k`` for ``k = 0..order`` with exact matrix coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [np.asarray(c, dtype=object) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def dim(self) -> int:
        return self.coeffs[0].shape[0]

    @classmethod
    def zero(cls, n: int, order: int) -> "MatrixSeries":
        return cls([zeros(n) for _ in range(order + 1)])

    @classmethod
    def one(cls, n: int, order: int) -> "MatrixSeries":
        return cls([identity(n)] + [zeros(n) for _ in range(order)])

    @classmethod
    def monomial(cls, m: np.ndarray, k: int, order: int) -> "MatrixSeries":
        """``t^k m``."""
        n = m.shape[0]
        return cls([m if i == k else zeros(n) for i in range(order + 1)])

    def __getitem__(self, k: int) -> np.ndarray:
        return self.coeffs[k]

    def __add__(self, other):
        m = min(self.order, other.order)
        return MatrixSeries([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)])

    def __neg__(self):
        return MatrixSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return MatrixSeries([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __matmul__(self, other):
        m = min(self.order, other.order)
        n = self.dim
        out = []
        for k in range(m + 1):
            acc = zeros(n)
            for i in range(k + 1):
                if not _is_zero(self.coeffs[i]) and not _is_zero(other.coeffs[k - i]):
                    acc = acc + self.coeffs[i].dot(other.coeffs[k - i])
            out.append(acc)
        return MatrixSeries(out)

    def bracket(self, other) -> "MatrixSeries":
        return self @ other - other @ self

    def map(self, fn) -> "MatrixSeries":
        return MatrixSeries([fn(c) for c in self.coeffs])

    def shift(self, k: int = 1) -> "MatrixSeries":
        """Multiply by ``t^k``, keeping the order."""
        n = self.dim
        return MatrixSeries([zeros(n)] * k + self.coeffs[: self.order + 1 - k])

    def derivative(self, times: int = 1) -> "MatrixSeries":
        out = self
        for _ in range(times):
            out = MatrixSeries([k * out.coeffs[k] for k in range(1, out.order + 1)])
        return out

    def truncate(self, order: int) -> "MatrixSeries":
        return MatrixSeries(self.coeffs[: order + 1])

    def exp(self) -> "MatrixSeries":
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs zero constant term")
        one = MatrixSeries.one(self.dim, self.order)
        acc = one
        for k in range(self.order, 0, -1):
            acc = one + (self @ acc) * Fraction(1, k)
        return acc

    def log(self) -> "MatrixSeries":
        one = MatrixSeries.one(self.dim, self.order)
        y = self - one
        if not _is_zero(y.coeffs[0]):
            raise ValueError("log needs constant term equal to the identity")
        if self.order == 0:
            return MatrixSeries.zero(self.dim, 0)
        acc = one * Fraction(1, self.order)
        for k in range(self.order - 1, 0, -1):
            acc = one * Fraction(1, k) - y @ acc
        return y @ acc

    def first_difference(self, other):
        """Lowest ``k`` where the coefficients differ, or ``None``."""
        for k in range(min(self.order, other.order) + 1):
            if not np.array_equal(self.coeffs[k], other.coeffs[k]):
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, MatrixSeries):
            return NotImplemented
        return self.order == other.order and self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        return f"MatrixSeries(dim={self.dim}, order={self.order})"


def rb_operator(x, weight=1):
    """``R(A) = -w * tril(A, -1)``, coefficientwise on series."""
    if isinstance(x, MatrixSeries):
        return x.map(lambda c: rb_operator(c, weight))
    return -Fraction(weight) * np.tril(x, -1)


def rb_tilde(x, weight=1):
    """``R~ = -w id - R``."""
    if isinstance(x, MatrixSeries):
        return x.map(lambda c: rb_tilde(c, weight))
    return -Fraction(weight) * x - rb_operator(x, weight)


def _comm(x, y):
    return x.dot(y) - y.dot(x)


# identities -----------------------------------------------------------------


def rb_identity_holds(x, y, weight=1) -> bool:
    R = lambda m: rb_operator(m, weight)
    lhs = R(x).dot(R(y))
    rhs = R(R(x).dot(y) + x.dot(R(y)) + Fraction(weight) * x.dot(y))
    return np.array_equal(lhs, rhs)


def tilde_rb_identity_holds(x, y, weight=1) -> bool:
    T = lambda m: rb_tilde(m, weight)
    lhs = T(x).dot(T(y))
    rhs = T(T(x).dot(y) + x.dot(T(y)) + Fraction(weight) * x.dot(y))
    return np.array_equal(lhs, rhs)


def mixed_identity_holds(x, y, weight=1) -> bool:
    R = lambda m: rb_operator(m, weight)
    T = lambda m: rb_tilde(m, weight)
    return np.array_equal(R(x).dot(T(y)), T(R(x).dot(y)) + R(x.dot(T(y))))


def order_two_identity_holds(a, weight=1) -> bool:
    """``2 R(a R(a)) = R(a) R(a) - R([R(a), a] + w a^2)``."""
    R = lambda m: rb_operator(m, weight)
    lhs = 2 * R(a.dot(R(a)))
    rhs = R(a).dot(R(a)) - R(_comm(R(a), a) + Fraction(weight) * a.dot(a))
    return np.array_equal(lhs, rhs)


def verify_rb_identity(samples: int = 100, seed: int = 0, dim: int = 4, weight=1) -> Report:
    """Rota-Baxter, tilde and mixed identities on seeded random pairs."""
    rng = np.random.default_rng(seed)
    report = Report("rb-identity")
    failures = {"rb": 0, "tilde": 0, "mixed": 0}
    witness = None
    for _ in range(samples):
        x, y = random_matrix(dim, rng), random_matrix(dim, rng)
        for key, fn in (("rb", rb_identity_holds), ("tilde", tilde_rb_identity_holds), ("mixed", mixed_identity_holds)):
            if not fn(x, y, weight):
                failures[key] += 1
                witness = witness or (key, x.tolist(), y.tolist())
    for key, label in (("rb", "R weight-1 identity"), ("tilde", "R~ weight-1 identity"), ("mixed", "mixed identity")):
        detail = f"{samples} samples" if not failures[key] else f"{failures[key]} failures, witness {witness}"
        report.add(label, not failures[key], detail)
    return report


def verify_order_two_identity(samples: int = 100, seed: int = 0, dim: int = 4, weight=1) -> Report:
    rng = np.random.default_rng(seed)
    report = Report("order-two")
    bad = [a for a in (random_matrix(dim, rng) for _ in range(samples)) if not order_two_identity_holds(a, weight)]
    report.add("2R(aR(a)) = R(a)^2 - R([R(a),a] + a^2)", not bad, f"{samples} samples")
    return report


# exponential factorization ----------------------------------------------------


def gl_power_series(x: np.ndarray, order: int) -> MatrixSeries:
    """``exp*(t x) = sum t^n x^{*n} / n!`` with ``x * Y = [R(x), Y] + x Y``."""
    n = x.shape[0]
    rx = rb_operator(x)
    powers = [identity(n)]
    for _ in range(order):
        y = powers[-1]
        powers.append(_comm(rx, y) + x.dot(y))
    return MatrixSeries([powers[k] * Fraction(1, factorial(k)) for k in range(order + 1)])


def _gl_power(x: np.ndarray, k: int) -> np.ndarray:
    rx = rb_operator(x)
    y = identity(x.shape[0])
    for _ in range(k):
        y = _comm(rx, y) + x.dot(y)
    return y


def _factorized(x: np.ndarray, order: int):
    left = MatrixSeries.monomial(-rb_tilde(x), 1, order).exp()
    right = MatrixSeries.monomial(-rb_operator(x), 1, order).exp()
    return left, right


def verify_et9(x: np.ndarray, order: int = 8) -> Report:
    """``exp*(t x) = exp(-t R~(x)) exp(-t R(x))`` coefficientwise up to ``t^order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    report = Report("exp-factorization")
    lhs = gl_power_series(x, order)
    left, right = _factorized(x, order)
    rhs = left @ right
    k = lhs.first_difference(rhs)
    report.add(f"exp*(tx) = exp(-tR~x) exp(-tRx) to t^{order}", k is None, "" if k is None else f"first differing order {k}")
    return report


def verify_derivative_identity(x: np.ndarray, n: int, order: int = 8) -> Report:
    """``d^n/dt^n [exp(-tR~x) exp(-tRx)] = exp(-tR~x) x^{*n} exp(-tRx)`` to ``t^(order-n)``."""
    if not 0 <= n <= order:
        raise ValueError("need 0 <= n <= order")
    report = Report("derivative-identity")
    left, right = _factorized(x, order)
    lhs = (left @ right).derivative(n)
    m = order - n
    mid = MatrixSeries.monomial(_gl_power(x, n), 0, m)
    rhs = left.truncate(m) @ mid @ right.truncate(m)
    k = lhs.first_difference(rhs)
    report.add(f"n={n}", k is None, "" if k is None else f"first differing order {k}")
    return report


# symbolic / numeric boundary --------------------------------------------------


def _tree_value(tree: Tree, u: MatrixSeries, weight, cache: dict) -> MatrixSeries:
    # tree read as a magma word: leftmost branch |> the rest
    hit = cache.get(tree)
    if hit is not None:
        return hit
    if not tree.children:
        val = u
    else:
        left = _tree_value(tree.children[0], u, weight, cache)
        rest = _tree_value(Tree(tree.label, tree.children[1:]), u, weight, cache)
        val = rb_operator(left, weight).bracket(rest)
    cache[tree] = val
    return val


def evaluate_series(s: Series, u: MatrixSeries, weight=1) -> MatrixSeries:
    """Evaluate a primitive forest series at generator value ``u``.

    Laurent coefficients are specialized at ``weight``.

    Trees are read as elements of the free post-Lie algebra: each tree is
    first pulled back through ``psi`` to a combination of left Butcher
    products, which evaluate recursively as ``x |> y = [R(x), y]``.  The
    bracket of the free algebra goes to ``[x, y]_w = w [x, y]``; since
    ``x -> w x`` carries that bracket to the matrix commutator, a forest
    ``t1...tk`` evaluates as ``w^(k-1)`` times the matrix product.
    """
    w = Fraction(weight)
    n, order = u.dim, u.order
    magma_cache: dict = {}
    tree_cache: dict = {}

    def tree_val(t: Tree) -> MatrixSeries:
        hit = tree_cache.get(t)
        if hit is None:
            hit = MatrixSeries.zero(n, order)
            for word, c in psi_inverse(t).items():
                hit = hit + _tree_value(word, u, w, magma_cache) * c
            tree_cache[t] = hit
        return hit

    total = MatrixSeries.zero(n, order)
    for forest, c in s.items():
        val = MatrixSeries.one(n, order)
        for t in forest:
            val = val @ tree_val(t)
        total = total + val * (specialize(c, w) * w ** (len(forest) - 1))
    return total


def _log1p_t(a: np.ndarray, order: int) -> MatrixSeries:
    """``log(1 + t a)``."""
    n = a.shape[0]
    out = [zeros(n)]
    p = identity(n)
    for k in range(1, order + 1):
        p = p.dot(a)
        out.append(p * Fraction((-1) ** (k + 1), k))
    return MatrixSeries(out)


def _chi_one(order: int):
    from .rblift import bch_recursion

    return bch_recursion(order, Fraction(1))


def verify_spitzer(a: np.ndarray, order: int = 6) -> Report:
    """Fixed point ``X = 1 + t R(a X)`` against ``exp(R(chi_1(log(1 + t a))))``.

    ``chi_1`` is the symbolic weight-1 BCH-recursion, evaluated in the model.
    Also checks ``exp(R(chi_1(t a))) exp(R~(chi_1(t a))) = exp(-t a)``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    n = a.shape[0]
    report = Report("spitzer")
    # fixed point iteration: each pass fixes one more order of t
    fixed = MatrixSeries.one(n, order)
    am = MatrixSeries.monomial(a, 0, order)
    for _ in range(order):
        fixed = MatrixSeries.one(n, order) + rb_operator(am @ fixed).shift(1)
    chi = _chi_one(order).total()
    u = _log1p_t(a, order)
    closed = rb_operator(evaluate_series(chi, u)).exp()
    k = fixed.first_difference(closed)
    report.add(f"X = 1 + tR(aX) vs closed form to t^{order}", k is None, "" if k is None else f"first differing order {k}")
    report.add("t^1 coefficient is R(a)", np.array_equal(fixed[1], rb_operator(a)))
    report.add("order-two identity", order_two_identity_holds(a))
    fac = verify_factorization(a, order, chi=chi)
    for label, ok, detail in fac.checks:
        report.add(label, ok, detail)
    return report


def verify_factorization(a: np.ndarray, order: int = 6, chi: Series | None = None) -> Report:
    """``exp(R(chi_1(x))) exp(R~(chi_1(x))) = exp(-x)`` for ``x = t a``."""
    report = Report("factorization")
    n = a.shape[0]
    chi = _chi_one(order).total() if chi is None else chi
    x = MatrixSeries.monomial(a, 1, order)
    c = evaluate_series(chi, x)
    lhs = rb_operator(c).exp() @ rb_tilde(c).exp()
    rhs = (-x).exp()
    k = lhs.first_difference(rhs)
    report.add(f"exp(R(chi)) exp(R~(chi)) = exp(-ta) to t^{order}", k is None, "" if k is None else f"first differing order {k}")
    return report


def bch_recursion_direct(a: np.ndarray, order: int, weight=1) -> MatrixSeries:
    """Solve ``chi = x + (1/w) BCH~(R(chi), R~(chi))`` for ``x = t a`` directly.

    BCH is taken as ``log(exp(A) exp(B)) - A - B`` with matrix series, so
    this route shares no code with the bracket-level recursion.
    """
    w = Fraction(weight)
    x = MatrixSeries.monomial(a, 1, order)
    chi = x
    for _ in range(order):
        A = rb_operator(chi, w)
        B = rb_tilde(chi, w)
        bch = (A.exp() @ B.exp()).log() - A - B
        chi = x + bch * (1 / w)
    return chi
