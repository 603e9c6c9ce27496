"""Closed forms and recurrences for the three families' Wiener indices.

Naming scheme: wiener_* evaluates W of the order-k tree; d_* evaluates the
distance sum from a distinguished vertex.  Each quantity comes in several
independently computable flavors (closed form, recurrence iteration,
convolution sum) precisely so tests can play them against one another and
against the brute-force oracles in treewiener.oracle.

Everything iterates upward from base cases with rolling accumulators; no
recursion, O(k) big-integer operations per call (the convolution forms are
O(k^2) and exist only as cross-check identities).

The binary Fibonacci Wiener recurrence is implemented in a corrected form:
the textbook-style printed recurrence

    W(k) = W(k-1) + W(k-2) + F(k+1)*D(k-2) + (F(k)-1)*D(k-1) + F(k+1)*(F(k)-1)

undercounts, because the left operand of the final composition is not the
bare left subtree but the left subtree PLUS the new root hanging above it.
Folding that extra pendant vertex into the left operand's Wiener index and
anchored distance sum (see wiener_binfib) makes the recurrence agree with
direct enumeration at every order; the literal printed form is retained as
wiener_binfib_literal to document the divergence (first at k = 3: 5 vs 10).
"""

from treewiener.errors import InvalidOrderError
from treewiener.exact import exact_div, fib, fib_table, pow2


# ---------------------------------------------------------------------------
# Binomial trees
# ---------------------------------------------------------------------------

def d_binomial_cross(k: int) -> int:
    """Distance sum (k + 1) * 2^(k-2) across the two halves of the order-k
    binomial tree: from one half's root to every vertex of the other half.

    Multiply first, divide last, so k = 1 never forms a fractional term.
    """
    if k < 1:
        raise InvalidOrderError(f"d_binomial_cross needs k >= 1, got {k}")
    return exact_div((k + 1) * pow2(k), 4)


def d_binomial_within(k: int) -> int:
    """Distance sum (k - 1) * 2^(k-2) within one half: from the root of an
    order-(k-1) binomial tree to its own 2^(k-1) vertices.  Equals
    d_binomial_cross(k) - 2^(k-1), one edge saved per target vertex."""
    if k < 1:
        raise InvalidOrderError(f"d_binomial_within needs k >= 1, got {k}")
    return exact_div((k - 1) * pow2(k), 4)


def wiener_binomial(k: int) -> int:
    """W of the order-k binomial tree: (k - 1) * 2^(2k-1) + 2^(k-1).

    The two terms are half-integral at k = 0 and cancel; the single-vertex
    case is returned directly instead.
    """
    if k < 0:
        raise InvalidOrderError(f"binomial order must be >= 0, got {k}")
    if k == 0:
        return 0
    return (k - 1) * pow2(2 * k - 1) + pow2(k - 1)


def wiener_binomial_recurrence(k: int) -> int:
    """Same value by iterating W(i) = 2 * W(i-1) + i * 2^(2i-2) from W(0) = 0."""
    if k < 0:
        raise InvalidOrderError(f"binomial order must be >= 0, got {k}")
    w = 0
    for i in range(1, k + 1):
        w = 2 * w + i * pow2(2 * i - 2)
    return w


# ---------------------------------------------------------------------------
# Fibonacci trees
# ---------------------------------------------------------------------------

def d_fib(k: int) -> int:
    """Root distance sum of the order-k Fibonacci tree, closed form
    (k * F(k+2) + (k+2) * F(k)) / 5.  The division is always exact."""
    if k < 0:
        raise InvalidOrderError(f"d_fib needs k >= 0, got {k}")
    return exact_div(k * fib(k + 2) + (k + 2) * fib(k), 5)


def d_fib_recurrence(k: int) -> int:
    """Same value by iterating D(i) = D(i-1) + D(i-2) + F(i) from D(0) = 0,
    D(1) = 1: the rightmost-attached order-(i-2) subtree sits one edge lower,
    adding its F(i) vertices on top of both smaller distance sums."""
    if k < 0:
        raise InvalidOrderError(f"d_fib needs k >= 0, got {k}")
    if k == 0:
        return 0
    f = fib_table(k)
    d_prev2, d_prev = 0, 1
    for i in range(2, k + 1):
        d_prev2, d_prev = d_prev, d_prev + d_prev2 + f[i]
    return d_prev


def d_fib_convolution(k: int) -> int:
    """Same value as the Fibonacci self-convolution sum of F(j) * F(k-j+1)
    for j = 1..k+1 (cross-check identity only; O(k^2))."""
    if k < 0:
        raise InvalidOrderError(f"d_fib needs k >= 0, got {k}")
    f = fib_table(k + 1)
    return sum(f[j] * f[k - j + 1] for j in range(1, k + 2))


def _wiener_fib_counted(k: int) -> tuple:
    """Shared evaluator for wiener_fib: returns (value, big-int op count).

    One pass: build the Fibonacci table up to F(k+1) by additions, then roll
    two Wiener accumulators upward, recomputing both distance sums per step
    from the closed form.  The op count tallies every big-integer add,
    multiply, and exact division performed, and is what the O(k)-arithmetic
    cost contract is asserted against.
    """
    if k < -1:
        raise InvalidOrderError(f"fibonacci order must be >= -1, got {k}")
    if k <= 0:
        return 0, 0
    if k == 1:
        return 1, 0
    if k == 2:
        return 4, 0
    ops = k  # fib_table(k + 1) performs k additions
    f = fib_table(k + 1)
    w_prev2, w_prev = 1, 4  # W(1), W(2)
    for i in range(3, k + 1):
        d1 = exact_div((i - 1) * f[i + 1] + (i + 1) * f[i - 1], 5)  # D(i-1)
        d2 = exact_div((i - 2) * f[i] + i * f[i - 2], 5)            # D(i-2)
        w = w_prev + w_prev2 + f[i + 1] * d2 + f[i] * d1 + f[i + 1] * f[i]
        ops += 15  # 2 * (mul, mul, add, div) for d1, d2; 3 muls + 4 adds for w
        w_prev2, w_prev = w_prev, w
    return w_prev, ops


def wiener_fib(k: int) -> int:
    """W of the order-k Fibonacci tree by iterating

        W(i) = W(i-1) + W(i-2) + F(i+1)*D(i-2) + F(i)*D(i-1) + F(i+1)*F(i)

    from W(1) = 1, W(2) = 4, with D evaluated in closed form each step."""
    return _wiener_fib_counted(k)[0]


def wiener_fib_op_count(k: int) -> int:
    """Number of big-integer operations wiener_fib(k) performs; grows
    linearly in k, i.e. logarithmically in the tree's F(k+2) vertex count."""
    return _wiener_fib_counted(k)[1]


# ---------------------------------------------------------------------------
# Binary Fibonacci trees
# ---------------------------------------------------------------------------

def d_binfib(k: int) -> int:
    """Root distance sum of the order-k binary Fibonacci tree, closed form
    ((k-3) * F(k+3) + 2 * (k-2) * F(k+2)) / 5 + 2 (division always exact)."""
    if k < 1:
        raise InvalidOrderError(f"d_binfib needs k >= 1, got {k}")
    return exact_div((k - 3) * fib(k + 3) + 2 * (k - 2) * fib(k + 2), 5) + 2


def d_binfib_recurrence(k: int) -> int:
    """Same value by iterating D(i) = D(i-1) + D(i-2) + F(i+2) - 2 from
    D(1) = 0, D(2) = 1: both subtrees hang one edge below the fresh root,
    which adds one per vertex, F(i+2) - 2 in total."""
    if k < 1:
        raise InvalidOrderError(f"d_binfib needs k >= 1, got {k}")
    if k == 1:
        return 0
    f = fib_table(k + 2)
    d_prev2, d_prev = 0, 1
    for i in range(3, k + 1):
        d_prev2, d_prev = d_prev, d_prev + d_prev2 + f[i + 2] - 2
    return d_prev


def d_binfib_convolution(k: int) -> int:
    """Same value as the sum of (F(j+2) - 2) * F(k-j+1) for j = 2..k+1
    (cross-check identity only; O(k^2))."""
    if k < 1:
        raise InvalidOrderError(f"d_binfib needs k >= 1, got {k}")
    f = fib_table(k + 3)
    return sum((f[j + 2] - 2) * f[k - j + 1] for j in range(2, k + 2))


def wiener_binfib(k: int) -> int:
    """W of the order-k binary Fibonacci tree, by the corrected recurrence.

    Per step the order-i tree is assembled in two compositions: first the
    fresh root r is joined to the left subtree (order i-1), giving

        A   = W(i-1) + D(i-1) + F(i+1) - 1     (Wiener index of root+left)
        D_A = D(i-1) + F(i+1) - 1              (distance sum from r)

    and then that augmented tree is joined to the right subtree (order i-2):

        W(i) = A + W(i-2) + F(i+1)*D(i-2) + (F(i)-1)*D_A + F(i+1)*(F(i)-1).

    At i = 2 the right subtree is empty and the step degenerates to the
    pendant-root attachment alone, giving the base W(2) = 1.
    """
    if k < 1:
        raise InvalidOrderError(f"binary-fibonacci order must be >= 1, got {k}")
    if k == 1:
        return 0
    if k == 2:
        return 1
    f = fib_table(k + 1)
    w_prev2, w_prev = 0, 1  # W(1), W(2)
    for i in range(3, k + 1):
        d1 = d_binfib(i - 1)
        d2 = d_binfib(i - 2)
        a = w_prev + d1 + f[i + 1] - 1
        d_a = d1 + f[i + 1] - 1
        w = a + w_prev2 + f[i + 1] * d2 + (f[i] - 1) * d_a + f[i + 1] * (f[i] - 1)
        w_prev2, w_prev = w_prev, w
    return w_prev


def wiener_binfib_literal(k: int) -> int:
    """The printed recurrence verbatim, iterated from W(1) = 0, W(2) = 1.

    Kept only to document that it disagrees with direct enumeration (5
    instead of 10 already at k = 3); never use it for real values.
    """
    if k < 3:
        raise InvalidOrderError(f"the literal recurrence starts at k = 3, got {k}")
    f = fib_table(k + 1)
    w_prev2, w_prev = 0, 1  # W(1), W(2)
    for i in range(3, k + 1):
        d1 = d_binfib(i - 1)
        d2 = d_binfib(i - 2)
        w = w_prev + w_prev2 + f[i + 1] * d2 + (f[i] - 1) * d1 + f[i + 1] * (f[i] - 1)
        w_prev2, w_prev = w_prev, w
    return w_prev
