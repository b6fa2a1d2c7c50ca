"""Projective-geometry side of the t = 0 case.

``r_upper_bound`` is the quadratic bound on how large a product subspace a
general codimension-(a+1) linear section of the Segre variety must contain;
``stability_bound_check`` turns it into the 0+-stability criterion. The
oracle at the bottom samples random section spaces over a prime field and
measures delta_q directly, as the minimal rank of the coefficient matrix of
M*N over all q-dimensional column spaces N.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from .exact import DomainError, floor_half_sum_sqrt

DEFAULT_PRIME = 101
PRIME_ENV = "COHSYS_PRIME"
EXHAUSTIVE_LIMIT = 10**6
MAX_N = 8
MAX_A = 6


@dataclass(frozen=True)
class SegreParams:
    n: int
    a: int
    k: int
    q: int

    def __post_init__(self):
        if self.a < 0:
            raise DomainError(f"a must be nonnegative, got {self.a}")
        if not 1 <= self.q <= self.k < self.n:
            raise DomainError(f"need 1 <= q <= k < n, got q={self.q}, k={self.k}, n={self.n}")


@dataclass(frozen=True)
class FieldSample:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 200

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if not is_prime(self.prime):
            raise DomainError(f"field order {self.prime} is not prime")


def default_prime() -> int:
    return int(os.environ.get(PRIME_ENV, DEFAULT_PRIME))


def is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


def r_upper_bound(p: SegreParams) -> int:
    n, a, k, q = p.n, p.a, p.k, p.q
    if a >= k * n - 1:
        return 0
    if q == k and k * a >= n - k:
        return 0
    A = n - q * (a + 1)
    return floor_half_sum_sqrt(A, A * A + 4 * q * (k - q))


def zero_plus_exists(n: int, a: int, k: int) -> bool:
    """Whether type (n, na, k) admits a 0+-stable system: ka >= n - k + (k^2-1)/n."""
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got k={k}, n={n}")
    return k * a * n >= n * n - k * n + k * k - 1


@dataclass(frozen=True)
class BoundWitness:
    q: int
    bound: int
    threshold: Fraction  # n - qn/k
    ok: bool


def stability_bound_check(n: int, a: int, k: int) -> Tuple[bool, List[BoundWitness]]:
    """Check R(n,a,k,q) < n - qn/k for 1 <= q < k, and R(n,a,k,k) = 0."""
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got k={k}, n={n}")
    witnesses = []
    for q in range(1, k + 1):
        bound = r_upper_bound(SegreParams(n, a, k, q))
        threshold = Fraction(n * (k - q), k)
        ok = bound == 0 if q == k else bound < threshold
        witnesses.append(BoundWitness(q, bound, threshold, ok))
    return all(w.ok for w in witnesses), witnesses


# --- finite-field oracle -------------------------------------------------


def gaussian_binomial(k: int, q: int, p: int) -> int:
    """Number of q-dimensional subspaces of F_p^k."""
    num = den = 1
    for i in range(q):
        num *= p ** (k - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@lru_cache(maxsize=32)
def grassmannian_reps(k: int, q: int, p: int) -> np.ndarray:
    """Reduced column-echelon k x q matrices, one per q-dim subspace of F_p^k."""
    reps = []
    for pivots in itertools.combinations(range(k), q):
        # column c has its leading 1 in row pivots[c]; entries below it in
        # non-pivot rows are free, everything else is forced to 0
        free = [(r, c) for c in range(q) for r in range(pivots[c] + 1, k) if r not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            N = np.zeros((k, q), dtype=np.int64)
            for c, r in enumerate(pivots):
                N[r, c] = 1
            for (r, c), v in zip(free, values):
                N[r, c] = v
            reps.append(N)
    return np.stack(reps)


@lru_cache(maxsize=32)
def _inverses(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    return inv


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a stack of matrices with shape (B, rows, cols)."""
    A = np.array(mats, dtype=np.int64) % p
    B, rows, cols = A.shape
    inv = _inverses(p)
    rank = np.zeros(B, dtype=np.int64)
    row_ids = np.arange(rows)
    for col in range(cols):
        cand = (A[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        r = rank[b]
        pivot_row = A[b, piv].copy()
        A[b, piv] = A[b, r]
        pivot_row = (pivot_row * inv[pivot_row[:, col]][:, None]) % p
        A[b, r] = pivot_row
        below = row_ids[None, :] > r[:, None]
        factors = np.where(below, A[b, :, col], 0)
        A[b] = (A[b] - factors[:, :, None] * pivot_row[:, None, :]) % p
        rank[b] += 1
    return rank


def coefficient_matrices(M: np.ndarray, Ns: np.ndarray, p: int) -> np.ndarray:
    """Coefficients of M*N for each N: shape (B, n, q*(a+1)).

    M has shape (n, k, a+1): entry [i, j] holds the coefficients of the
    degree-a form f_ij.
    """
    prod = np.einsum("ijs,bjc->bics", M, Ns) % p
    B, n, q, s = prod.shape
    return prod.reshape(B, n, q * s)


def delta_q_of(M: np.ndarray, Ns: np.ndarray, p: int) -> int:
    """n minus the largest left kernel of M*N, i.e. the least rank over all N."""
    return int(batched_rank_mod_p(coefficient_matrices(M, Ns, p), p).min())


def random_forms(rng: np.random.Generator, n: int, k: int, a: int, p: int) -> np.ndarray:
    return rng.integers(0, p, size=(n, k, a + 1), dtype=np.int64)


def _random_full_rank(rng: np.random.Generator, k: int, q: int, p: int, count: int) -> np.ndarray:
    out = []
    while len(out) < count:
        N = rng.integers(0, p, size=(count, k, q), dtype=np.int64)
        ok = batched_rank_mod_p(N, p) == q
        out.extend(N[ok])
    return np.stack(out[:count])


@dataclass(frozen=True)
class DeltaObservation:
    params: SegreParams
    field: FieldSample
    mode: str  # "exhaustive" or "sampled"
    values: Tuple[int, ...]

    @property
    def histogram(self) -> dict:
        hist: dict = {}
        for v in self.values:
            hist[v] = hist.get(v, 0) + 1
        return dict(sorted(hist.items()))


def sample_delta_q(p: SegreParams, s: FieldSample, samples: int = 4096) -> DeltaObservation:
    """Observed delta_q for s.trials random section spaces over F_prime.

    Exhaustive mode minimises over every q-dim column space of F_prime^k;
    when there are more than ``EXHAUSTIVE_LIMIT`` of them, ``samples``
    random full-rank N per trial are used instead and the observation is
    only an upper estimate of delta_q.
    """
    if p.n > MAX_N or p.a > MAX_A:
        raise DomainError(f"oracle limited to n <= {MAX_N}, a <= {MAX_A}")
    count = gaussian_binomial(p.k, p.q, s.prime)
    mode = "exhaustive" if count <= EXHAUSTIVE_LIMIT else "sampled"
    reps = grassmannian_reps(p.k, p.q, s.prime) if mode == "exhaustive" else None
    values = []
    for trial in range(s.trials):
        rng = np.random.default_rng([s.seed, trial])
        M = random_forms(rng, p.n, p.k, p.a, s.prime)
        Ns = reps if reps is not None else _random_full_rank(rng, p.k, p.q, s.prime, samples)
        values.append(delta_q_of(M, Ns, s.prime))
    return DeltaObservation(p, s, mode, tuple(values))


@dataclass(frozen=True)
class OracleCheck:
    bound: int
    threshold: int  # n - bound
    pass_fraction: Fraction
    passed: bool


def one_sided_check(obs: DeltaObservation, budget: Fraction = Fraction(1, 100)) -> OracleCheck:
    """delta_q >= n - r_upper_bound in all but a ``budget`` fraction of trials."""
    bound = r_upper_bound(obs.params)
    threshold = obs.params.n - bound
    good = sum(1 for v in obs.values if v >= threshold)
    frac = Fraction(good, len(obs.values))
    return OracleCheck(bound, threshold, frac, frac >= 1 - budget)


def segre_grid(n: int, a: int, k: int, qs: Sequence[int] = ()) -> List[SegreParams]:
    return [SegreParams(n, a, k, q) for q in (qs or range(1, k + 1))]
