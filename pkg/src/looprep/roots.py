"""Simple Lie algebra combinatorics for types A through G.

Weights are integer tuples in the fundamental-weight basis (coordinate i is
the value at the coroot h_i); positive roots are integer tuples in the
simple-root basis.  Root lengths are normalized so short simple roots have
d = 1, which makes the dual coefficients of every positive root integral.
"""

from __future__ import annotations

from fractions import Fraction
from threading import Lock

from .errors import NotARoot, NotDominant, NotSameClass, SearchExhausted, UnknownType
from .exact import frac_mat_inverse, smith_normal_form

_E_EDGES = {
    6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
    8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
}


def _cartan_matrix(family: str, rank: int):
    """Cartan matrix with entry [i][j] = alpha_j(h_i), Bourbaki numbering."""
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2

    def chain(upto):
        for i in range(upto - 1):
            c[i][i + 1] = c[i + 1][i] = -1

    if family == "A":
        chain(rank)
    elif family == "B":
        if rank < 2:
            raise UnknownType("B requires rank >= 2")
        chain(rank)
        c[rank - 1][rank - 2] = -2  # alpha_{n} is short
    elif family == "C":
        if rank < 2:
            raise UnknownType("C requires rank >= 2")
        chain(rank)
        c[rank - 2][rank - 1] = -2  # alpha_{n} is long
    elif family == "D":
        if rank < 3:
            raise UnknownType("D requires rank >= 3")
        chain(rank - 1)
        c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1
        c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0
    elif family == "E":
        if rank not in _E_EDGES:
            raise UnknownType("E requires rank 6, 7, or 8")
        for i, j in _E_EDGES[rank]:
            c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    elif family == "F":
        if rank != 4:
            raise UnknownType("F requires rank 4")
        chain(4)
        c[2][1] = -2  # alpha_3, alpha_4 short
    elif family == "G":
        if rank != 2:
            raise UnknownType("G requires rank 2")
        c[0][1] = -3  # alpha_1 short, alpha_2 long
        c[1][0] = -1
    else:
        raise UnknownType("unknown family %r" % family)
    return tuple(tuple(row) for row in c)


def _root_lengths(cartan):
    """Solve d_i * c[i][j] = d_j * c[j][i] along the diagram, short = 1."""
    rank = len(cartan)
    d = [None] * rank
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(rank):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                pending.append(j)
    if any(x is None for x in d):
        raise UnknownType("Dynkin diagram is not connected")
    low = min(d)
    d = [x / low for x in d]
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


class RootSystem:
    """Cartan data, positive roots, and weight combinatorics for one type."""

    __slots__ = (
        "lie_type", "rank", "cartan", "lengths", "positive_roots",
        "cartan_inv", "snf", "highest_root", "_mult_cache", "_cache_lock",
    )

    def __init__(self, lie_type: str):
        family, rank = _parse_type(lie_type)
        cartan = _cartan_matrix(family, rank)
        object.__setattr__(self, "lie_type", "%s%d" % (family, rank))
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "lengths", _root_lengths(cartan))
        object.__setattr__(self, "positive_roots", self._close_positive_roots())
        object.__setattr__(
            self, "cartan_inv",
            tuple(tuple(r) for r in frac_mat_inverse(cartan)),
        )
        object.__setattr__(self, "snf", smith_normal_form(cartan))
        object.__setattr__(self, "highest_root", self.positive_roots[-1])
        object.__setattr__(self, "_mult_cache", {})
        object.__setattr__(self, "_cache_lock", Lock())

    def __setattr__(self, name, value):
        raise AttributeError("RootSystem is immutable")

    def __repr__(self):
        return "RootSystem(%s)" % self.lie_type

    # -- root generation

    def _pairing(self, root, i):
        """Value of the root (simple-root coords) at the coroot h_i."""
        return sum(self.cartan[i][j] * root[j] for j in range(self.rank))

    def _close_positive_roots(self):
        roots = {tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)}
        frontier = list(roots)
        while frontier:
            root = frontier.pop()
            for i in range(self.rank):
                p = self._pairing(root, i)
                new = list(root)
                new[i] -= p
                new = tuple(new)
                if all(x >= 0 for x in new) and any(new) and new not in roots:
                    roots.add(new)
                    frontier.append(new)
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    # -- coordinate plumbing

    def is_dominant(self, weight) -> bool:
        return all(x >= 0 for x in weight)

    def _check_dominant(self, weight):
        if not self.is_dominant(weight):
            raise NotDominant("weight %r is not dominant" % (weight,))

    def root_to_fund(self, root):
        """Fundamental coordinates of a root-lattice vector."""
        return tuple(self._pairing(root, i) for i in range(self.rank))

    def fund_to_root(self, weight):
        """Simple-root coordinates (Fractions) of a weight."""
        return tuple(
            sum((self.cartan_inv[i][j] * weight[j] for j in range(self.rank)),
                Fraction(0))
            for i in range(self.rank)
        )

    def height(self, weight) -> Fraction:
        """Sum of simple-root coordinates."""
        return sum(self.fund_to_root(weight), Fraction(0))

    def _form(self, weight, other):
        """Killing-normalized pairing (weight, other), both in fundamental coords."""
        root = self.fund_to_root(other)
        return sum(
            (self.lengths[i] * root[i] * weight[i] for i in range(self.rank)),
            Fraction(0),
        )

    def _form_with_root(self, weight, root):
        """(weight, alpha) with alpha in simple-root coordinates."""
        return sum(
            (self.lengths[i] * root[i] * weight[i] for i in range(self.rank)),
            Fraction(0),
        )

    def reflect(self, i: int, weight):
        """Simple reflection s_i on a fundamental-coordinate weight."""
        v = weight[i]
        return tuple(weight[k] - v * self.cartan[k][i] for k in range(self.rank))

    def dominant_representative(self, weight):
        """Walk a weight into the dominant chamber by simple reflections."""
        w = tuple(weight)
        while True:
            i = next((k for k in range(self.rank) if w[k] < 0), None)
            if i is None:
                return w
            w = self.reflect(i, w)

    # -- coroot data

    def coroot_coeffs(self, root):
        """Coefficients of the coroot of a positive root on the simple coroots."""
        root = tuple(root)
        if root not in self.positive_roots:
            raise NotARoot("%r is not a positive root of %s" % (root, self.lie_type))
        norm = self._form_with_root(self.root_to_fund(root), root)  # (alpha, alpha)
        d_alpha = norm / 2
        out = []
        for i in range(self.rank):
            v = Fraction(self.lengths[i]) * root[i] / d_alpha
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    # -- dimensions and multiplicities

    def weyl_dim(self, weight) -> int:
        """Dimension of the irreducible module with the given highest weight."""
        self._check_dominant(weight)
        dim = Fraction(1)
        for root in self.positive_roots:
            num = sum(self.lengths[i] * root[i] * (weight[i] + 1) for i in range(self.rank))
            den = sum(self.lengths[i] * root[i] for i in range(self.rank))
            dim *= Fraction(num, den)
        assert dim.denominator == 1
        return int(dim)

    def _all_weights(self, top):
        """Every weight of the irreducible module, by walking root strings."""
        seen = {top}
        stack = [top]
        while stack:
            mu = stack.pop()
            for i in range(self.rank):
                m = mu[i]
                for k in range(1, m + 1):
                    nu = tuple(mu[j] - k * self.cartan[j][i] for j in range(self.rank))
                    if nu not in seen:
                        seen.add(nu)
                        stack.append(nu)
        return seen

    def weight_mults(self, weight):
        """Full weight-multiplicity map of the irreducible module (Freudenthal).

        Returns a dict from fundamental-coordinate tuples to positive ints.
        """
        weight = tuple(weight)
        self._check_dominant(weight)
        with self._cache_lock:
            cached = self._mult_cache.get(weight)
        if cached is not None:
            return dict(cached)

        all_weights = self._all_weights(weight)
        rho = tuple([1] * self.rank)
        lam_rho = tuple(x + 1 for x in weight)
        top_norm = self._form(lam_rho, lam_rho)
        roots_fund = [self.root_to_fund(r) for r in self.positive_roots]

        def depth(mu):
            d = self.height(tuple(a - b for a, b in zip(weight, mu)))
            assert d.denominator == 1
            return int(d)

        dominants = sorted(
            (mu for mu in all_weights if self.is_dominant(mu)),
            key=depth,
        )
        mults = {}
        for mu in dominants:
            if mu == weight:
                mults[mu] = 1
                continue
            acc = Fraction(0)
            for root, root_fund in zip(self.positive_roots, roots_fund):
                k = 1
                while True:
                    nu = tuple(mu[i] + k * root_fund[i] for i in range(self.rank))
                    if nu not in all_weights:
                        break
                    acc += mults[self.dominant_representative(nu)] * \
                        self._form_with_root(nu, root)
                    k += 1
            mu_rho = tuple(x + 1 for x in mu)
            denom = top_norm - self._form(mu_rho, mu_rho)
            val = 2 * acc / denom
            assert val.denominator == 1 and val > 0
            mults[mu] = int(val)

        full = {mu: mults[self.dominant_representative(mu)] for mu in all_weights}
        with self._cache_lock:
            self._mult_cache[weight] = dict(full)
        return full

    # -- tensor products

    def tensor_decompose(self, left, right):
        """Decomposition of V(left) (x) V(right) into highest weights.

        Multiplies the two multiplicity maps and peels the maximal dominant
        weight (by height, ties broken lexicographically) until exhausted.
        Returns a list of (dominant weight, multiplicity) in peel order.
        """
        self._check_dominant(left)
        self._check_dominant(right)
        product = {}
        right_mults = self.weight_mults(right)
        for mu, m in self.weight_mults(left).items():
            for nu, n in right_mults.items():
                key = tuple(a + b for a, b in zip(mu, nu))
                product[key] = product.get(key, 0) + m * n
        parts = []
        while product:
            top = max(product, key=lambda w: (self.height(w), w))
            mult = product[top]
            assert self.is_dominant(top) and mult > 0
            parts.append((top, mult))
            for nu, n in self.weight_mults(top).items():
                remaining = product.get(nu, 0) - mult * n
                if remaining:
                    product[nu] = remaining
                else:
                    product.pop(nu, None)
        return parts

    # -- weight lattice modulo root lattice

    def pq_class(self, weight):
        """Image of a weight in P/Q as residues modulo the invariant factors."""
        diag = self.snf.diagonal
        left = self.snf.left
        return tuple(
            sum(left[i][j] * weight[j] for j in range(self.rank)) % diag[i]
            if diag[i] else 0
            for i in range(self.rank)
        )

    def w0_negate(self, weight):
        """The dominant weight -w0(weight) for dominant input."""
        self._check_dominant(weight)
        return self.dominant_representative(tuple(-x for x in weight))

    # -- linkage

    def directly_linked(self, lam, mu) -> bool:
        """Whether V(mu) occurs inside (adjoint module) (x) V(lam)."""
        self._check_dominant(lam)
        self._check_dominant(mu)
        adjoint = self.root_to_fund(self.highest_root)
        return tuple(mu) in {w for w, _ in self.tensor_decompose(adjoint, lam)}

    def link_neighbors(self, weight):
        """Dominant weights directly linked to the given one, sorted."""
        adjoint = self.root_to_fund(self.highest_root)
        return sorted(w for w, _ in self.tensor_decompose(adjoint, weight))

    def link_chain(self, lam, mu, max_steps: int = 8):
        """Chain mu = w_0, ..., w_m = lam of consecutively linked dominants.

        Breadth-first search bounded by max_steps levels and by the height
        bound max(ht(lam), ht(mu)) + ht(highest root) * max_steps.  Raises
        NotSameClass when no chain can exist and SearchExhausted when the
        bounds are hit; the latter is not a claim of non-existence.
        """
        lam, mu = tuple(lam), tuple(mu)
        self._check_dominant(lam)
        self._check_dominant(mu)
        if self.pq_class(lam) != self.pq_class(mu):
            raise NotSameClass(
                "weights %r and %r differ in P/Q; no chain exists" % (lam, mu)
            )
        if lam == mu:
            return [mu]
        bound = max(self.height(lam), self.height(mu)) + \
            self.height(self.root_to_fund(self.highest_root)) * max_steps
        parent = {mu: None}
        frontier = [mu]
        for _ in range(max_steps):
            next_frontier = []
            for w in frontier:
                for nb in self.link_neighbors(w):
                    if nb in parent or self.height(nb) > bound:
                        continue
                    parent[nb] = w
                    if nb == lam:
                        chain = [nb]
                        while parent[chain[-1]] is not None:
                            chain.append(parent[chain[-1]])
                        return chain[::-1]
                    next_frontier.append(nb)
            frontier = next_frontier
            if not frontier:
                break
        raise SearchExhausted(
            "no chain from %r to %r within %d steps" % (mu, lam, max_steps)
        )


def _parse_type(lie_type: str):
    s = str(lie_type).strip().upper().replace("_", "")
    if len(s) < 2 or s[0] not in "ABCDEFG":
        raise UnknownType("bad Lie type %r" % lie_type)
    try:
        rank = int(s[1:])
    except ValueError:
        raise UnknownType("bad Lie type %r" % lie_type)
    if rank < 1:
        raise UnknownType("rank must be positive")
    if s[0] in "BCDEFG" and rank == 1:
        raise UnknownType("rank 1 only exists in type A")
    return s[0], rank


_SYSTEMS = {}
_SYSTEMS_LOCK = Lock()


def root_system(lie_type: str) -> RootSystem:
    """Shared, cached root system for a type string like "A2" or "G2"."""
    family, rank = _parse_type(lie_type)
    key = "%s%d" % (family, rank)
    with _SYSTEMS_LOCK:
        rs = _SYSTEMS.get(key)
        if rs is None:
            rs = RootSystem(key)
            _SYSTEMS[key] = rs
    return rs
