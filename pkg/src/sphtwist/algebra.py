"""The graded endomorphism algebra of an A_n-chain of N-spherical objects.

The algebra is a zigzag-type path algebra on the A_n quiver with vertices
1..n.  Its basis consists of idempotents e_i (degree 0), forward arrows
a_{i,i+1} (degree d_i), backward arrows a_{i+1,i} (degree N - d_i) and loops
l_i (degree N).  Relations: two-step paths that do not return to their start
vanish, both round trips at a vertex equal the loop there, and loops kill
everything except the idempotents.

Composition is read left to right: ``x * y`` means "first x, then y", so a
path i -> j composed with j -> k lands in ``e_i A e_k``.  Projectives are the
column modules P_i = A e_i and Hom(P_i, P_j) = e_i A e_j acts by right
multiplication, which makes differentials of complexes literal matrices over
the algebra.
"""

from dataclasses import dataclass, field

from .fields import Field


@dataclass(frozen=True)
class ChainParams:
    """Shape of the chain: length n, spherical dimension N, edge degrees.

    ``edge_degrees[i-1]`` is the internal degree of the forward arrow
    i -> i+1; the backward arrow gets the complementary degree N - d_i.
    A chain of n objects carries n twist generators (braid group B_{n+1}).
    """

    n: int
    N: int
    edge_degrees: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one chain object, got n=%r" % (self.n,))
        if self.N < 2:
            raise ValueError("spherical dimension must be >= 2, got N=%r" % (self.N,))
        degs = self.edge_degrees
        if degs is None:
            degs = tuple(1 for _ in range(self.n - 1))
        else:
            degs = tuple(degs)
        if len(degs) != self.n - 1:
            raise ValueError(
                "expected %d edge degrees, got %d" % (self.n - 1, len(degs))
            )
        for d in degs:
            if not 1 <= d <= self.N - 1:
                raise ValueError("edge degree %r outside [1, %d]" % (d, self.N - 1))
        object.__setattr__(self, "edge_degrees", degs)


class AlgebraElement:
    """A linear combination of basis paths, with exact coefficients."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    self.coeffs[k] = c

    def is_zero(self):
        return not self.coeffs

    def coeff(self, key):
        return self.coeffs.get(key, self.algebra.field.zero)

    def degree(self):
        """Internal degree if homogeneous and nonzero, else None."""
        degs = {self.algebra.deg[k] for k in self.coeffs}
        if len(degs) == 1:
            return degs.pop()
        return None

    def _check_same(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebra instances")

    def __add__(self, other):
        self._check_same(other)
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = coeffs.get(k, self.algebra.field.zero) + c
            if s:
                coeffs[k] = s
            else:
                coeffs.pop(k, None)
        return AlgebraElement(self.algebra, coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            table = self.algebra.table
            field = self.algebra.field
            coeffs = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    k = table.get((k1, k2))
                    if k is None:
                        continue
                    s = coeffs.get(k, field.zero) + c1 * c2
                    if s:
                        coeffs[k] = s
                    else:
                        coeffs.pop(k, None)
            return AlgebraElement(self.algebra, coeffs)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.algebra.field.of(c)
        if not c:
            return AlgebraElement(self.algebra)
        return AlgebraElement(self.algebra, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.algebra.params == other.algebra.params
            and self.algebra.field == other.algebra.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, key=self.algebra.basis.index):
            parts.append("%s*%s" % (self.coeffs[k], key_str(k)))
        return " + ".join(parts)


def key_str(key):
    """Readable name of a basis path: e1, a12, l3 (colon form for n >= 10)."""
    kind = key[0]
    if kind == "a":
        i, j = key[1], key[2]
        if i < 10 and j < 10:
            return "a%d%d" % (i, j)
        return "a%d:%d" % (i, j)
    return "%s%d" % (kind, key[1])


class ZigzagAlgebra:
    """The chain algebra with its basis, grading and multiplication table.

    Immutable after construction; safe to share across threads.
    """

    def __init__(self, params, char=None):
        if not isinstance(params, ChainParams):
            params = ChainParams(*params)
        self.params = params
        self.field = Field(char)
        n, N = params.n, params.N

        basis = [("e", i) for i in range(1, n + 1)]
        for i in range(1, n):
            basis.append(("a", i, i + 1))
            basis.append(("a", i + 1, i))
        basis.extend(("l", i) for i in range(1, n + 1))
        self.basis = basis

        deg = {}
        src = {}
        tgt = {}
        for key in basis:
            kind = key[0]
            if kind == "e":
                deg[key] = 0
                src[key] = tgt[key] = key[1]
            elif kind == "l":
                deg[key] = N
                src[key] = tgt[key] = key[1]
            else:
                i, j = key[1], key[2]
                d = params.edge_degrees[min(i, j) - 1]
                deg[key] = d if j == i + 1 else N - d
                src[key] = i
                tgt[key] = j
        self.deg = deg
        self.src = src
        self.tgt = tgt

        # Products of basis paths are single basis paths or zero.
        table = {}
        for x in basis:
            for y in basis:
                if tgt[x] != src[y]:
                    continue
                kx, ky = x[0], y[0]
                if kx == "e":
                    table[(x, y)] = y
                elif ky == "e":
                    table[(x, y)] = x
                elif kx == "a" and ky == "a":
                    if y[2] == x[1]:  # round trip i -> j -> i
                        table[(x, y)] = ("l", x[1])
                    # straight-through paths vanish
                # loops annihilate arrows and loops
        self.table = table

        self._hom_basis = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    keys = [("e", i), ("l", i)]
                elif abs(i - j) == 1:
                    keys = [("a", i, j)]
                else:
                    keys = []
                self._hom_basis[(i, j)] = tuple(keys)

    @property
    def n(self):
        return self.params.n

    @property
    def N(self):
        return self.params.N

    def dimension(self):
        return len(self.basis)

    # ------------------------------------------------------------------
    # element constructors

    def zero(self):
        return AlgebraElement(self)

    def from_key(self, key, c=1):
        if key not in self.deg:
            raise ValueError("unknown basis path %r" % (key,))
        return AlgebraElement(self, {key: self.field.of(c)})

    def e(self, i):
        return self.from_key(("e", i))

    def arrow(self, i, j):
        return self.from_key(("a", i, j))

    def loop(self, i):
        return self.from_key(("l", i))

    # ------------------------------------------------------------------
    # structure queries

    def check_vertex(self, i):
        if not 1 <= i <= self.params.n:
            raise ValueError("vertex %r out of range 1..%d" % (i, self.params.n))

    def hom_basis(self, i, j):
        """Basis paths of e_i A e_j (maps P_i -> P_j)."""
        self.check_vertex(i)
        self.check_vertex(j)
        return self._hom_basis[(i, j)]

    def hom_space(self, i, j):
        """Graded dimension table {internal degree: dim} of e_i A e_j."""
        out = {}
        for key in self.hom_basis(i, j):
            d = self.deg[key]
            out[d] = out.get(d, 0) + 1
        return out

    def trace(self, x):
        """Frobenius trace: total coefficient of the loops.

        The induced pairing (a, b) -> trace(a*b) is perfect.
        """
        t = self.field.zero
        for i in range(1, self.params.n + 1):
            t = t + x.coeff(("l", i))
        return t

    def gram_matrix(self):
        """Matrix of trace(x*y) over the full basis."""
        elems = [self.from_key(k) for k in self.basis]
        return [[self.trace(x * y) for y in elems] for x in elems]

    def invert_local(self, x):
        """Inverse of x in e_v A e_v, for x with nonzero idempotent part.

        x = c*e_v + m*l_v with c != 0 has inverse (1/c)*e_v - (m/c^2)*l_v.
        Returns None when no such inverse exists.
        """
        verts = {self.src[k] for k in x.coeffs}
        if len(verts) != 1:
            return None
        v = verts.pop()
        if {self.tgt[k] for k in x.coeffs} != {v}:
            return None
        c = x.coeff(("e", v))
        if not c:
            return None
        m = x.coeff(("l", v))
        coeffs = {("e", v): 1 / c}
        lm = -m / (c * c)
        if lm:
            coeffs[("l", v)] = lm
        return AlgebraElement(self, coeffs)

    # ------------------------------------------------------------------
    # serialization (debugging surface for the CLI)

    def describe(self):
        table = {}
        for (x, y), z in self.table.items():
            table["%s.%s" % (key_str(x), key_str(y))] = key_str(z)
        return {
            "n": self.params.n,
            "N": self.params.N,
            "edge_degrees": list(self.params.edge_degrees),
            "field": "Q" if self.field.char is None else "F%d" % self.field.char,
            "basis": [
                {
                    "path": key_str(k),
                    "degree": self.deg[k],
                    "source": self.src[k],
                    "target": self.tgt[k],
                }
                for k in self.basis
            ],
            "products": dict(sorted(table.items())),
        }

    def __repr__(self):
        return "ZigzagAlgebra(n=%d, N=%d, d=%s)" % (
            self.params.n,
            self.params.N,
            list(self.params.edge_degrees),
        )
