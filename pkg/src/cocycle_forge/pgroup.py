"""PSL2(q) and friends as fully enumerated permutation groups.

Permutations are integer arrays ``img`` with ``img[i]`` the image of point
``i``.  Groups act on the right and products compose left to right, so for
elements ``g, h`` the product ``gh`` is "apply g, then h" and its image array
is ``h[g]``.

Every :class:`GroupTable` is enumerated by breadth-first search over the
Cayley graph from the identity, multiplying on the right by the generators
in their given order.  Element 0 is always the identity and the BFS tree is
kept (``parent``, ``parent_gen``), so that each element ``x != 1`` satisfies
``x = parent[x] * generator[parent_gen[x]]``.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import FieldElement, FieldSpec, enumerate_field, frobenius, is_prime, primitive_element

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class ProjPoint:
    """Normalized homogeneous coordinates [a:b]: b == 1, or (a, b) == (1, 0)."""

    a: FieldElement
    b: FieldElement

    @classmethod
    def normalize(cls, a: FieldElement, b: FieldElement) -> "ProjPoint":
        if b:
            return cls(a / b, b.spec.one())
        if not a:
            raise ValueError("[0:0] is not a projective point")
        return cls(a.spec.one(), a.spec.zero())

    @property
    def is_infinity(self) -> bool:
        return not self.b

    def __repr__(self):
        return "[1:0]" if self.is_infinity else f"[{self.a!r}:1]"


def projective_line(spec: FieldSpec) -> list[ProjPoint]:
    """[1:0] first, then [x:1] in field enumeration order."""
    one = spec.one()
    return [ProjPoint(one, spec.zero())] + [ProjPoint(x, one) for x in enumerate_field(spec)]


def point_index(pt: ProjPoint) -> int:
    return 0 if pt.is_infinity else 1 + pt.a.index


def mobius_perm(spec: FieldSpec, a, b, c, d) -> np.ndarray:
    """Permutation of the projective line induced by z -> (az + b)/(cz + d).

    Coefficients are field indices.  The matrix must be invertible.
    """
    t = spec.tables
    if t.add[t.mul[a, d], t.neg[t.mul[b, c]]] == 0:
        raise ValueError("singular Mobius matrix")
    q = spec.order
    img = np.empty(q + 1, dtype=np.int32)
    # [z:1] -> [az+b : cz+d]; infinity = [1:0] -> [a : c]
    img[0] = 0 if c == 0 else 1 + t.mul[a, t.inv[c]]
    for x in range(q):
        num = t.add[t.mul[a, x], b]
        den = t.add[t.mul[c, x], d]
        img[1 + x] = 0 if den == 0 else 1 + t.mul[num, t.inv[den]]
    return img


def perm_order(img: np.ndarray) -> int:
    seen = np.zeros(len(img), dtype=bool)
    order = 1
    for start in range(len(img)):
        if seen[start]:
            continue
        n = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = img[j]
            n += 1
        order = order * n // math.gcd(order, n)
    return order


class GroupTable:
    """A finite permutation group with canonical BFS indexing."""

    def __init__(self, perms, generators, parent, parent_gen, *, q=None, p=None, parent_index=None):
        self.perms = np.ascontiguousarray(perms, dtype=np.int32)
        self.perms.setflags(write=False)
        self.generators = list(generators)
        self.parent = np.asarray(parent, dtype=np.int64)
        self.parent_gen = np.asarray(parent_gen, dtype=np.int64)
        self.q = q
        self.p = p
        # position of each element inside an ambient group, for subgroups
        self.parent_index = None if parent_index is None else np.asarray(parent_index, dtype=np.int64)
        self._build_lookup()

    # -- construction --

    @classmethod
    def from_generators(cls, gens, *, cap=ENUMERATION_CAP, **meta) -> "GroupTable":
        gens = [np.asarray(g, dtype=np.int32) for g in gens]
        if not gens:
            raise ValueError("need at least one generator")
        deg = len(gens[0])
        ident = np.arange(deg, dtype=np.int32)
        elements = [ident]
        index = {ident.tobytes(): 0}
        parent = [-1]
        parent_gen = [-1]
        queue = deque([0])
        while queue:
            x = queue.popleft()
            gx = elements[x]
            for k, s in enumerate(gens):
                y = s[gx]
                key = y.tobytes()
                if key not in index:
                    if len(elements) >= cap:
                        raise ValueError(f"group enumeration exceeds cap {cap}")
                    index[key] = len(elements)
                    elements.append(y)
                    parent.append(x)
                    parent_gen.append(k)
                    queue.append(len(elements) - 1)
        gen_idx = [index[s.tobytes()] for s in gens]
        return cls(np.array(elements), gen_idx, parent, parent_gen, **meta)

    def _build_lookup(self):
        n, deg = self.perms.shape
        # smallest prefix of points whose images separate all elements
        for k in range(1, deg + 1):
            codes = self._encode(self.perms[:, :k])
            if len(np.unique(codes)) == n:
                break
        self._base = k
        order = np.argsort(codes, kind="stable")
        self._codes = codes[order]
        self._code_pos = order

    def _encode(self, imgs):
        deg = self.perms.shape[1]
        codes = np.zeros(imgs.shape[0], dtype=np.int64)
        for j in range(imgs.shape[1]):
            codes = codes * deg + imgs[:, j]
        return codes

    # -- basic queries --

    def __len__(self):
        return self.perms.shape[0]

    @property
    def order(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    identity = 0

    def __getitem__(self, i) -> np.ndarray:
        return self.perms[i]

    def lookup(self, imgs) -> np.ndarray:
        """Indices of the given permutations (rows); raises if any is missing."""
        imgs = np.atleast_2d(np.asarray(imgs))
        codes = self._encode(imgs[:, : self._base])
        pos = np.searchsorted(self._codes, codes)
        pos = np.minimum(pos, len(self._codes) - 1)
        idx = self._code_pos[pos]
        if not (np.array_equal(self._codes[pos], codes) and np.array_equal(self.perms[idx], imgs)):
            raise KeyError("permutation not in group")
        return idx

    def index_of(self, img) -> int:
        return int(self.lookup(img)[0])

    def contains(self, img) -> bool:
        try:
            self.lookup(img)
        except KeyError:
            return False
        return True

    def mul(self, i, j):
        return self.mul_table[i, j]

    @cached_property
    def mul_table(self) -> np.ndarray:
        n = len(self)
        table = np.empty((n, n), dtype=np.int32)
        base = self.perms[:, : self._base]
        for j in range(n):
            table[:, j] = self._lookup_prefix(self.perms[j][base])
        table.setflags(write=False)
        return table

    def _lookup_prefix(self, prefix):
        # elements are determined by the images of the base points
        codes = self._encode(prefix)
        pos = np.searchsorted(self._codes, codes)
        return self._code_pos[pos]

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = self.lookup(np.argsort(self.perms, axis=1))
        inv.setflags(write=False)
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([perm_order(g) for g in self.perms], dtype=np.int64)

    def word(self, x: int) -> list[int]:
        """Generator positions w with x = gen[w0] gen[w1] ... ."""
        w = []
        while x != 0:
            w.append(int(self.parent_gen[x]))
            x = int(self.parent[x])
        return w[::-1]

    def bfs_depth_one(self) -> np.ndarray:
        """Elements whose BFS parent is the identity (the distinct generators)."""
        return np.flatnonzero(self.parent == 0)

    def conjugation_map(self, c) -> np.ndarray:
        """Index map g -> c^-1 g c for a permutation c normalizing the group."""
        c = np.asarray(c)
        cinv = np.argsort(c)
        conj = c[self.perms[:, cinv]]
        try:
            return self.lookup(conj)
        except KeyError:
            raise ValueError("permutation does not normalize the group") from None

    def subgroup(self, members) -> "GroupTable":
        """Subgroup on the given element indices, re-indexed canonically."""
        members = sorted(set(int(m) for m in members))
        gens = []
        span = {0}
        for m in members:
            if m not in span:
                gens.append(m)
                span = self.closure(gens)
        if span != set(members):
            raise ValueError("members do not form a subgroup")
        if not gens:
            gens = [0]
        sub = GroupTable.from_generators([self.perms[g] for g in gens], q=self.q, p=self.p)
        ambient = self.lookup(sub.perms)
        if self.parent_index is not None:
            ambient = self.parent_index[ambient]
        sub.parent_index = ambient
        return sub

    def closure(self, gens) -> set[int]:
        table = self.mul_table
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = int(table[x, s])
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen

    # -- serialization --

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "degree": self.degree,
            "elements": self.perms.tolist(),
            "generators": list(self.generators),
        }

    @classmethod
    def from_json(cls, obj) -> "GroupTable":
        if isinstance(obj, str):
            obj = json.loads(obj)
        perms = np.array(obj["elements"], dtype=np.int32)
        gens = [perms[g] for g in obj["generators"]]
        table = cls.from_generators(gens, q=obj.get("q"), p=obj.get("p"))
        if not np.array_equal(table.perms, perms):
            raise ValueError("element list is not in canonical BFS order")
        return table

    def __repr__(self):
        return f"GroupTable(order={len(self)}, degree={self.degree}, q={self.q})"


# -- PSL2(q) family --

def _check_q(spec: FieldSpec):
    if spec.order < 4:
        raise ValueError("q must be at least 4")


def _field_gen_index(spec: FieldSpec) -> int:
    return primitive_element(spec).index


def psl2_generators(spec: FieldSpec) -> list[np.ndarray]:
    """z -> z+1, z -> zeta^2 z, z -> -1/z."""
    t = spec.tables
    z = _field_gen_index(spec)
    one, zero = 1, 0
    return [
        mobius_perm(spec, one, one, zero, one),
        mobius_perm(spec, t.mul[z, z], zero, zero, one),
        mobius_perm(spec, zero, t.neg[one], one, zero),
    ]


def psl2(spec: FieldSpec, *, p=None, cap=ENUMERATION_CAP) -> GroupTable:
    _check_q(spec)
    return GroupTable.from_generators(psl2_generators(spec), cap=cap, q=spec.order, p=p)


def diagonal_outer(spec: FieldSpec) -> np.ndarray:
    """z -> zeta z; lies outside PSL2(q) exactly when q is odd."""
    return mobius_perm(spec, _field_gen_index(spec), 0, 0, 1)


def pgl2(spec: FieldSpec, *, cap=ENUMERATION_CAP) -> GroupTable:
    _check_q(spec)
    gens = psl2_generators(spec)
    gens[1] = diagonal_outer(spec)
    return GroupTable.from_generators(gens, cap=cap, q=spec.order)


def pgl2_coset_reps(spec: FieldSpec, *, cap=ENUMERATION_CAP) -> list[np.ndarray]:
    """All elements of PGL2(q) as permutations of the projective line."""
    return list(pgl2(spec, cap=cap).perms)


def frobenius_perm(spec: FieldSpec) -> np.ndarray:
    pts = projective_line(spec)
    return np.array(
        [point_index(ProjPoint.normalize(frobenius(pt.a), frobenius(pt.b))) for pt in pts],
        dtype=np.int32,
    )


def point_stabilizer(G: GroupTable, point_index: int = 0) -> GroupTable:
    members = np.flatnonzero(G.perms[:, point_index] == point_index)
    return G.subgroup(members)


# -- abelian invariants --

def derived_subgroup(G: GroupTable) -> set[int]:
    table, inv = G.mul_table, G.inverse
    gens = list(G.generators)

    def comm(a, b):
        return int(table[table[inv[a], inv[b]], table[a, b]])

    normal_gens = {comm(a, b) for a in gens for b in gens} - {0}
    N = G.closure(normal_gens)
    changed = True
    while changed:
        changed = False
        for n in list(normal_gens):
            for g in gens:
                c = int(table[table[inv[g], n], g])
                if c not in N:
                    normal_gens.add(c)
                    N = G.closure(normal_gens)
                    changed = True
    return N


def coset_labels(G: GroupTable, N) -> np.ndarray:
    """label[g] = smallest index in the coset gN."""
    table = G.mul_table
    N = np.array(sorted(N), dtype=np.int64)
    label = np.full(len(G), -1, dtype=np.int64)
    for g in range(len(G)):
        if label[g] < 0:
            label[table[g, N]] = g
    return label


def _prime_factors(n):
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariants(orders: np.ndarray) -> list[int]:
    """Invariant factors of a finite abelian group given all its element orders."""
    size = len(orders)
    parts = []  # per prime, exponents of cyclic factors
    for r in _prime_factors(size):
        counts = []
        k = 0
        while True:
            cnt = int(np.sum((r**k) % orders == 0))
            counts.append(round(math.log(cnt, r)))
            if cnt == size or (k > 0 and counts[-1] == counts[-2]):
                break
            k += 1
        at_least = [counts[i] - counts[i - 1] for i in range(1, len(counts))]
        exps = []
        for i, n_ge in enumerate(at_least):
            n_next = at_least[i + 1] if i + 1 < len(at_least) else 0
            exps += [i + 1] * (n_ge - n_next)
        parts.append((r, sorted(exps, reverse=True)))
    width = max((len(e) for _, e in parts), default=0)
    factors = [1] * width
    for r, exps in parts:
        for i, e in enumerate(exps):
            factors[i] *= r**e
    return sorted(f for f in factors if f > 1)


def abelianization(G: GroupTable) -> list[int]:
    """Invariant factors of G/G', ascending; [] for a perfect group."""
    N = derived_subgroup(G)
    label = coset_labels(G, N)
    reps = np.unique(label)
    table = G.mul_table
    orders = []
    for g in reps:
        x, k = g, 1
        while label[x] != 0:
            x = table[x, g]
            k += 1
        orders.append(k)
    return abelian_invariants(np.array(orders, dtype=np.int64))


def find_class_element(G: GroupTable, order: int) -> int:
    hits = np.flatnonzero(G.element_orders == order)
    if len(hits) == 0:
        raise ValueError(f"no element of order {order}")
    return int(hits[0])


def validate_qp(q: int, p: int) -> FieldSpec:
    """Check the standing hypothesis 2 != p | q - 1 and return F_q."""
    from .gf import field_of_order

    spec = field_of_order(q)
    if q < 4:
        raise ValueError("q must be at least 4")
    if not is_prime(p) or p == 2:
        raise ValueError(f"p = {p} must be an odd prime")
    if (q - 1) % p:
        raise ValueError(f"p = {p} does not divide q - 1 = {q - 1}")
    return spec


def cyclic_group(n: int) -> GroupTable:
    """Z_n acting regularly on n points; element k is the rotation by k."""
    gen = np.roll(np.arange(n, dtype=np.int32), -1) if n > 1 else np.zeros(1, dtype=np.int32)
    return GroupTable.from_generators([gen])
